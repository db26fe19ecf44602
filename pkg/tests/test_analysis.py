"""Claim-registry tests (light claims only; heavy ones run in acceptance)."""

import pytest

from toybit.analysis import (CLAIMS, ClaimReport, UnknownClaim,
                             detect_perfect_correlation, run_all,
                             verify_axis_coordinatization,
                             verify_correlation_test,
                             verify_hypercube_geometry,
                             verify_invalid_extension, verify_partitions,
                             verify_single_bit_group,
                             verify_single_bit_isomorphism)
from toybit.states import make_epistemic

LIGHT = ["single-bit-group", "axis-coordinatization",
         "single-bit-isomorphism", "invalid-extension", "correlation-test",
         "partitions", "hypercube-geometry"]


def test_registry_contents():
    assert list(CLAIMS) == ["single-bit-group", "axis-coordinatization",
                            "single-bit-isomorphism", "two-bit-isomorphism",
                            "two-bit-nonisomorphism", "invalid-extension",
                            "correlation-test", "partitions",
                            "hypercube-geometry"]


@pytest.mark.parametrize("claim_id", LIGHT)
def test_light_claims_verified(claim_id):
    report = CLAIMS[claim_id]()
    assert isinstance(report, ClaimReport)
    assert report.claim_id == claim_id
    assert report.status == "verified"
    assert report.computed == report.expected["value"]
    assert report.wall_time_ms >= 0


def test_report_json_shape():
    obj = verify_single_bit_group().to_json()
    assert set(obj) == {"claim", "status", "expected", "computed",
                        "witness", "ms"}
    assert obj["status"] == "verified"
    assert "provenance" in obj["expected"]


def test_run_all_order_and_selection():
    reports = run_all(["partitions", "single-bit-group"])
    # Registry order is preserved regardless of request order.
    assert [r.claim_id for r in reports] == ["single-bit-group", "partitions"]


def test_run_all_unknown_claim():
    with pytest.raises(UnknownClaim):
        run_all(["partitions", "no-such-claim"])


def test_axis_coordinatization_anchors():
    report = verify_axis_coordinatization()
    anchors = report.computed["anchors"]
    assert anchors["(12)"] == [[0, 0, 0], [1, 0, 2]]
    assert anchors["(23)"] == [[0, 0, 0], [2, 1, 0]]
    assert anchors["(34)"] == [[1, 1, 0], [1, 0, 2]]
    assert report.computed["image_size"] == 24


def test_correlation_counts():
    report = verify_correlation_test()
    assert report.computed == {"inputs": 91, "positives": 24,
                               "mismatches": 0}


def test_detect_perfect_correlation_examples():
    correlated = make_epistemic(2, [0, 5, 10, 15])   # matched pairs
    product = make_epistemic(2, [0, 1, 4, 5])
    assert detect_perfect_correlation(correlated) is not None
    assert detect_perfect_correlation(product) is None


def test_invalid_extension_details():
    report = verify_invalid_extension()
    assert report.status == "verified"
    assert report.computed["h_extension_invalid"] is True
    assert report.computed["all_correlated_variants_invalid"] is True


def test_partition_and_hypercube_counts():
    assert verify_partitions().computed["count"] == 105
    assert verify_hypercube_geometry().computed == {"states": 60,
                                                    "planar": 60}


def test_single_bit_isomorphism_orders():
    report = verify_single_bit_isomorphism()
    assert report.computed["clifford_order"] == 48
    assert report.computed["toy_order"] == 48
    assert report.computed["same_permutations"] is True
