"""Command-line interface tests, driven in-process through dispatch()."""

import json

import pytest

from toybit.cli import DEFAULT_SEED, dispatch


def run(capsys, *argv):
    code = dispatch(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_verify_single_claim_text(capsys):
    code, out, _ = run(capsys, "verify", "--claim", "single-bit-group",
                       "--format", "text")
    assert code == 0
    assert "single-bit-group" in out and "VERIFIED" in out


def test_verify_json_shape(capsys):
    code, out, _ = run(capsys, "verify", "--claim", "partitions",
                       "--claim", "hypercube-geometry", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert [r["claim"] for r in payload] == ["partitions",
                                             "hypercube-geometry"]
    assert all(r["status"] == "verified" for r in payload)


def test_verify_unknown_claim_exits_2(capsys):
    code, _, err = run(capsys, "verify", "--claim", "bogus")
    assert code == 2
    assert "bogus" in err


def test_bad_subcommand_exits_2(capsys):
    assert dispatch(["frobnicate"]) == 2
    capsys.readouterr()


def test_enumerate_with_invariants(capsys):
    code, out, _ = run(capsys, "enumerate", "--group", "s4",
                       "--histogram", "--classes")
    assert code == 0
    payload = json.loads(out)
    assert payload["order"] == 24
    assert payload["element_order_histogram"] == {"1": 1, "2": 9,
                                                  "3": 8, "4": 6}
    assert payload["class_sizes"] == [1, 3, 6, 6, 8]


def test_enumerate_a4(capsys):
    code, out, _ = run(capsys, "enumerate", "--group", "a4")
    assert json.loads(out)["order"] == 12 and code == 0


def test_measure_exact_and_deterministic(capsys):
    argv = ["measure", "--state", '{"n": 1, "support": [0, 1]}',
            "--partition", '{"cells": [[0, 2], [1, 3]]}',
            "--shots", "400"]
    code, out1, _ = run(capsys, *argv)
    assert code == 0
    assert "1/2" in out1
    assert "repeat consistency: 400/400" in out1
    _, out2, _ = run(capsys, *argv)
    assert out2 == out1  # same default seed, same transcript
    code, out3, _ = run(capsys, "--seed", "99", *argv)
    assert code == 0 and out3 != out1


def test_measure_seed_env(capsys, monkeypatch):
    monkeypatch.setenv("TOYBIT_SEED", "0x2A")
    argv = ["measure", "--state", '{"n": 1, "support": [0, 1]}',
            "--partition", '{"cells": [[0, 2], [1, 3]]}', "--shots", "50"]
    _, out_env, _ = run(capsys, *argv)
    monkeypatch.delenv("TOYBIT_SEED")
    _, out_flag, _ = run(capsys, "--seed", "42", *argv)
    assert out_env == out_flag
    assert hex(DEFAULT_SEED) != "0x2a"


def test_measure_mismatched_sizes_exits_2(capsys):
    code, _, err = run(capsys, "measure", "--state",
                       '{"n": 2, "support": [0, 1, 4, 5]}',
                       "--partition", '{"cells": [[0, 2], [1, 3]]}',
                       "--shots", "10")
    assert code == 2 and "error" in err


def test_correlate_positive_and_negative(capsys):
    code, out, _ = run(capsys, "correlate", "--state",
                       '{"n": 2, "support": [0, 5, 10, 15]}')
    assert code == 0 and "perfectly correlated" in out
    code, out, _ = run(capsys, "correlate", "--state",
                       '{"n": 2, "support": [0, 1, 4, 5]}')
    assert code == 0 and out.strip() == "not perfectly correlated"


def test_euler_rotation_and_reflection(capsys):
    code, out, _ = run(capsys, "euler", "--perm", "(123)(4)")
    assert code == 0
    assert "theta=pi phi=-pi/2 psi=-pi/2" in out
    code, out, _ = run(capsys, "euler", "--perm", "(12)(3)(4)")
    assert code == 1
    assert "reflection" in out


def test_export_states_json_and_csv(capsys, tmp_path):
    code, out, _ = run(capsys, "export", "--what", "states", "--bits", "1")
    assert code == 0
    assert len(json.loads(out)) == 6
    dest = tmp_path / "states.csv"
    code, _, _ = run(capsys, "export", "--what", "states", "--bits", "2",
                     "--format", "csv", "--out", str(dest))
    assert code == 0
    lines = dest.read_text().strip().splitlines()
    assert lines[0].startswith("n,")
    assert len(lines) == 1 + 60 + 31  # header + pure + mixed catalog


def test_export_partitions_count(capsys):
    code, out, _ = run(capsys, "export", "--what", "partitions")
    assert code == 0
    assert len(json.loads(out)) == 105


def test_export_cayley_dot(capsys):
    code, out, _ = run(capsys, "export", "--what", "cayley",
                       "--group", "a4", "--format", "dot")
    assert code == 0
    assert out.startswith("digraph")
    # 12 nodes and one edge per (element, generator) pair.
    assert out.count(" -> ") == 12 * 2
