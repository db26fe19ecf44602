"""Acceptance suite: thirteen budgeted end-to-end checks.

Each test prints exactly one PASS/FAIL line (visible with ``pytest -s``
or in captured output) and enforces its wall-clock budget.  Expensive
groups are built once through the shared caches in
:mod:`toybit.analysis`, so a criterion pays for a build only the first
time it is needed.
"""

import itertools
import time

from toybit import analysis
from toybit.analysis import (_clifford_group, _linear_group,
                             _single_bit_group, _spekkens_two_bit_group,
                             _two_bit_group)
from toybit.clifford import (bloch_action, compose_euler, euler_decompose,
                             toy_action_on_states)
from toybit.groups import Perm, closure, set_stabilizer
from toybit.states import (empirical_frequencies, enumerate_partitions,
                           measure, outcome_probability, pure_states,
                           sample_state)
from toybit.rng import derive_seed
from toybit.toyops import H_TILDE, SQRTZ_TILDE, s4_matrices


def _run(num, budget, description, fn):
    start = time.time()
    try:
        fn()
    except BaseException:
        elapsed = time.time() - start
        print(f"criterion {num:02d} FAIL {elapsed:5.1f}s "
              f"(budget {budget}s): {description}")
        raise
    elapsed = time.time() - start
    print(f"criterion {num:02d} PASS {elapsed:5.1f}s "
          f"(budget {budget}s): {description}")
    assert elapsed < budget, f"criterion {num} exceeded {budget}s budget"


def test_criterion_01_permutation_groups():
    def check():
        s4 = closure([Perm.from_cycles([(0, 1)], 4),
                      Perm.from_cycles([(0, 1, 2, 3)], 4)])
        a4 = closure([Perm.from_cycles([(0, 1, 2)], 4),
                      Perm.from_cycles([(1, 2, 3)], 4)])
        assert s4.order == 24 and a4.order == 12
        stab = set_stabilizer(4, [s.support for s in pure_states(1)])
        assert stab.same_elements(s4)

    _run(1, 1, "|S4|=24, |A4|=12; S4 stabilizes the six pure supports",
         check)


def test_criterion_02_single_bit_relaxed_group():
    def check():
        # Brute force: permutations of the six states that preserve the
        # three antipodal pairs.
        pairs = [(0, 1), (2, 3), (4, 5)]
        preserving = [p for p in itertools.permutations(range(6))
                      if all(tuple(sorted((p[a], p[b]))) in pairs
                             for a, b in pairs)]
        assert len(preserving) == 48
        lvg1 = _linear_group(1)
        assert lvg1.order == 48
        induced = {toy_action_on_states(m).images for m in lvg1}
        assert induced == set(preserving)
        rebuilt = closure(s4_matrices() + [H_TILDE, SQRTZ_TILDE])
        assert rebuilt.same_elements(lvg1)

    _run(2, 1, "48 antipodal-preserving maps = linear group = "
               "permutations + H + sqrt(Z)", check)


def test_criterion_03_axis_coordinatization():
    def check():
        report = analysis.verify_axis_coordinatization()
        assert report.status == "verified"
        assert report.computed["image_size"] == 24
        assert sorted(report.computed["weights"]) == [0, 2]

    _run(3, 1, "permutation image in the flip-rotation coordinates is "
               "the 24 weight-{0,2} elements", check)


def test_criterion_04_single_bit_isomorphism():
    def check():
        assert _clifford_group(1, False).order == 24
        assert _clifford_group(1, True).order == 48
        report = analysis.verify_single_bit_isomorphism()
        assert report.status == "verified"

    _run(4, 1, "|C(1)/U(1)|=24, |EC(1)/U(1)|=48; same action on six "
               "states", check)


def test_criterion_05_original_two_bit_group():
    def check():
        spek = _spekkens_two_bit_group()
        assert spek.order == 11520
        payload = {m.as_permutation().key() for m in _linear_group(2)
                   if m.as_permutation() is not None}
        assert payload == set(spek.elements)

    _run(5, 60, "stabilizer of the sixty supports has order 11520 and "
                "equals the permutation part of the linear group", check)


def test_criterion_06_relaxed_two_bit_group():
    def check():
        by_generators = _two_bit_group()
        independent = _linear_group(2)
        assert by_generators.order == independent.order == 23040
        assert by_generators.same_elements(independent)

    _run(6, 120, "|TG(2)|=23040 by generator closure and by validity "
                 "search, with identical element sets", check)


def test_criterion_07_two_bit_isomorphism():
    def check():
        report = analysis.verify_two_bit_isomorphism()
        assert report.status == "verified"
        assert report.computed["status"] == "consistent-isomorphism"
        assert report.computed["mapped_order"] == 23040

    _run(7, 120, "generator map from EC(2)/U(1) certifies as an "
                 "isomorphism onto the relaxed group", check)


def test_criterion_08_two_bit_nonisomorphism():
    def check():
        report = analysis.verify_two_bit_nonisomorphism()
        assert report.status == "verified"
        assert report.computed["subgroup_order"] == 720
        assert report.computed["primitive"] is True
        assert report.computed["battery"] is True

    _run(8, 120, "order-720 subgroup with primitive degree-16 action; "
                 "invariant battery separates the two order-11520 groups",
         check)


def test_criterion_09_partitions():
    def check():
        report = analysis.verify_partitions()
        assert report.status == "verified"
        assert report.computed["count"] == 105

    _run(9, 1, "105 measurement partitions, all cells valid pure states",
         check)


def test_criterion_10_extension_and_correlation():
    def check():
        ext = analysis.verify_invalid_extension()
        assert ext.status == "verified"
        corr = analysis.verify_correlation_test()
        assert corr.status == "verified"
        assert corr.computed["positives"] == 24

    _run(10, 30, "one-sided H extension invalid, permutation extensions "
                 "valid; correlation criterion exact on all 91 inputs",
         check)


def test_criterion_11_euler_table():
    def check():
        three_cycle = Perm.from_cycles([(0, 1, 2)], 4).matrix()
        assert euler_decompose(bloch_action(three_cycle)) == (2, -1, -1)
        assert euler_decompose(bloch_action(H_TILDE)) == (1, 1, 1)
        rotations = {bloch_action(op) for op in _single_bit_group()
                     if bloch_action(op).is_rotation}
        assert len(rotations) == 24
        for rot in rotations:
            assert compose_euler(*euler_decompose(rot)) == rot

    _run(11, 1, "published Euler angles reproduced; exact round-trip on "
                "all 24 rotations", check)


def test_criterion_12_measurement_statistics():
    def check():
        shots = 10_000
        states = pure_states(2)
        partitions = enumerate_partitions()
        worst = 0.0
        for si, state in enumerate(states):
            for pi, part in enumerate(partitions):
                seed = derive_seed(0x5EED_70B1, si, pi)
                counts = empirical_frequencies(state, part, shots, seed)
                for cell, count in zip(part.cells, counts):
                    q = outcome_probability(cell, state)
                    var = shots * q * (1 - q)
                    if var:
                        sigma = abs(count - shots * q) / float(var) ** 0.5
                        worst = max(worst, sigma)
                # Repeatability, via the per-shot path: measuring the
                # collapsed state again must reproduce the outcome.
                for shot in range(3):
                    sample = sample_state(state, derive_seed(seed, shot))
                    outcome, after = measure(part, sample)
                    again, _ = measure(part, after)
                    assert again == outcome
        assert worst < 5.0

    _run(12, 60, "empirical frequencies within 5 sigma on all 6300 "
                 "state/partition pairs; repeats always agree", check)


def test_criterion_13_hypercube():
    def check():
        report = analysis.verify_hypercube_geometry()
        assert report.status == "verified"
        assert report.computed == {"states": 60, "planar": 60}

    _run(13, 1, "all 60 pure states are affine planes of the 4-cube",
         check)
