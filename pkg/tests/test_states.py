"""State catalog, validity rules, measurement partitions, sampling."""

from __future__ import annotations

from fractions import Fraction

import pytest

from toybit.states import (DimensionMismatch, EpistemicState,
                           InvalidPartition, InvalidSupport,
                           KnowledgeBalanceViolation, MeasurementPartition,
                           NotInCatalog, correlated_states,
                           enumerate_partitions, is_perfectly_correlated,
                           make_epistemic, measure, mixed_catalog,
                           outcome_probability, pure_states, sample_state,
                           tensor)


def test_single_bit_pure_states():
    masks = sorted(s.mask for s in pure_states(1))
    assert masks == [0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]


def test_single_bit_full_mix_is_valid():
    s = make_epistemic(1, [0, 1, 2, 3])
    assert s.size == 4 and not s.is_pure


def test_single_bit_singleton_violates_knowledge_balance():
    with pytest.raises(KnowledgeBalanceViolation):
        make_epistemic(1, [2])


def test_single_bit_size_three_rejected():
    with pytest.raises(InvalidSupport):
        make_epistemic(1, [0, 1, 2])


def test_two_bit_pure_catalog_counts():
    pures = pure_states(2)
    assert len(pures) == 60
    products = [s for s in pures if not is_perfectly_correlated(s)]
    patterns = [s for s in pures if is_perfectly_correlated(s)]
    assert len(products) == 36
    assert len(patterns) == 24
    assert len(correlated_states()) == 24


def test_two_bit_mixed_catalog_count():
    assert len(mixed_catalog()) == 31


def test_two_bit_marginal_violation():
    # all four cells in one row: second bit fully known -> violation
    with pytest.raises(KnowledgeBalanceViolation):
        make_epistemic(2, [0, 1, 2, 3])


def test_two_bit_off_catalog_size4_rejected():
    with pytest.raises(NotInCatalog):
        make_epistemic(2, [0, 1, 5, 6])


def test_tensor_of_pure_states():
    a = make_epistemic(1, [0, 1])
    b = make_epistemic(1, [2, 3])
    ab = tensor(a, b)
    assert ab.n_bits == 2
    assert set(ab.support) == {4 * i + j for i in (0, 1) for j in (2, 3)}


def test_partition_enumeration_count():
    parts = enumerate_partitions()
    assert len(parts) == 105
    assert len({tuple(sorted(c.mask for c in p.cells))
                for p in parts}) == 105


def test_partition_rejects_overlap():
    a = make_epistemic(1, [0, 1])
    with pytest.raises(InvalidPartition):
        MeasurementPartition.of([a, a])


def test_partition_rejects_partial_cover():
    a = make_epistemic(1, [0, 1])
    with pytest.raises(InvalidPartition):
        MeasurementPartition.of([a])


def test_outcome_probability_exact():
    state = make_epistemic(1, [0, 1])
    cell = make_epistemic(1, [0, 2])
    assert outcome_probability(cell, state) == Fraction(1, 2)
    assert outcome_probability(state, state) == 1


def test_outcome_probability_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        outcome_probability(make_epistemic(1, [0, 1]),
                            make_epistemic(2, [0, 5, 10, 15]))


def test_sampling_is_deterministic():
    state = make_epistemic(1, [1, 3])
    a = sample_state(state, seed=42)
    b = sample_state(state, seed=42)
    assert a.ontic == b.ontic
    assert state.contains(a.ontic)


def test_measurement_repeatability_and_collapse():
    state = make_epistemic(1, [0, 1])
    part = MeasurementPartition.of(
        [make_epistemic(1, [0, 2]), make_epistemic(1, [1, 3])])
    for seed in range(50):
        sample = sample_state(state, seed)
        k1, after = measure(part, sample)
        assert after.epistemic == part.cells[k1]
        k2, _ = measure(part, after)
        assert k1 == k2


def test_measurement_disturbs_hidden_variable():
    state = make_epistemic(1, [0, 1])
    part = MeasurementPartition.of(
        [make_epistemic(1, [0, 2]), make_epistemic(1, [1, 3])])
    moved = 0
    for seed in range(200):
        sample = sample_state(state, seed)
        _, after = measure(part, sample)
        moved += after.ontic != sample.ontic
    # resampling within the outcome cell moves the ontic state about
    # half the time
    assert 0 < moved < 200


def test_state_json_round_trip():
    s = make_epistemic(2, [0, 5, 10, 15])
    assert EpistemicState.from_json(s.to_json()) == s


def test_render_shapes():
    assert make_epistemic(1, [0, 1]).render() == "# # . ."
    grid = make_epistemic(2, [0, 5, 10, 15]).render().splitlines()
    assert len(grid) == 4 and grid[0] == "# . . ."
