"""Ontic and epistemic states for one and two toy bits.

A toy bit has 4 ontic cells; two toy bits have 16, indexed as 4*i + j for
row i (first bit) and column j (second bit).  An epistemic state is a
subset of cells, stored as a bitmask, subject to the knowledge balance
principle: the support can never pin down more than half of a canonical
question set, for the composite system or for either part.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

import numpy as np

from .rng import derive_seed, randrange


class ToyError(ValueError):
    """Base class for toy-model domain errors."""


class InvalidSupport(ToyError):
    """Support size is not one an epistemic state can have."""


class KnowledgeBalanceViolation(ToyError):
    """The support answers more than half of a canonical question set."""


class NotInCatalog(ToyError):
    """Support size is allowed but the subset is not a valid state."""


class DimensionMismatch(ToyError):
    """Operands describe systems of different sizes."""


class InvalidPartition(ToyError):
    """Cells fail to be disjoint valid states covering every ontic cell."""


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _bits(x: int) -> Iterator[int]:
    i = 0
    while x:
        if x & 1:
            yield i
        x >>= 1
        i += 1


@dataclass(frozen=True, order=True)
class EpistemicState:
    """A validated epistemic state; build via :func:`make_epistemic`."""

    n_bits: int
    mask: int

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(_bits(self.mask))

    @property
    def size(self) -> int:
        return _popcount(self.mask)

    @property
    def is_pure(self) -> bool:
        return self.size == 2 ** self.n_bits

    def contains(self, ontic: int) -> bool:
        return bool(self.mask >> ontic & 1)

    def indicator(self) -> np.ndarray:
        """0/1 column vector over the 4**n_bits ontic cells."""
        v = np.zeros(4 ** self.n_bits, dtype=np.int64)
        v[list(self.support)] = 1
        return v

    def to_json(self) -> dict:
        return {"n": self.n_bits, "support": list(self.support)}

    @staticmethod
    def from_json(obj: dict) -> "EpistemicState":
        return make_epistemic(obj["n"], obj["support"])

    def render(self) -> str:
        """Grid picture: one row of 4 cells, or a 4x4 grid, filled/empty."""
        if self.n_bits == 1:
            return " ".join("#" if self.contains(j) else "." for j in range(4))
        rows = []
        for i in range(4):
            rows.append(" ".join(
                "#" if self.contains(4 * i + j) else "." for j in range(4)))
        return "\n".join(rows)

    def __repr__(self) -> str:
        return f"EpistemicState(n={self.n_bits}, support={list(self.support)})"


def _row_patterns(mask: int) -> list[int]:
    return [(mask >> (4 * i)) & 0xF for i in range(4)]


def _is_product(mask: int) -> bool:
    pats = _row_patterns(mask)
    nonzero = [p for p in pats if p]
    return (len(nonzero) == 2 and nonzero[0] == nonzero[1]
            and _popcount(nonzero[0]) == 2)


def _is_pattern(mask: int) -> bool:
    """One cell in every row and every column of the 4x4 grid."""
    pats = _row_patterns(mask)
    if any(_popcount(p) != 1 for p in pats):
        return False
    return pats[0] | pats[1] | pats[2] | pats[3] == 0xF


def _is_catalog_mixed8(mask: int) -> bool:
    pats = _row_patterns(mask)
    full = [p for p in pats if p == 0xF]
    if len(full) == 2 and sum(_popcount(p) for p in pats) == 8:
        return True                                   # e_ab (x) e_1234
    if all(_popcount(p) == 2 for p in pats):
        distinct = sorted(set(pats))
        if len(distinct) == 1:
            return True                               # e_1234 (x) e_ab
        if (len(distinct) == 2 and distinct[0] & distinct[1] == 0
                and pats.count(distinct[0]) == 2):
            return True                               # disjoint product sum
    return False


def make_epistemic(n_bits: int, support: Iterable[int]) -> EpistemicState:
    """Validate a cell subset and wrap it as an epistemic state.

    Raises the specific rule violated: too-small supports (more than half
    a canonical set answered) and fully-known subsystems raise
    KnowledgeBalanceViolation; disallowed sizes raise InvalidSupport;
    allowed sizes outside the catalog of valid subsets raise NotInCatalog.
    """
    if n_bits not in (1, 2):
        raise InvalidSupport(f"n_bits must be 1 or 2, got {n_bits}")
    ncells = 4 ** n_bits
    mask = 0
    for c in support:
        if not 0 <= c < ncells:
            raise InvalidSupport(f"cell {c} out of range for {n_bits} bit(s)")
        mask |= 1 << c
    size = _popcount(mask)
    if size < 2 ** n_bits:
        raise KnowledgeBalanceViolation(
            f"support of size {size} answers more than half a canonical set")

    if n_bits == 1:
        if size == 3:
            raise InvalidSupport("single-bit support must have size 2 or 4")
        return EpistemicState(1, mask)

    if size not in (4, 8, 16):
        raise InvalidSupport("two-bit support must have size 4, 8 or 16")
    pats = _row_patterns(mask)
    row_marginal = sum(1 for p in pats if p)
    col_marginal = _popcount(pats[0] | pats[1] | pats[2] | pats[3])
    if row_marginal < 2 or col_marginal < 2:
        raise KnowledgeBalanceViolation(
            "a subsystem marginal is fully known")
    if size == 16:
        return EpistemicState(2, mask)
    if size == 4:
        if _is_product(mask) or _is_pattern(mask):
            return EpistemicState(2, mask)
        raise NotInCatalog("size-4 support is neither a product nor a "
                           "permutation pattern")
    if _is_catalog_mixed8(mask):
        return EpistemicState(2, mask)
    raise NotInCatalog("size-8 support is not in the valid-state catalog")


def try_make_epistemic(n_bits: int, support: Iterable[int]) -> EpistemicState | None:
    try:
        return make_epistemic(n_bits, support)
    except ToyError:
        return None


def tensor(a: EpistemicState, b: EpistemicState) -> EpistemicState:
    """Compose two single-bit states into the two-bit product state."""
    if a.n_bits != 1 or b.n_bits != 1:
        raise DimensionMismatch("tensor takes two single-bit states")
    cells = [4 * i + j for i in a.support for j in b.support]
    return make_epistemic(2, cells)


def pure_states(n_bits: int) -> list[EpistemicState]:
    """All pure states, ordered by ascending support mask.

    6 states for one toy bit; 60 for two (36 products plus 24 permutation
    patterns).
    """
    if n_bits == 1:
        masks = [(1 << i) | (1 << j) for i in range(4) for j in range(i + 1, 4)]
        return [EpistemicState(1, m) for m in sorted(masks)]
    if n_bits != 2:
        raise InvalidSupport(f"n_bits must be 1 or 2, got {n_bits}")
    singles = pure_states(1)
    found = {tensor(a, b).mask for a in singles for b in singles}
    import itertools
    for cols in itertools.permutations(range(4)):
        found.add(sum(1 << (4 * i + cols[i]) for i in range(4)))
    return [EpistemicState(2, m) for m in sorted(found)]


def correlated_states() -> list[EpistemicState]:
    """The 24 permutation-pattern pure two-bit states."""
    return [s for s in pure_states(2) if _is_pattern(s.mask)]


def mixed_catalog() -> list[EpistemicState]:
    """All valid mixed two-bit states: 30 of size 8 plus the full state."""
    out = []
    import itertools
    for cells in itertools.combinations(range(16), 8):
        mask = sum(1 << c for c in cells)
        if _is_catalog_mixed8(mask):
            out.append(EpistemicState(2, mask))
    out.append(EpistemicState(2, 0xFFFF))
    return sorted(out)


def is_perfectly_correlated(state: EpistemicState) -> bool:
    """True exactly for the 24 pure permutation-pattern states."""
    if state.n_bits != 2:
        raise DimensionMismatch("perfect correlation concerns two-bit states")
    return state.size == 4 and _is_pattern(state.mask)


def state_from_scaled_vector(n_bits: int, vec: np.ndarray,
                             denom: int) -> EpistemicState | None:
    """Interpret vec/denom as an indicator vector of a valid state.

    Returns None when any entry is outside {0, denom} or the support is
    not a valid epistemic state.
    """
    support = []
    for i, x in enumerate(vec):
        if x == denom:
            support.append(i)
        elif x != 0:
            return None
    return try_make_epistemic(n_bits, support)


@dataclass(frozen=True)
class MeasurementPartition:
    """Disjoint valid epistemic states covering all ontic cells."""

    n_bits: int
    cells: tuple[EpistemicState, ...]

    @staticmethod
    def of(cells: Sequence[EpistemicState]) -> "MeasurementPartition":
        if not cells:
            raise InvalidPartition("a partition needs at least one cell")
        n = cells[0].n_bits
        union = 0
        for c in cells:
            if c.n_bits != n:
                raise InvalidPartition("cells mix system sizes")
            if union & c.mask:
                raise InvalidPartition("cells overlap")
            union |= c.mask
        if union != (1 << 4 ** n) - 1:
            raise InvalidPartition("cells do not cover every ontic cell")
        return MeasurementPartition(n, tuple(sorted(cells)))

    def outcome_of(self, ontic: int) -> int:
        for k, c in enumerate(self.cells):
            if c.contains(ontic):
                return k
        raise InvalidPartition(f"no cell contains ontic state {ontic}")

    def to_json(self) -> dict:
        return {"cells": [c.to_json() for c in self.cells]}

    @staticmethod
    def from_json(obj: dict) -> "MeasurementPartition":
        return MeasurementPartition.of(
            [EpistemicState.from_json(c) for c in obj["cells"]])


def outcome_probability(cell: EpistemicState, state: EpistemicState) -> Fraction:
    """Exact probability that a measurement outcome is ``cell``.

    |cell & state| / |state|; for pure single-bit states this is the
    familiar half-overlap rule.
    """
    if cell.n_bits != state.n_bits:
        raise DimensionMismatch("cell and state sizes differ")
    return Fraction(_popcount(cell.mask & state.mask), state.size)


@dataclass(frozen=True)
class OnticSample:
    """A hidden variable tracked alongside an epistemic description.

    ``step`` counts random draws so far; together with ``rng_seed`` it
    fixes the whole future stream.
    """

    ontic: int
    epistemic: EpistemicState
    rng_seed: int
    step: int = 0

    def __post_init__(self):
        if not self.epistemic.contains(self.ontic):
            raise ToyError("ontic state outside the epistemic support")


def sample_state(state: EpistemicState, seed: int) -> OnticSample:
    """Draw a hidden variable uniformly from the support of ``state``."""
    support = state.support
    k = randrange(derive_seed(seed, 0), len(support))
    return OnticSample(support[k], state, seed, step=1)


def measure(partition: MeasurementPartition,
            sample: OnticSample) -> tuple[int, OnticSample]:
    """Measure: read off the outcome cell, then disturb the hidden variable.

    The outcome is the unique cell containing the ontic state.  The
    epistemic state collapses to that cell and the ontic state is
    resampled uniformly within it, so a repeated measurement reproduces
    its outcome while an intervening incompatible measurement erases any
    extra information.
    """
    if partition.n_bits != sample.epistemic.n_bits:
        raise DimensionMismatch("partition and sample sizes differ")
    k = partition.outcome_of(sample.ontic)
    cell = partition.cells[k]
    support = cell.support
    draw = randrange(derive_seed(sample.rng_seed, sample.step), len(support))
    new = OnticSample(support[draw], cell, sample.rng_seed, sample.step + 1)
    return k, new


def empirical_frequencies(state: EpistemicState,
                          partition: MeasurementPartition,
                          shots: int, seed: int) -> list[int]:
    """Outcome counts over many seeded measurement shots, vectorized.

    Each shot draws the hidden variable uniformly from the state's
    support and reads off the containing cell, exactly as
    ``sample_state`` + ``measure`` do, but batched through one numpy
    generator so large shot counts stay fast.  Deterministic in ``seed``.
    """
    if partition.n_bits != state.n_bits:
        raise DimensionMismatch("state and partition sizes differ")
    support = np.array(state.support)
    outcome_of = np.array([partition.outcome_of(i)
                           for i in range(4 ** state.n_bits)])
    gen = np.random.default_rng(derive_seed(seed, 0))
    draws = support[gen.integers(0, len(support), size=shots)]
    counts = np.bincount(outcome_of[draws], minlength=len(partition.cells))
    return counts.tolist()


def enumerate_partitions() -> list[MeasurementPartition]:
    """All partitions of the 16 cells into four pure two-bit states.

    Ordered lexicographically by the sorted cell masks; there are 105.
    """
    pures = [s.mask for s in pure_states(2)]
    results: list[tuple[int, ...]] = []

    def extend(chosen: list[int], covered: int) -> None:
        if covered == 0xFFFF:
            results.append(tuple(chosen))
            return
        free = ~covered & 0xFFFF
        lowest = free & -free
        for m in pures:
            if m & lowest and not m & covered:
                chosen.append(m)
                extend(chosen, covered | m)
                chosen.pop()

    extend([], 0)
    out = []
    for masks in sorted(tuple(sorted(ms)) for ms in results):
        out.append(MeasurementPartition.of(
            [EpistemicState(2, m) for m in masks]))
    return out
