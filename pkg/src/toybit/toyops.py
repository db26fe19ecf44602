"""The concrete toy operations: ontic permutations, the epistemic
Hadamard/quarter-turn analogues, and the five 16x16 generator images of
the two-qubit extended Clifford generators.

All matrices are exact, entries in quarter-integers, wrapped as
:class:`~toybit.groups.ScaledMat`.
"""

from __future__ import annotations

import itertools

import numpy as np

from .groups import Perm, ScaledMat, closure, FiniteGroup

# epistemic analogues of sqrt(Z) and H: orthogonal, entries in half-integers
SQRTZ_TILDE = ScaledMat(np.array([
    [1, 1, -1, 1],
    [1, 1, 1, -1],
    [1, -1, 1, 1],
    [-1, 1, 1, 1]]), 1)

H_TILDE = ScaledMat(np.array([
    [1, 1, 1, -1],
    [1, -1, 1, 1],
    [1, 1, -1, 1],
    [-1, 1, 1, 1]]), 1)


def perm_matrix(perm: Perm) -> ScaledMat:
    return perm.matrix()


def s4_permutations() -> list[Perm]:
    """All ontic permutations of one toy bit, lexicographic by images."""
    return [Perm(p) for p in itertools.permutations(range(4))]


def s4_matrices() -> list[ScaledMat]:
    return [p.matrix() for p in s4_permutations()]


def single_bit_group() -> FiniteGroup:
    """The relaxed single-bit operation group (order 48) by closure."""
    gens = [Perm((1, 0, 2, 3)).matrix(), Perm((1, 2, 3, 0)).matrix(),
            H_TILDE, SQRTZ_TILDE]
    return closure(gens)


def ontic_pair_perm(p: Perm, q: Perm) -> Perm:
    """The two-bit ontic permutation acting as p on rows, q on columns."""
    return Perm(tuple(4 * p(i) + q(j)
                      for i in range(4) for j in range(4)))


SWAP_TILDE = Perm(tuple(4 * (idx % 4) + idx // 4 for idx in range(16)))


def kron_mats(a: ScaledMat, b: ScaledMat) -> ScaledMat:
    return ScaledMat(np.kron(a.arr, b.arr), a.denom_exp + b.denom_exp)


# Toy image of complex conjugation under the isomorphism onto the
# two-bit relaxed group: a tensor square of one quarter-integer factor.
# The images of the remaining four generators are solved and certified
# by tools/derive_goldens.py and pinned in goldens.py.
_CONJ_FACTOR = ScaledMat(np.array([
    [1, 1, -1, 1],
    [1, 1, 1, -1],
    [-1, 1, 1, 1],
    [1, -1, 1, 1]]), 1)

CONJ_IMAGE = kron_mats(_CONJ_FACTOR, _CONJ_FACTOR)


def two_bit_generator_images() -> list[ScaledMat]:
    """The five toy images of {conj, CNOT, H(x)I, H(x)H, sqrtZ(x)sqrtZ}."""
    from .goldens import CNOT_IMAGE, HI_IMAGE, P1_TILDE, P2_TILDE
    return [CONJ_IMAGE, CNOT_IMAGE, HI_IMAGE, P1_TILDE, P2_TILDE]


def two_bit_group() -> FiniteGroup:
    """The relaxed two-bit operation group (order 23040) by closure."""
    return closure(two_bit_generator_images())
