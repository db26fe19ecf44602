"""The claim registry: one executable verification per quantitative
result, each returning a machine-readable report with witnesses.

Heavy groups are built once per process and shared between claims; the
reports themselves re-derive every order they assert.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations, product
from typing import Callable, Iterable, Optional

import numpy as np

from . import clifford, goldens, toyops
from .clifford import (QUANTUM_SIX, TOY_SIX_MASKS, bloch_action,
                       build_group, projective_action_on_states,
                       toy_action_on_states, two_qubit_map_generators)
from .groups import (FiniteGroup, Perm, ScaledMat, closure, coset_action,
                     find_generators, invariant_battery, is_primitive,
                     map_by_generators, set_stabilizer)
from .search import linear_validity_group
from .states import (EpistemicState, ToyError, enumerate_partitions,
                     is_perfectly_correlated, make_epistemic, mixed_catalog,
                     pure_states)


class UnknownClaim(ToyError):
    pass


@dataclass
class ClaimReport:
    claim_id: str
    status: str                    # verified | refuted | inconclusive
    expected: dict                 # {"value": ..., "provenance": ...}
    computed: object
    witness: object = None
    wall_time_ms: int = 0

    def to_json(self) -> dict:
        return {"claim": self.claim_id, "status": self.status,
                "expected": self.expected, "computed": self.computed,
                "witness": self.witness, "ms": self.wall_time_ms}


def _report(claim_id: str, expected_value, provenance: str,
            computed, witness=None, start: float = 0.0) -> ClaimReport:
    status = "verified" if computed == expected_value else "refuted"
    return ClaimReport(
        claim_id, status,
        {"value": expected_value, "provenance": provenance},
        computed, witness,
        int((time.time() - start) * 1000))


# ---------------------------------------------------------------- caches

@lru_cache(maxsize=None)
def _single_bit_group() -> FiniteGroup:
    return toyops.single_bit_group()


@lru_cache(maxsize=None)
def _linear_group(n_bits: int) -> FiniteGroup:
    return linear_validity_group(n_bits)


@lru_cache(maxsize=None)
def _clifford_group(n_qubits: int, extended: bool) -> FiniteGroup:
    return build_group(n_qubits, extended)


@lru_cache(maxsize=None)
def _two_bit_group() -> FiniteGroup:
    return toyops.two_bit_group()


@lru_cache(maxsize=None)
def _spekkens_two_bit_group() -> FiniteGroup:
    blocks = [s.support for s in pure_states(2)]
    return find_generators(set_stabilizer(16, blocks))


# ------------------------------------------------------- state plumbing

SIGMA0_MASK = sum(1 << (4 * i + i) for i in range(4))


def sigma0() -> EpistemicState:
    """The identity-pattern perfectly correlated two-bit state."""
    return EpistemicState(2, SIGMA0_MASK)


def apply_to_support(op: ScaledMat, mask: int) -> Optional[int]:
    """Image support of an indicator vector, or None when the image is
    not a scaled 0/1 indicator."""
    dim = op.arr.shape[1]
    vec = np.array([mask >> i & 1 for i in range(dim)], dtype=np.int64)
    img = op.arr @ vec
    scale = 2 ** op.denom_exp
    if not np.isin(img, (0, scale)).all():
        return None
    return int(sum(1 << i for i in range(dim) if img[i] == scale))


def _image_is_valid(op: ScaledMat, state: EpistemicState) -> bool:
    mask = apply_to_support(op, state.mask)
    if mask is None:
        return False
    try:
        make_epistemic(state.n_bits, [i for i in range(4 ** state.n_bits)
                                      if mask >> i & 1])
    except ToyError:
        return False
    return True


def detect_perfect_correlation(state: EpistemicState):
    """First single-bit operation whose one-sided extension maps the
    state to an invalid one; None when no such witness exists."""
    if state.n_bits != 2:
        raise ToyError("correlation test is for two-bit states")
    ident = ScaledMat(np.eye(4, dtype=np.int64), 0)
    for delta in _single_bit_group():
        extended = toyops.kron_mats(delta, ident)
        if not _image_is_valid(extended, state):
            return delta
    return None


# ------------------------------------------------------------- claims

ANTIPODAL_PAIRS = ((0, 1), (2, 3), (4, 5))


def _preserves_antipodal_pairs(images: tuple[int, ...]) -> bool:
    return all(images[a] // 2 == images[b] // 2
               for a, b in ANTIPODAL_PAIRS)


def verify_single_bit_group() -> ClaimReport:
    """The single-toy-bit operation group is exactly the 48 permutations
    of the six pure states preserving antipodal pairs."""
    start = time.time()
    preserving = {p for p in permutations(range(6))
                  if _preserves_antipodal_pairs(p)}
    linear = _linear_group(1)
    induced = {toy_action_on_states(m).images for m in linear}
    relaxed = _single_bit_group()
    computed = {"antipodal_preserving": len(preserving),
                "linear_group_order": linear.order,
                "closure_order": relaxed.order,
                "same_permutations": induced == preserving
                and relaxed.same_elements(linear)}
    expected = {"antipodal_preserving": 48, "linear_group_order": 48,
                "closure_order": 48, "same_permutations": True}
    return _report("single-bit-group", expected,
                   "published count 3! * 2^3 = 48", computed, None, start)


def _axis_coordinates(perm_4: Perm) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Coordinates ((x, y, z), g) of an ontic permutation's action on
    the three antipodal axis pairs: g permutes the axes, the bits record
    which source axes have their two states swapped."""
    six = toy_action_on_states(perm_4)
    g = tuple(six(2 * axis) // 2 for axis in range(3))
    flips = tuple(six(2 * axis) % 2 for axis in range(3))
    return flips, g


def verify_axis_coordinatization() -> ClaimReport:
    """The ontic permutations sit inside (Z2^3 semidirect S3) exactly as
    the elements whose flip vector has Hamming weight 0 or 2."""
    start = time.time()
    image = {_axis_coordinates(Perm(p))
             for p in permutations(range(4))}
    weights = {sum(flips) for flips, _ in image}
    anchors = {
        "(12)": _axis_coordinates(Perm.from_cycles([(0, 1)], 4)),
        "(23)": _axis_coordinates(Perm.from_cycles([(1, 2)], 4)),
        "(34)": _axis_coordinates(Perm.from_cycles([(2, 3)], 4)),
    }
    computed = {"image_size": len(image), "weights": sorted(weights),
                "anchors": {k: [list(f), list(g)]
                            for k, (f, g) in anchors.items()}}
    expected = {"image_size": 24, "weights": [0, 2],
                "anchors": {"(12)": [[0, 0, 0], [1, 0, 2]],
                            "(23)": [[0, 0, 0], [2, 1, 0]],
                            "(34)": [[1, 1, 0], [1, 0, 2]]}}
    return _report("axis-coordinatization", expected,
                   "published generator coordinates", computed, None, start)


def verify_single_bit_isomorphism() -> ClaimReport:
    """The single-bit toy group and the projective extended Clifford
    group induce the same permutations of six states."""
    start = time.time()
    ec1 = _clifford_group(1, True)
    tg1 = _single_bit_group()
    quantum_perms = {projective_action_on_states(op, QUANTUM_SIX).images
                     for op in ec1}
    toy_perms = {toy_action_on_states(op).images for op in tg1}
    computed = {"clifford_order": ec1.order, "toy_order": tg1.order,
                "same_permutations": quantum_perms == toy_perms}
    expected = {"clifford_order": 48, "toy_order": 48,
                "same_permutations": True}
    return _report("single-bit-isomorphism", expected,
                   "published order 48 and permutation equality",
                   computed, None, start)


def verify_two_bit_isomorphism() -> ClaimReport:
    """The generator map from the two-qubit projective extended Clifford
    group onto the relaxed toy group extends to an isomorphism."""
    start = time.time()
    ec2 = _clifford_group(2, True)
    src = FiniteGroup(two_qubit_map_generators(), ec2.elements, ec2.identity)
    images = toyops.two_bit_generator_images()
    image_group = _two_bit_group()
    gm = map_by_generators(src, images)
    computed = {"clifford_order": ec2.order,
                "image_order": image_group.order,
                "status": gm.status, "mapped_order": gm.image_order}
    expected = {"clifford_order": 23040, "image_order": 23040,
                "status": "consistent-isomorphism", "mapped_order": 23040}
    witness = gm.witness if gm.status == "inconsistent" else None
    return _report("two-bit-isomorphism", expected,
                   "published order 23040 and generator map", computed,
                   witness, start)


def verify_two_bit_nonisomorphism() -> ClaimReport:
    """The original two-bit group is not isomorphic to the two-qubit
    projective Clifford group: it has a maximal subgroup of order 720,
    and a conjugacy-class invariant separates the two groups."""
    start = time.time()
    spek = _spekkens_two_bit_group()
    g1 = toyops.ontic_pair_perm(Perm.from_cycles([(0, 1)], 4),
                                Perm.from_cycles([(1, 2)], 4))
    g2 = toyops.ontic_pair_perm(Perm.identity(4),
                                Perm.from_cycles([(0, 1)], 4))
    sub = closure([g1, g2, goldens.P3_TILDE])
    action = coset_action(spek, sub)
    primitive, block = is_primitive(action)
    c2 = _clifford_group(2, False)
    verdict = invariant_battery(spek, c2)
    computed = {"group_order": spek.order, "subgroup_order": sub.order,
                "index": spek.order // sub.order, "primitive": primitive,
                "battery": verdict.distinguished,
                "stage": verdict.stage}
    expected = {"group_order": 11520, "subgroup_order": 720, "index": 16,
                "primitive": True, "battery": True,
                "stage": goldens.BATTERY_STAGE}
    witness = {"stage": verdict.stage, "left": verdict.left,
               "right": verdict.right} if verdict.distinguished else block
    return _report("two-bit-nonisomorphism", expected,
                   "published orders; distinguishing stage pinned after "
                   "first derivation", computed, witness, start)


def verify_invalid_extension() -> ClaimReport:
    """Extending the epistemic Hadamard analogue by the identity breaks
    validity on the correlated state, while ontic permutations never do."""
    start = time.time()
    ident = ScaledMat(np.eye(4, dtype=np.int64), 0)
    h_ext = toyops.kron_mats(toyops.H_TILDE, ident)
    s4 = toyops.s4_matrices()
    all_variants_invalid = all(
        not _image_is_valid(h_ext, _permuted_sigma0(p))
        for p in s4)
    hh = toyops.kron_mats(toyops.H_TILDE, toyops.H_TILDE)
    perm_products_valid = all(
        _image_is_valid(toyops.kron_mats(p, q), sigma0())
        for p in s4 for q in s4)
    computed = {"h_extension_invalid": not _image_is_valid(h_ext, sigma0()),
                "all_correlated_variants_invalid": all_variants_invalid,
                "hh_image_valid": _image_is_valid(hh, sigma0()),
                "permutation_products_valid": perm_products_valid}
    expected = {"h_extension_invalid": True,
                "all_correlated_variants_invalid": True,
                "hh_image_valid": True,
                "permutation_products_valid": True}
    return _report("invalid-extension", expected,
                   "published counterexample", computed, None, start)


def _permuted_sigma0(q: ScaledMat) -> EpistemicState:
    """(I tensor q) applied to the identity-pattern state."""
    ident = ScaledMat(np.eye(4, dtype=np.int64), 0)
    mask = apply_to_support(toyops.kron_mats(ident, q), SIGMA0_MASK)
    return EpistemicState(2, mask)


def verify_correlation_test() -> ClaimReport:
    """A two-bit state is perfectly correlated exactly when some
    one-sided single-bit extension maps it to an invalid state."""
    start = time.time()
    states = pure_states(2) + mixed_catalog()
    positives = []
    mismatches = []
    for s in states:
        witness = detect_perfect_correlation(s)
        has_witness = witness is not None
        if has_witness:
            positives.append(s.mask)
        if has_witness != is_perfectly_correlated(s):
            mismatches.append(s.mask)
    computed = {"inputs": len(states), "positives": len(positives),
                "mismatches": len(mismatches)}
    expected = {"inputs": 91, "positives": 24, "mismatches": 0}
    return _report("correlation-test", expected,
                   "published equivalence; 24 correlated patterns",
                   computed, mismatches or None, start)


def verify_partitions() -> ClaimReport:
    """All 105 canonical question partitions exist, with four disjoint
    size-4 cells each, every cell a valid pure state."""
    start = time.time()
    parts = enumerate_partitions()
    shapes_ok = all(len(p.cells) == 4
                    and all(c.size == 4 for c in p.cells)
                    and sorted(i for c in p.cells for i in c.support)
                    == list(range(16))
                    for p in parts)
    cells_valid = all(c.is_pure for p in parts for c in p.cells)
    computed = {"count": len(parts), "shapes_ok": shapes_ok,
                "cells_valid": cells_valid}
    expected = {"count": 105, "shapes_ok": True, "cells_valid": True}
    return _report("partitions", expected, "published count 105",
                   computed, None, start)




def verify_hypercube_geometry() -> ClaimReport:
    """Every pure two-bit state's four ontic cells embed as an affine
    plane (rank-2 difference set) in the 4-cube {-1,1}^4."""
    start = time.time()
    failures = []
    states = list(pure_states(2))
    for s in states:
        pts = s.support
        # A 2-flat of AG(4,2) is four distinct vertices whose coordinate
        # vectors XOR to zero.
        if len(pts) != 4 or (pts[0] ^ pts[1] ^ pts[2] ^ pts[3]) != 0:
            failures.append(s.mask)
    computed = {"states": len(states), "planar": len(states) - len(failures)}
    expected = {"states": 60, "planar": 60}
    return _report("hypercube-geometry", expected,
                   "published claim: every pure state is an affine plane "
                   "of the 4-cube",
                   computed, failures or None, start)


CLAIMS: dict[str, Callable[[], ClaimReport]] = {
    "single-bit-group": verify_single_bit_group,
    "axis-coordinatization": verify_axis_coordinatization,
    "single-bit-isomorphism": verify_single_bit_isomorphism,
    "two-bit-isomorphism": verify_two_bit_isomorphism,
    "two-bit-nonisomorphism": verify_two_bit_nonisomorphism,
    "invalid-extension": verify_invalid_extension,
    "correlation-test": verify_correlation_test,
    "partitions": verify_partitions,
    "hypercube-geometry": verify_hypercube_geometry,
}


def run_all(claims: Optional[Iterable[str]] = None) -> list[ClaimReport]:
    if claims is None:
        ids = list(CLAIMS)
    else:
        ids = list(claims)
        unknown = [i for i in ids if i not in CLAIMS]
        if unknown:
            raise UnknownClaim(f"unknown claim id(s): {', '.join(unknown)}")
        ids = [i for i in CLAIMS if i in set(ids)]
    return [CLAIMS[i]() for i in ids]
