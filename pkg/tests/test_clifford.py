"""Exact Clifford-group, Bloch-action, and Euler-decomposition tests."""

import itertools

import numpy as np
import pytest

from toybit.clifford import (NotARotation, NotAxisPreserving, QUANTUM_SIX,
                             SignedPermMatrix3, TOY_SIX_MASKS, bloch_action,
                             build_group, cnot, compose_euler, conj_op,
                             euler_decompose, hadamard,
                             projective_action_on_states, sqrt_z,
                             toy_action_on_states, two_qubit_map_generators)
from toybit.cyclotomic import CliffordOp, kron
from toybit.groups import Perm
from toybit.toyops import H_TILDE, SQRTZ_TILDE


def test_single_qubit_orders(c1, ec1):
    assert c1.order == 24
    assert ec1.order == 48


def test_clifford_op_relations():
    h, s = hadamard(), sqrt_z()
    ident = CliffordOp.identity(2)
    assert h.mul(h) == ident
    assert s.mul(s) != ident
    assert s.mul(s).mul(s.mul(s)) == ident
    c = conj_op(1)
    assert c.antiunitary and c.mul(c) == ident


def test_kron_and_cnot():
    h = hadamard()
    hh = kron(h, h)
    x = cnot()
    assert x.mul(x) == CliffordOp.identity(4)
    assert hh.mul(hh) == CliffordOp.identity(4)
    assert len(two_qubit_map_generators()) == 5


def test_projective_action_is_permutation():
    p = projective_action_on_states(hadamard(), QUANTUM_SIX)
    # H swaps the x and z axes and flips y.
    assert p.images == (4, 5, 3, 2, 0, 1)


def test_toy_action_matches_quantum_action():
    assert toy_action_on_states(H_TILDE).images == (4, 5, 3, 2, 0, 1)
    assert (toy_action_on_states(SQRTZ_TILDE).images
            == projective_action_on_states(sqrt_z(), QUANTUM_SIX).images)


def test_toy_six_masks_are_pure_antipodal():
    assert len(set(TOY_SIX_MASKS)) == 6
    for a, b in ((0, 1), (2, 3), (4, 5)):
        assert TOY_SIX_MASKS[a] ^ TOY_SIX_MASKS[b] == 0b1111


def test_bloch_action_rotation():
    r = bloch_action(H_TILDE)
    assert r.is_rotation
    assert np.array_equal(r.array @ r.array, np.eye(3, dtype=np.int64))


def test_bloch_action_reflection_det():
    conj_perm = Perm((0, 1, 3, 2, 4, 5))  # swaps +y and -y only
    m = SignedPermMatrix3.from_array(np.diag([1, -1, 1]))
    assert m.det == -1 and not m.is_rotation
    with pytest.raises(NotARotation):
        euler_decompose(m)
    assert conj_perm is not None


def test_non_axis_preserving_rejected():
    from toybit.clifford import _axis_matrix_from_six_perm
    # Sends the antipodal pair (+x,-x) to the non-antipodal pair (+x,+y).
    bad = Perm((0, 2, 1, 3, 4, 5))
    with pytest.raises(NotAxisPreserving):
        _axis_matrix_from_six_perm(bad)


def test_euler_anchors():
    from toybit.toyops import ontic_pair_perm  # noqa: F401  (import check)
    three_cycle = Perm.from_cycles([(0, 1, 2)], 4)
    assert euler_decompose(bloch_action(three_cycle.matrix())) == (2, -1, -1)
    assert euler_decompose(bloch_action(H_TILDE)) == (1, 1, 1)
    assert euler_decompose(bloch_action(SQRTZ_TILDE)) == (0, -1, 0)


def test_euler_roundtrip_all_rotations(tg1):
    rotations = {bloch_action(op) for op in tg1
                 if bloch_action(op).is_rotation}
    assert len(rotations) == 24
    for r in rotations:
        theta, phi, psi = euler_decompose(r)
        assert compose_euler(theta, phi, psi) == r
        assert theta in (0, 1, 2)


def test_axis_maps_count(tg1):
    maps = {bloch_action(op) for op in tg1}
    assert len(maps) == 48
    assert sum(1 for m in maps if m.is_rotation) == 24


def test_bloch_action_homomorphism(tg1):
    ops = list(itertools.islice(iter(tg1), 8))
    for a in ops:
        for b in ops:
            assert bloch_action(a.mul(b)) == bloch_action(a).mul(
                bloch_action(b))


def test_compose_euler_exact_matrices():
    ident = compose_euler(0, 0, 0)
    assert np.array_equal(ident.array, np.eye(3, dtype=np.int64))
    # Frame convention: compose_euler returns the transpose of the
    # column-vector rotation product, so R_z(pi/2) appears transposed.
    rz = compose_euler(0, 1, 0)
    assert np.array_equal(rz.array,
                          np.array([[0, 1, 0], [-1, 0, 0], [0, 0, 1]]))
