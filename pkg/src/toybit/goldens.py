"""Pinned derived data, regenerated by ``tools/derive_goldens.py``.

The two-bit toy images of the extended-Clifford generators are solved,
not hand-entered: the tool searches the relaxed two-bit group for
elements that make the generator map {conj, CNOT, H(x)I, H(x)H,
sqrtZ(x)sqrtZ} -> {CONJ_IMAGE, CNOT_IMAGE, HI_IMAGE, P1_TILDE,
P2_TILDE} extend to a bijective homomorphism, and certifies the result
by a full walk of all 23040 elements.  P3_TILDE is the first group
element (in derivation order) completing <(12)x(23), Ix(12)> to a
subgroup of order 720.  The battery stage and class profiles record
which invariant separates the original two-bit group from the
projective two-qubit Clifford group.
"""

from __future__ import annotations

import numpy as np

from .groups import Perm, ScaledMat

CNOT_IMAGE = ScaledMat(np.array(
    [[1, 1, 1, -1, 1, 1, 1, -1, 1, 1, 1, -1, -1, -1, -1, 1],
     [1, 1, -1, 1, 1, 1, -1, 1, 1, 1, -1, 1, -1, -1, 1, -1],
     [1, -1, 1, 1, 1, -1, 1, 1, -1, 1, -1, -1, 1, -1, 1, 1],
     [-1, 1, 1, 1, -1, 1, 1, 1, 1, -1, -1, -1, -1, 1, 1, 1],
     [1, 1, 1, -1, 1, 1, 1, -1, -1, -1, -1, 1, 1, 1, 1, -1],
     [1, 1, -1, 1, 1, 1, -1, 1, -1, -1, 1, -1, 1, 1, -1, 1],
     [1, -1, 1, 1, 1, -1, 1, 1, 1, -1, 1, 1, -1, 1, -1, -1],
     [-1, 1, 1, 1, -1, 1, 1, 1, -1, 1, 1, 1, 1, -1, -1, -1],
     [1, 1, -1, 1, -1, -1, 1, -1, 1, 1, -1, 1, 1, 1, -1, 1],
     [1, 1, 1, -1, -1, -1, -1, 1, 1, 1, 1, -1, 1, 1, 1, -1],
     [1, -1, -1, -1, -1, 1, 1, 1, -1, 1, 1, 1, -1, 1, 1, 1],
     [-1, 1, -1, -1, 1, -1, 1, 1, 1, -1, 1, 1, 1, -1, 1, 1],
     [-1, -1, 1, -1, 1, 1, -1, 1, 1, 1, -1, 1, 1, 1, -1, 1],
     [-1, -1, -1, 1, 1, 1, 1, -1, 1, 1, 1, -1, 1, 1, 1, -1],
     [-1, 1, 1, 1, 1, -1, -1, -1, -1, 1, 1, 1, -1, 1, 1, 1],
     [1, -1, 1, 1, -1, 1, -1, -1, 1, -1, 1, 1, 1, -1, 1, 1]],
    dtype=np.int64), 2)

HI_IMAGE = ScaledMat(np.array(
    [[-1, 1, -1, -1, 1, -1, 1, 1, 1, -1, 1, 1, 1, -1, 1, 1],
     [1, -1, -1, -1, -1, 1, 1, 1, -1, 1, 1, 1, -1, 1, 1, 1],
     [-1, -1, -1, 1, 1, 1, 1, -1, 1, 1, 1, -1, 1, 1, 1, -1],
     [-1, -1, 1, -1, 1, 1, -1, 1, 1, 1, -1, 1, 1, 1, -1, 1],
     [1, -1, 1, 1, 1, -1, 1, 1, 1, -1, 1, 1, -1, 1, -1, -1],
     [-1, 1, 1, 1, -1, 1, 1, 1, -1, 1, 1, 1, 1, -1, -1, -1],
     [1, 1, 1, -1, 1, 1, 1, -1, 1, 1, 1, -1, -1, -1, -1, 1],
     [1, 1, -1, 1, 1, 1, -1, 1, 1, 1, -1, 1, -1, -1, 1, -1],
     [1, -1, 1, 1, 1, -1, 1, 1, -1, 1, -1, -1, 1, -1, 1, 1],
     [-1, 1, 1, 1, -1, 1, 1, 1, 1, -1, -1, -1, -1, 1, 1, 1],
     [1, 1, 1, -1, 1, 1, 1, -1, -1, -1, -1, 1, 1, 1, 1, -1],
     [1, 1, -1, 1, 1, 1, -1, 1, -1, -1, 1, -1, 1, 1, -1, 1],
     [1, -1, 1, 1, -1, 1, -1, -1, 1, -1, 1, 1, 1, -1, 1, 1],
     [-1, 1, 1, 1, 1, -1, -1, -1, -1, 1, 1, 1, -1, 1, 1, 1],
     [1, 1, 1, -1, -1, -1, -1, 1, 1, 1, 1, -1, 1, 1, 1, -1],
     [1, 1, -1, 1, -1, -1, 1, -1, 1, 1, -1, 1, 1, 1, -1, 1]],
    dtype=np.int64), 2)

P1_TILDE = Perm((3, 9, 10, 0, 4, 14, 13, 7,
                 11, 1, 2, 8, 12, 6, 5, 15)).matrix()

P2_TILDE = Perm((9, 2, 14, 5, 7, 12, 0, 11,
                 4, 15, 3, 8, 10, 1, 13, 6)).matrix()

P3_TILDE = Perm((0, 1, 6, 7, 9, 8, 15, 14,
                 4, 5, 2, 3, 13, 12, 11, 10))

# First invariant-battery stage separating the original two-bit group
# from the projective two-qubit Clifford group, with the two profiles.
BATTERY_STAGE = "conjugacy_class_order_size_profile"

SPEK_CLASS_PROFILE = [
    (1, 1), (2, 15), (2, 30), (2, 60), (2, 90), (2, 180), (3, 160),
    (3, 640), (4, 120), (4, 180), (4, 180), (4, 360), (4, 720), (4, 720),
    (5, 2304), (6, 480), (6, 960), (6, 1920), (8, 720), (8, 720),
    (12, 960)]

C2_CLASS_PROFILE = [
    (1, 1), (2, 15), (2, 60), (2, 120), (2, 180), (3, 160), (3, 640),
    (4, 30), (4, 90), (4, 180), (4, 180), (4, 360), (4, 720), (4, 720),
    (5, 2304), (6, 480), (6, 960), (6, 1920), (8, 720), (8, 720),
    (12, 960)]
