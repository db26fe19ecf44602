"""Qubit Clifford groups and the Bloch-sphere picture shared by the toy
model: exact single- and two-qubit (extended) Clifford groups modulo
phases, the signed-axis O(3) action on the six cardinal states, and the
quarter-turn Euler decomposition of its rotations.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cyclotomic import CliffordOp, CycVector, apply_op, kron
from .groups import FiniteGroup, Perm, ScaledMat, closure
from .states import EpistemicState, ToyError


class NotAxisPreserving(ToyError):
    """The operation does not map antipodal state pairs to antipodal
    state pairs."""


class NotARotation(ToyError):
    """Euler decomposition asked of an axis map with determinant -1."""


class SetNotInvariant(ToyError):
    """The operation maps some state of the given set outside the set."""


def hadamard() -> CliffordOp:
    return CliffordOp(np.array([[1, 1], [1, -1]]))


def sqrt_z() -> CliffordOp:
    coeffs = np.zeros((4, 2, 2), dtype=np.int64)
    coeffs[0, 0, 0] = 1          # 1
    coeffs[2, 1, 1] = 1          # zeta^2 = i
    return CliffordOp(coeffs)


def conj_op(n_qubits: int) -> CliffordOp:
    return CliffordOp(np.eye(2 ** n_qubits, dtype=np.int64),
                      antiunitary=True)


def cnot() -> CliffordOp:
    m = np.zeros((4, 4), dtype=np.int64)
    m[0, 0] = m[1, 1] = m[2, 3] = m[3, 2] = 1
    return CliffordOp(m)


def build_group(n_qubits: int, extended: bool) -> FiniteGroup:
    """The (extended) Clifford group modulo phases, by closure."""
    if n_qubits == 1:
        gens = [hadamard(), sqrt_z()]
    elif n_qubits == 2:
        h, s, ident = hadamard(), sqrt_z(), CliffordOp.identity(2)
        gens = [kron(s, ident), kron(ident, s),
                kron(h, ident), kron(ident, h), cnot()]
    else:
        raise ValueError("only 1 or 2 qubits supported")
    if extended:
        gens.append(conj_op(n_qubits))
    return closure(gens)


def two_qubit_map_generators() -> list[CliffordOp]:
    """The five generators of the two-qubit projective extended Clifford
    group used by the certified generator map, in map order."""
    h, s, ident = hadamard(), sqrt_z(), CliffordOp.identity(2)
    return [conj_op(2), cnot(), kron(h, ident), kron(h, h), kron(s, s)]


def _vec(entries) -> CycVector:
    coeffs = np.zeros((4, 2), dtype=np.int64)
    for col, (power, value) in enumerate(entries):
        coeffs[power, col] = value
    return CycVector(coeffs)


# The six cardinal single-qubit states in the axis order
# (+x, -x, +y, -y, +z, -z) = (|+>, |->, |i>, |-i>, |0>, |1>).
QUANTUM_SIX: list[CycVector] = [
    _vec([(0, 1), (0, 1)]),      # |+>
    _vec([(0, 1), (0, -1)]),     # |->
    _vec([(0, 1), (2, 1)]),      # |i>
    _vec([(0, 1), (2, -1)]),     # |-i>
    _vec([(0, 1), (0, 0)]),      # |0>
    _vec([(0, 0), (0, 1)]),      # |1>
]

# The matching toy states (e13, e24, e23, e14, e12, e34) as cell masks.
TOY_SIX_MASKS: list[int] = [0b0101, 0b1010, 0b0110, 0b1001,
                            0b0011, 0b1100]
TOY_SIX: list[EpistemicState] = [EpistemicState(1, m)
                                 for m in TOY_SIX_MASKS]


def projective_action_on_states(op: CliffordOp,
                                states: list[CycVector]) -> Perm:
    """The permutation op induces on a projectively closed state list."""
    index = {s.key(): i for i, s in enumerate(states)}
    images = []
    for s in states:
        out = apply_op(op, s)
        if out.key() not in index:
            raise SetNotInvariant(
                f"image of state {index[s.key()]} leaves the set")
        images.append(index[out.key()])
    return Perm(tuple(images))


def toy_action_on_states(op, masks: list[int] = TOY_SIX_MASKS) -> Perm:
    """The permutation a toy operation induces on a list of epistemic
    supports given as cell masks."""
    index = {m: i for i, m in enumerate(masks)}
    images = []
    for mask in masks:
        if isinstance(op, Perm):
            out = 0
            for cell in range(len(op.images)):
                if mask >> cell & 1:
                    out |= 1 << op(cell)
        elif isinstance(op, ScaledMat):
            scale = 2 ** op.denom_exp
            vec = np.array([scale * (mask >> i & 1)
                            for i in range(op.arr.shape[1])],
                           dtype=np.int64)
            img = op.arr @ vec // scale
            if not np.isin(img, (0, scale)).all():
                raise SetNotInvariant("image is not an epistemic support")
            out = sum(1 << i for i, v in enumerate(img) if v == scale)
        else:
            raise TypeError(f"unsupported toy operation {type(op)!r}")
        if out not in index:
            raise SetNotInvariant(f"image support {out:#06b} leaves the set")
        images.append(index[out])
    return Perm(tuple(images))


@dataclass(frozen=True)
class SignedPermMatrix3:
    """A signed 3x3 permutation matrix: an O(3) symmetry of the axes."""

    matrix: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        arr = self.array
        if not (np.isin(arr, (-1, 0, 1)).all()
                and (np.abs(arr).sum(axis=0) == 1).all()
                and (np.abs(arr).sum(axis=1) == 1).all()):
            raise ValueError("not a signed permutation matrix")

    @property
    def array(self) -> np.ndarray:
        return np.array(self.matrix, dtype=np.int64)

    @property
    def det(self) -> int:
        return int(round(np.linalg.det(self.array)))

    @property
    def is_rotation(self) -> bool:
        return self.det == 1

    @staticmethod
    def from_array(arr: np.ndarray) -> "SignedPermMatrix3":
        return SignedPermMatrix3(
            tuple(tuple(int(v) for v in row) for row in arr))

    def mul(self, other: "SignedPermMatrix3") -> "SignedPermMatrix3":
        return SignedPermMatrix3.from_array(self.array @ other.array)


def _axis_matrix_from_six_perm(perm: Perm) -> SignedPermMatrix3:
    arr = np.zeros((3, 3), dtype=np.int64)
    for axis in range(3):
        pos, neg = perm(2 * axis), perm(2 * axis + 1)
        if pos // 2 != neg // 2 or pos == neg:
            raise NotAxisPreserving(
                f"axis {'xyz'[axis]} maps to non-antipodal states")
        arr[pos // 2, axis] = 1 if pos % 2 == 0 else -1
    return SignedPermMatrix3.from_array(arr)


def bloch_action(op) -> SignedPermMatrix3:
    """The signed axis permutation induced on the Bloch sphere, for a
    single-qubit Clifford operator or a single-toy-bit operation."""
    if isinstance(op, CliffordOp):
        perm = projective_action_on_states(op, QUANTUM_SIX)
    else:
        perm = toy_action_on_states(op)
    return _axis_matrix_from_six_perm(perm)


# Quarter-turn rotation generators about x and z (counter-clockwise,
# acting on column vectors).
_RX = np.array([[1, 0, 0], [0, 0, -1], [0, 1, 0]], dtype=np.int64)
_RZ = np.array([[0, -1, 0], [1, 0, 0], [0, 0, 1]], dtype=np.int64)


def _power(base: np.ndarray, quarter_turns: int) -> np.ndarray:
    out = np.eye(3, dtype=np.int64)
    for _ in range(quarter_turns % 4):
        out = base @ out
    return out


def compose_euler(theta: int, phi: int, psi: int) -> SignedPermMatrix3:
    """R_x(theta) R_z(phi) R_x(psi), angles in multiples of pi/2.

    The axis maps act on coordinate frames rather than on vectors,
    hence the transpose of the column-vector rotation product.
    """
    m = _power(_RX, theta) @ _power(_RZ, phi) @ _power(_RX, psi)
    return SignedPermMatrix3.from_array(m.T)


THETA_RANGE = (0, 1, 2)          # {0, pi/2, pi}
PHI_PSI_RANGE = (-1, 0, 1, 2)    # {-pi/2, 0, pi/2, pi}


def euler_decompose(rot: SignedPermMatrix3) -> tuple[int, int, int]:
    """Quarter-turn Euler angles (theta, phi, psi) with theta in
    {0, pi/2, pi} and phi, psi in {-pi/2, 0, pi/2, pi}.

    When several angle triples produce the same rotation, the one
    smallest in lexicographic order over (psi, phi, theta) is returned;
    this ordering reproduces the published decompositions of the
    rotation about x+y+z and of the quarter-turn analogues.
    """
    if rot.det != 1:
        raise NotARotation("determinant is -1")
    target = rot.array
    solutions = [(theta, phi, psi)
                 for theta in THETA_RANGE
                 for phi in PHI_PSI_RANGE
                 for psi in PHI_PSI_RANGE
                 if np.array_equal(compose_euler(theta, phi, psi).array,
                                   target)]
    if not solutions:
        raise NotARotation("no quarter-turn Euler decomposition found")
    return min(solutions, key=lambda w: (w[2], w[1], w[0]))
