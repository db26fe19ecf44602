"""Exact arithmetic in Z[zeta], zeta = exp(i*pi/4), with sqrt(2) denominators.

A value is (a + b*zeta + c*zeta^2 + d*zeta^3) / sqrt(2)**k.  Matrices over
this ring are stored as four integer coefficient matrices plus a shared
denominator exponent; operators additionally carry an anti-unitary flag
and are kept in a projective canonical form, so equal keys mean equal
operators modulo any overall scalar.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, sqrt

import numpy as np

ZETA_RE_IM = ((1.0, 0.0), (sqrt(0.5), sqrt(0.5)), (0.0, 1.0),
              (-sqrt(0.5), sqrt(0.5)))


@dataclass(frozen=True)
class CycScalar:
    """A single ring element, mostly for serialization and display."""

    a: int
    b: int
    c: int
    d: int
    half_power: int = 0

    def to_list(self) -> list[int]:
        return [self.a, self.b, self.c, self.d, self.half_power]

    def complex_value(self) -> complex:
        re = im = 0.0
        for coef, (zr, zi) in zip((self.a, self.b, self.c, self.d), ZETA_RE_IM):
            re += coef * zr
            im += coef * zi
        scale = sqrt(2.0) ** self.half_power
        return complex(re / scale, im / scale)


def _conj_coeffs(coeffs: np.ndarray) -> np.ndarray:
    """Entrywise complex conjugation: zeta -> -zeta^3."""
    return np.stack([coeffs[0], -coeffs[3], -coeffs[2], -coeffs[1]])


# _FOLD[t, 4*i + j] = +/-1 when zeta^i * zeta^j = +/- zeta^t
_FOLD = np.zeros((4, 16), dtype=np.int64)
for _i in range(4):
    for _j in range(4):
        _t = _i + _j
        _FOLD[_t % 4, 4 * _i + _j] = 1 if _t < 4 else -1


def _polymul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix product over the ring; zeta^4 = -1 folds the convolution."""
    full = a[:, None] @ b[None, :]
    n, m = a.shape[1], b.shape[2]
    return (_FOLD @ full.reshape(16, n * m)).reshape(4, n, m)


def _scalar_conv_matrix(s: np.ndarray) -> np.ndarray:
    """4x4 matrix realizing coefficient-wise multiplication by scalar s."""
    c = np.zeros((4, 4), dtype=np.int64)
    for t in range(4):
        for j in range(4):
            c[t, j] = s[t - j] if t >= j else -s[(t - j) % 4]
    return c


def _scalar_mul(coeffs: np.ndarray, s: np.ndarray) -> np.ndarray:
    """Multiply every entry by the scalar s (a length-4 coefficient vector)."""
    shape = coeffs.shape
    return (_scalar_conv_matrix(s) @ coeffs.reshape(4, -1)).reshape(shape)


# coefficient action of dividing by sqrt(2) = zeta - zeta^3 (before the >> 1)
_DIV_SQRT2 = np.array([[0, 1, 0, -1], [1, 0, 1, 0],
                       [0, 1, 0, 1], [-1, 0, 1, 0]], dtype=np.int64)


def _canonicalize(coeffs: np.ndarray) -> np.ndarray:
    """Projective canonical form: kill the first nonzero entry's phase by
    multiplying with its conjugate, then strip every sqrt(2) and odd
    common factor.  Depends only on the ray of the input."""
    flat = coeffs.reshape(4, -1)
    nzcols = np.nonzero((flat != 0).any(axis=0))[0]
    if len(nzcols) == 0:
        raise ValueError("zero matrix has no projective form")
    e = flat[:, nzcols[0]]
    e_conj = np.array([e[0], -e[3], -e[2], -e[1]], dtype=np.int64)
    out = _scalar_conv_matrix(e_conj) @ flat
    while not (((out[0] ^ out[2]) | (out[1] ^ out[3])) & 1).any():
        out = (_DIV_SQRT2 @ out) >> 1
    g = int(np.gcd.reduce(np.abs(out), axis=None))
    if g > 1:
        out = out // g
    out = out.reshape(coeffs.shape)
    out.setflags(write=False)
    return out


class CliffordOp:
    """A unitary or anti-unitary operator over Z[zeta], modulo scalars.

    The stored matrix is a fixed projective representative; composition
    follows (M1, f1)(M2, f2) = (M1 * conj^f1(M2), f1 xor f2).
    """

    __slots__ = ("coeffs", "antiunitary", "_key")

    def __init__(self, coeffs: np.ndarray, antiunitary: bool = False):
        coeffs = np.asarray(coeffs, dtype=np.int64)
        if coeffs.ndim == 2:
            coeffs = np.stack([coeffs, np.zeros_like(coeffs),
                               np.zeros_like(coeffs), np.zeros_like(coeffs)])
        self.coeffs = _canonicalize(coeffs)
        self.antiunitary = bool(antiunitary)
        self._key = bytes([self.antiunitary]) + self.coeffs.tobytes()

    @property
    def dim(self) -> int:
        return self.coeffs.shape[1]

    @staticmethod
    def identity(n: int) -> "CliffordOp":
        return CliffordOp(np.eye(n, dtype=np.int64))

    def mul(self, other: "CliffordOp") -> "CliffordOp":
        rhs = _conj_coeffs(other.coeffs) if self.antiunitary else other.coeffs
        return CliffordOp(_polymul(self.coeffs, rhs),
                          self.antiunitary ^ other.antiunitary)

    def inverse(self) -> "CliffordOp":
        t = self.coeffs.transpose(0, 2, 1)
        if self.antiunitary:
            return CliffordOp(t, True)
        return CliffordOp(_conj_coeffs(t), False)

    def key(self) -> bytes:
        return self._key

    def dagger_product_scalar(self) -> np.ndarray | None:
        """If M M^dagger is a scalar matrix, return that scalar's
        coefficient vector; otherwise None."""
        md = _polymul(self.coeffs, _conj_coeffs(self.coeffs.transpose(0, 2, 1)))
        n = self.dim
        s = md[:, 0, 0]
        expect = np.stack([np.eye(n, dtype=np.int64) * s[i] for i in range(4)])
        if np.array_equal(md, expect):
            return s
        return None

    def is_unitary_projective(self) -> bool:
        """True when the representative is a positive real multiple of a
        unitary matrix (always the case for genuine group elements)."""
        s = self.dagger_product_scalar()
        if s is None:
            return False
        a, b, c, d = (int(x) for x in s)
        return c == 0 and b == -d and a + b * sqrt(2.0) > 0

    def numeric(self) -> np.ndarray:
        """Float/complex matrix of the stored representative."""
        out = np.zeros((self.dim, self.dim), dtype=complex)
        for i, (zr, zi) in enumerate(ZETA_RE_IM):
            out += self.coeffs[i] * complex(zr, zi)
        return out

    def to_json(self) -> dict:
        matrix = [[CycScalar(*(int(self.coeffs[t, i, j]) for t in range(4))
                             ).to_list()
                   for j in range(self.dim)] for i in range(self.dim)]
        n_qubits = {2: 1, 4: 2}.get(self.dim, self.dim)
        return {"n": n_qubits, "antiunitary": self.antiunitary,
                "matrix": matrix}

    def __eq__(self, other) -> bool:
        return isinstance(other, CliffordOp) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        kind = "antiunitary" if self.antiunitary else "unitary"
        return f"CliffordOp({self.dim}x{self.dim}, {kind})"


def kron(a: CliffordOp, b: CliffordOp) -> CliffordOp:
    """Tensor product of two unitary operators."""
    if a.antiunitary or b.antiunitary:
        raise ValueError("tensor only defined here for unitary factors")
    out = np.zeros((4, a.dim * b.dim, a.dim * b.dim), dtype=np.int64)
    for i in range(4):
        for j in range(4):
            t = i + j
            p = np.kron(a.coeffs[i], b.coeffs[j])
            if t < 4:
                out[t] += p
            else:
                out[t - 4] -= p
    return CliffordOp(out)


class CycVector:
    """A state vector over the ring, canonicalized projectively."""

    __slots__ = ("coeffs", "_key")

    def __init__(self, coeffs: np.ndarray):
        coeffs = np.asarray(coeffs, dtype=np.int64)
        if coeffs.ndim == 1:
            coeffs = np.stack([coeffs, np.zeros_like(coeffs),
                               np.zeros_like(coeffs), np.zeros_like(coeffs)])
        self.coeffs = _canonicalize(coeffs[:, :, None])[:, :, 0]
        self.coeffs.setflags(write=False)
        self._key = self.coeffs.tobytes()

    def key(self) -> bytes:
        return self._key

    def __eq__(self, other) -> bool:
        return isinstance(other, CycVector) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)


def apply_op(op: CliffordOp, vec: CycVector) -> CycVector:
    v = _conj_coeffs(vec.coeffs[:, :, None]) if op.antiunitary \
        else vec.coeffs[:, :, None]
    return CycVector(_polymul(op.coeffs, v)[:, :, 0])
