"""Definitional searches: the group of linear maps permuting the pure
states, computed straight from the definition as an independent check on
the generator closures.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .groups import FiniteGroup, ScaledMat, find_generators, from_elements
from .states import pure_states


def _independent_base(vectors: np.ndarray) -> list[int]:
    """Greedy prefix of column indices with linearly independent columns."""
    base: list[int] = []
    for j in range(vectors.shape[1]):
        cand = vectors[:, base + [j]].astype(float)
        if np.linalg.matrix_rank(cand) == len(base) + 1:
            base.append(j)
        if len(base) == vectors.shape[0]:
            break
    return base


def _exact_inverse(mat: np.ndarray) -> tuple[np.ndarray, int]:
    """Exact inverse of an integer matrix as (integer matrix, denominator)."""
    n = len(mat)
    a = [[Fraction(int(mat[i, j])) for j in range(n)] +
         [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col])
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    inv = [[a[i][n + j] for j in range(n)] for i in range(n)]
    den = 1
    for row in inv:
        for x in row:
            den = den * x.denominator // np.gcd(den, x.denominator)
    num = np.array([[int(x * den) for x in row] for row in inv],
                   dtype=np.int64)
    return num, int(den)


def linear_validity_group(n_bits: int) -> FiniteGroup:
    """All orthogonal linear maps permuting the pure-state indicators.

    Backtracks over images of a maximal independent subset of states,
    pruning on exact pairwise-overlap preservation, then solves for the
    unique linear extension and keeps it only if it permutes every pure
    state and is orthogonal.  Entries of the results lie in quarter
    integers; elements carry their matrix payload.
    """
    states = pure_states(n_bits)
    ns = len(states)
    dim = 4 ** n_bits
    vecs = np.stack([s.indicator() for s in states], axis=1)  # dim x ns
    overlap = vecs.T @ vecs
    mask_index = {s.mask: i for i, s in enumerate(states)}

    # cand_masks[u][v]: bitmask of states whose overlap with state u is v
    values = sorted({int(v) for v in overlap.ravel()})
    cand_masks = [{v: 0 for v in values} for _ in range(ns)]
    for u in range(ns):
        for t in range(ns):
            cand_masks[u][int(overlap[u, t])] |= 1 << t

    base = _independent_base(vecs)
    assert len(base) == dim
    v_base = vecs[:, base]
    inv_num, inv_den = _exact_inverse(v_base)

    scale = 2 ** (2 * n_bits)  # clear quarter-integer (or half) denominators
    found: dict[bytes, ScaledMat] = {}
    images = [0] * len(base)
    pow2 = 1 << np.arange(dim, dtype=np.int64)
    sorted_masks = sorted(mask_index)
    ortho_rhs = scale * scale * np.eye(dim, dtype=np.int64)

    def accept() -> None:
        w = vecs[:, images]
        m_num = w @ inv_num  # linear extension, times inv_den
        m_scaled = m_num * scale
        if np.any(m_scaled % inv_den):
            return
        m_scaled //= inv_den
        img = m_scaled @ vecs
        if not ((img == 0) | (img == scale)).all():
            return
        col_masks = pow2 @ (img == scale)
        if sorted(col_masks.tolist()) != sorted_masks:
            return
        if not np.array_equal(m_scaled @ m_scaled.T, ortho_rhs):
            return
        mat = ScaledMat(m_scaled, 2 * n_bits)
        found[mat.key()] = mat

    def search(depth: int, used: int) -> None:
        if depth == len(base):
            accept()
            return
        b = base[depth]
        cand = ~used & (1 << ns) - 1
        for k in range(depth):
            cand &= cand_masks[images[k]][int(overlap[b, base[k]])]
        while cand:
            low = cand & -cand
            cand ^= low
            q = low.bit_length() - 1
            images[depth] = q
            search(depth + 1, used | low)

    search(0, 0)
    group = from_elements(found.values())
    return find_generators(group)
