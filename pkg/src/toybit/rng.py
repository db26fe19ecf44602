"""Deterministic, splittable random streams.

Every stochastic routine takes an explicit 64-bit seed and derives
per-step (or per-shot) sub-seeds with splitmix64, so results are
bit-reproducible regardless of call interleaving or thread count.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1


def splitmix64(x: int) -> int:
    """One splitmix64 scrambling round; maps 64-bit ints to 64-bit ints."""
    x = (x + 0x9E3779B97F4A7C15) & _MASK
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK
    return x ^ (x >> 31)


def derive_seed(root: int, *path: int) -> int:
    """Derive a sub-seed from a root seed and an index path.

    derive_seed(s, i, j) is the j-th child of the i-th child of s; distinct
    paths give statistically independent streams.
    """
    x = root & _MASK
    for p in path:
        x = splitmix64(x ^ ((p & _MASK) * 0xD1342543DE82EF95 & _MASK))
    return x


def randrange(seed: int, n: int) -> int:
    """A single uniform draw from [0, n) determined entirely by ``seed``.

    Rejection sampling on splitmix64 output keeps the draw exactly uniform.
    """
    if n <= 0:
        raise ValueError("n must be positive")
    x = seed & _MASK
    limit = (1 << 64) - ((1 << 64) % n)
    while True:
        x = splitmix64(x)
        if x < limit:
            return x % n
