"""Generic finite-group machinery over exact element payloads.

Payloads (permutations, scaled-integer matrices, cyclotomic operators)
share a tiny protocol: ``mul``, ``inverse``, ``key``.  Keys are byte
strings equal exactly when the elements are equal, so groups are plain
hash sets with a remembered discovery order.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np


class GroupError(Exception):
    pass


class CapExceeded(GroupError):
    """Closure grew past the safety cap; generators are likely malformed."""


class NotASubgroup(GroupError):
    pass


class NotTransitive(GroupError):
    pass


@dataclass(frozen=True)
class Perm:
    """A permutation of range(degree); (a*b)(x) = a(b(x))."""

    images: tuple[int, ...]

    @staticmethod
    def identity(degree: int) -> "Perm":
        return Perm(tuple(range(degree)))

    @staticmethod
    def from_cycles(cycles: Sequence[Sequence[int]], degree: int) -> "Perm":
        images = list(range(degree))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + type(cyc)([cyc[0]])):
                images[a] = b
        return Perm(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def mul(self, other: "Perm") -> "Perm":
        return Perm(tuple(self.images[b] for b in other.images))

    def inverse(self) -> "Perm":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm(tuple(inv))

    def key(self) -> bytes:
        return bytes(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for start in range(self.degree):
            if start in seen:
                continue
            cyc, x = [start], self.images[start]
            seen.add(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self.images[x]
            out.append(tuple(cyc))
        return out

    def matrix(self) -> "ScaledMat":
        n = self.degree
        m = np.zeros((n, n), dtype=np.int64)
        for j, i in enumerate(self.images):
            m[i, j] = 1
        return ScaledMat(m, 0)


class ScaledMat:
    """An exact matrix with entries arr / 2**denom_exp.

    The group elements seen here are orthogonal, so inversion is a
    transpose; ``inverse`` verifies that before trusting it.
    """

    __slots__ = ("arr", "denom_exp", "_key")

    def __init__(self, arr: np.ndarray, denom_exp: int):
        arr = np.asarray(arr, dtype=np.int64)
        while denom_exp > 0 and not np.any(arr & 1):
            arr = arr >> 1
            denom_exp -= 1
        self.arr = arr
        self.arr.setflags(write=False)
        self.denom_exp = denom_exp
        self._key = bytes([denom_exp]) + arr.tobytes()

    @staticmethod
    def identity(n: int) -> "ScaledMat":
        return ScaledMat(np.eye(n, dtype=np.int64), 0)

    def mul(self, other: "ScaledMat") -> "ScaledMat":
        return ScaledMat(self.arr @ other.arr,
                         self.denom_exp + other.denom_exp)

    def inverse(self) -> "ScaledMat":
        t = ScaledMat(self.arr.T.copy(), self.denom_exp)
        if self.mul(t).key() != ScaledMat.identity(len(self.arr)).key():
            raise GroupError("matrix is not orthogonal; cannot invert")
        return t

    def key(self) -> bytes:
        return self._key

    def apply(self, vec: np.ndarray) -> tuple[np.ndarray, int]:
        """Image of an integer vector, as (integer vector, denominator exp)."""
        return self.arr @ vec, self.denom_exp

    def as_permutation(self) -> Optional[Perm]:
        if self.denom_exp != 0:
            return None
        n = len(self.arr)
        images = [-1] * n
        for j in range(n):
            col = self.arr[:, j]
            nz = np.nonzero(col)[0]
            if len(nz) != 1 or col[nz[0]] != 1:
                return None
            images[j] = int(nz[0])
        return Perm(tuple(images))

    def __eq__(self, other) -> bool:
        return isinstance(other, ScaledMat) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"ScaledMat(denom=2**{self.denom_exp},\n{self.arr})"


@dataclass
class FiniteGroup:
    """An enumerated finite group with canonical-key lookup."""

    generators: list
    elements: dict  # key -> element, in discovery order
    identity: object

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator:
        return iter(self.elements.values())

    def __contains__(self, elem) -> bool:
        return elem.key() in self.elements

    def contains_key(self, key: bytes) -> bool:
        return key in self.elements

    def same_elements(self, other: "FiniteGroup") -> bool:
        return set(self.elements) == set(other.elements)


DEFAULT_CAP = 10 ** 6


def closure(generators: Sequence, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """Breadth-first closure of the generators under composition.

    Enumeration order is by discovery, multiplying queue elements on the
    right by the generators in the given order.  Raises CapExceeded if
    more than ``cap`` elements appear.
    """
    if not generators:
        raise GroupError("need at least one generator")
    gens = list(generators)
    ident = gens[0].mul(gens[0].inverse())
    elements = {ident.key(): ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = x.mul(g)
            k = y.key()
            if k not in elements:
                if len(elements) >= cap:
                    raise CapExceeded(f"closure exceeded cap {cap}")
                elements[k] = y
                queue.append(y)
    return FiniteGroup(gens, elements, ident)


def from_elements(elements: Iterable, generators: Sequence = ()) -> FiniteGroup:
    """Wrap an explicit element collection (assumed closed) as a group."""
    elems = {}
    ident = None
    for e in elements:
        elems[e.key()] = e
    first = next(iter(elems.values()))
    ident = first.mul(first.inverse())
    if ident.key() not in elems:
        raise GroupError("element set does not contain the identity")
    return FiniteGroup(list(generators) or [first], elems, ident)


def find_generators(g: FiniteGroup) -> FiniteGroup:
    """Replace a group's generator list with a small one found greedily.

    Useful for groups built from explicit element lists, whose nominal
    generators need not generate; class and coset computations rely on
    generators that do.
    """
    gens: list = []
    have: set[bytes] = {g.identity.key()}
    for e in g:
        if e.key() not in have:
            gens.append(e)
            have = set(closure(gens).elements)
            if len(have) == g.order:
                break
    if have != set(g.elements):
        raise GroupError("element set is not closed")
    return FiniteGroup(gens or [g.identity], g.elements, g.identity)


def element_order(g: FiniteGroup, elem) -> int:
    ident_key = g.identity.key()
    x, n = elem, 1
    while x.key() != ident_key:
        x = x.mul(elem)
        n += 1
    return n


def element_order_histogram(g: FiniteGroup) -> dict[int, int]:
    hist: Counter = Counter()
    for e in g:
        hist[element_order(g, e)] += 1
    return dict(sorted(hist.items()))


def conjugacy_classes(g: FiniteGroup) -> list[tuple[object, int]]:
    """Class representatives (in discovery order) with class sizes."""
    cached = getattr(g, "_conjugacy_classes", None)
    if cached is not None:
        return cached
    gens = list(g.generators)
    inv_gens = [a.inverse() for a in gens]
    seen: set[bytes] = set()
    out = []
    for e in g:
        k = e.key()
        if k in seen:
            continue
        cls = {k}
        queue = deque([e])
        while queue:
            x = queue.popleft()
            for a, ai in zip(gens, inv_gens):
                y = a.mul(x).mul(ai)
                yk = y.key()
                if yk not in cls:
                    cls.add(yk)
                    queue.append(y)
        seen |= cls
        out.append((e, len(cls)))
    g._conjugacy_classes = out
    return out


def conjugacy_class_profile(g: FiniteGroup) -> list[tuple[int, int]]:
    """Sorted multiset of (representative order, class size) pairs.

    Strictly finer than the class-size multiset alone: two groups can
    share class sizes while assigning them to elements of different
    orders.
    """
    return sorted((element_order(g, rep), size)
                  for rep, size in conjugacy_classes(g))


def center_order(g: FiniteGroup) -> int:
    gens = list(g.generators)
    count = 0
    for e in g:
        if all(e.mul(a).key() == a.mul(e).key() for a in gens):
            count += 1
    return count


def derived_subgroup(g: FiniteGroup) -> FiniteGroup:
    """Normal closure of the commutators of the generators."""
    gens = list(g.generators)
    inv = {a.key(): a.inverse() for a in gens}
    comms = []
    for a in gens:
        for b in gens:
            c = a.mul(b).mul(inv[a.key()]).mul(inv[b.key()])
            comms.append(c)
    sub = closure(comms)
    while True:
        new = []
        for c in sub.generators:
            for a in gens:
                d = a.mul(c).mul(inv[a.key()])
                if d.key() not in sub.elements:
                    new.append(d)
        if not new:
            return sub
        sub = closure(sub.generators + new)


def abelianization_orders(g: FiniteGroup) -> list[int]:
    """Sorted element orders of G / [G, G] (a cheap abelian invariant)."""
    der = derived_subgroup(g)
    reps = _coset_reps(g, der)
    orders = []
    for r in reps:
        x, n = r, 1
        while not x.key() in der.elements:
            x = x.mul(r)
            n += 1
        orders.append(n)
    return sorted(orders)


def _coset_reps(g: FiniteGroup, h: FiniteGroup) -> list:
    """Left-coset representatives of h in g, identity's coset first."""
    reps = [g.identity]
    rep_invs = [g.identity]
    queue = deque([g.identity])
    while queue:
        r = queue.popleft()
        for a in g.generators:
            x = a.mul(r)
            if not any(ri.mul(x).key() in h.elements
                       for ri in rep_invs):
                reps.append(x)
                rep_invs.append(x.inverse())
                queue.append(x)
    return reps


def coset_action(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """The action of g on left cosets of h, as a permutation group.

    Degree is the index |g| / |h|.  Raises NotASubgroup when h is not
    contained in g.
    """
    for e in h:
        if e.key() not in g.elements:
            raise NotASubgroup("h has an element outside g")
    if g.order % h.order:
        raise NotASubgroup("|h| does not divide |g|")
    reps = _coset_reps(g, h)
    rep_invs = [r.inverse() for r in reps]
    index = g.order // h.order
    if len(reps) != index:
        raise GroupError("coset enumeration does not match the index")

    def coset_of(x) -> int:
        for i, ri in enumerate(rep_invs):
            if ri.mul(x).key() in h.elements:
                return i
        raise GroupError("element fell outside all cosets")

    perms = []
    for a in g.generators:
        perms.append(Perm(tuple(coset_of(a.mul(r)) for r in reps)))
    return closure(perms)


def orbit(generators: Sequence[Perm], point: int) -> set[int]:
    seen = {point}
    queue = deque([point])
    while queue:
        x = queue.popleft()
        for g in generators:
            y = g(x)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def minimal_block(generators: Sequence[Perm], degree: int,
                  pair: tuple[int, int]) -> list[int]:
    """The finest block system whose block contains the given pair.

    Returns the partition as a coloring: block id per point.
    """
    parent = list(range(degree))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: int, b: int) -> bool:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
        return True

    queue = deque()
    if union(*pair):
        queue.append(pair)
    while queue:
        a, b = queue.popleft()
        for g in generators:
            if union(g(a), g(b)):
                queue.append((g(a), g(b)))
    return [find(x) for x in range(degree)]


def is_primitive(action: FiniteGroup) -> tuple[bool, Optional[list[int]]]:
    """Primitivity of a transitive permutation group.

    Returns (True, None), or (False, block) with a minimal nontrivial
    block.  Raises NotTransitive for intransitive input.
    """
    gens = [e for e in action.generators]
    degree = gens[0].degree
    if len(orbit(gens, 0)) != degree:
        raise NotTransitive("the action is not transitive")
    if degree == 1:
        return True, None
    for b in range(1, degree):
        colors = minimal_block(gens, degree, (0, b))
        block = [x for x in range(degree) if colors[x] == colors[0]]
        if 1 < len(block) < degree:
            return False, block
    return True, None


def set_stabilizer(n_points: int, blocks: Sequence[Iterable[int]],
                   ) -> FiniteGroup:
    """All permutations of n points mapping the block family onto itself.

    Backtracking point-by-point; a partial assignment dies as soon as
    some block can no longer land inside any block of the family.
    """
    masks = [sum(1 << p for p in b) for b in blocks]
    nb = len(masks)
    point_blocks = [sum(1 << i for i, m in enumerate(masks) if m >> p & 1)
                    for p in range(n_points)]
    all_blocks_mask = (1 << nb) - 1
    size_groups: dict[int, int] = {}
    for i, m in enumerate(masks):
        size_groups.setdefault(bin(m).count("1"), 0)
        size_groups[bin(m).count("1")] |= 1 << i
    # candidate image blocks must have the right size from the start
    init_cand = [size_groups[bin(m).count("1")] for m in masks]

    order = sorted(range(n_points),
                   key=lambda p: -bin(point_blocks[p]).count("1"))
    found: list[Perm] = []
    images = [-1] * n_points
    used = [False] * n_points

    def search(depth: int, cand: list[int]) -> None:
        if depth == n_points:
            found.append(Perm(tuple(images)))
            return
        p = order[depth]
        pb = point_blocks[p]
        for q in range(n_points):
            if used[q]:
                continue
            qb = point_blocks[q]
            if bin(pb).count("1") != bin(qb).count("1"):
                continue
            new_cand = []
            ok = True
            for i in range(nb):
                c = cand[i] & (qb if pb >> i & 1 else ~qb & all_blocks_mask)
                if not c:
                    ok = False
                    break
                new_cand.append(c)
            if not ok:
                continue
            images[p] = q
            used[q] = True
            search(depth + 1, new_cand)
            used[q] = False
        images[p] = -1

    search(0, init_cand)
    return from_elements(found)


@dataclass
class GeneratorMap:
    """Result of extending a generator assignment along the Cayley graph."""

    status: str  # consistent-isomorphism | consistent-homomorphism | inconsistent
    image_order: int
    witness: Optional[tuple[tuple[int, ...], tuple[int, ...]]] = None
    images: dict = field(default_factory=dict)  # src key -> target element


def map_by_generators(src: FiniteGroup, images: Sequence) -> GeneratorMap:
    """Check whether generator images extend to a homomorphism.

    Walks the source group breadth-first; whenever two words reach the
    same source element their image products must agree, otherwise the
    two words are returned as an inconsistency witness.
    """
    gens = list(src.generators)
    if len(images) != len(gens):
        raise GroupError("need exactly one image per generator")
    tgt_ident = images[0].mul(images[0].inverse())
    phi = {src.identity.key(): tgt_ident}
    words = {src.identity.key(): ()}
    queue = deque([src.identity])
    witness = None
    while queue and witness is None:
        x = queue.popleft()
        xk = x.key()
        for i, g in enumerate(gens):
            y = x.mul(g)
            yk = y.key()
            img = phi[xk].mul(images[i])
            if yk not in phi:
                phi[yk] = img
                words[yk] = words[xk] + (i,)
                queue.append(y)
            elif phi[yk].key() != img.key():
                witness = (words[yk], words[xk] + (i,))
                break
    if witness is not None:
        return GeneratorMap("inconsistent", 0, witness)
    image_keys = {e.key() for e in phi.values()}
    status = ("consistent-isomorphism" if len(image_keys) == len(phi)
              else "consistent-homomorphism")
    return GeneratorMap(status, len(image_keys), None, phi)


@dataclass
class BatteryVerdict:
    distinguished: bool
    stage: Optional[str] = None
    left: object = None
    right: object = None

    def describe(self) -> str:
        if not self.distinguished:
            return "indistinguishable-by-battery"
        return f"distinguished at {self.stage}: {self.left} != {self.right}"


def invariant_battery(g: FiniteGroup, h: FiniteGroup) -> BatteryVerdict:
    """Compare cheap isomorphism invariants, in a fixed order.

    Distinguishing any stage proves non-isomorphism; passing them all
    proves nothing and is reported as such.
    """
    stages = [
        ("order", lambda x: x.order),
        ("element_order_histogram", element_order_histogram),
        ("conjugacy_class_sizes",
         lambda x: sorted(s for _, s in conjugacy_classes(x))),
        ("center_order", center_order),
        ("derived_subgroup_order", lambda x: derived_subgroup(x).order),
        ("abelianization_orders", abelianization_orders),
        ("conjugacy_class_order_size_profile", conjugacy_class_profile),
    ]
    for name, fn in stages:
        a, b = fn(g), fn(h)
        if a != b:
            return BatteryVerdict(True, name, a, b)
    return BatteryVerdict(False)
