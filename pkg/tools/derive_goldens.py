"""Re-derive the pinned golden data in toybit/goldens.py from scratch.

Solves for toy images of the five two-qubit extended-Clifford generators
{conj, CNOT, H(x)H, H(x)I, sqrtZ(x)sqrtZ} inside the relaxed two-bit toy
group TG(2) such that the generator map extends to an isomorphism.
Candidates are constrained class-by-class (an isomorphism preserves
element order and conjugacy class size) and by the orders of short words
against their extended-Clifford counterparts; each surviving tuple is
certified or rejected by a full homomorphism walk.  The printed images
of conj, CNOT and H(x)I are tried first in their pools so the solved
tuple stays as close to the published matrices as possible.

Run from the repository root:  python3 tools/derive_goldens.py
"""

from __future__ import annotations

import itertools
import time
from collections import deque

import numpy as np

from toybit.cyclotomic import CliffordOp, kron
from toybit.groups import ScaledMat, closure, element_order, map_by_generators
from toybit.search import linear_validity_group
from toybit.toyops import SWAP_TILDE, kron_mats

# The three images as displayed in the publication.  The conjugation
# image is consistent and is kept; the displayed CNOT and H(x)I images
# are valid group elements but mutually inconsistent with it (the
# conjugation image must commute with both, and the displayed matrices
# do not), so those two are re-solved below.
_CONJ_FACTOR = ScaledMat(np.array([
    [1, 1, -1, 1], [1, 1, 1, -1], [-1, 1, 1, 1], [1, -1, 1, 1]]), 1)
_CNOT_FACTOR = ScaledMat(np.array([
    [-1, 1, 1, 1], [1, 1, -1, 1], [1, -1, 1, 1], [1, 1, 1, -1]]), 1)
_HI_LEFT = ScaledMat(np.array([
    [1, -1, 1, 1], [-1, 1, 1, 1], [1, 1, -1, 1], [1, 1, 1, -1]]), 1)
_HI_RIGHT = ScaledMat(np.array([
    [1, 1, 1, -1], [1, 1, -1, 1], [1, -1, 1, 1], [-1, 1, 1, 1]]), 1)

CONJ_IMAGE = kron_mats(_CONJ_FACTOR, _CONJ_FACTOR)
CNOT_IMAGE = SWAP_TILDE.matrix().mul(kron_mats(_CNOT_FACTOR, _CNOT_FACTOR))
HI_IMAGE = kron_mats(_HI_LEFT, _HI_RIGHT)


def clifford_generators():
    h = CliffordOp(np.array([[1, 1], [1, -1]]))
    s = CliffordOp(np.stack([
        np.diag([1, 0]).astype(np.int64),
        np.zeros((2, 2), np.int64),
        np.diag([0, 1]).astype(np.int64),
        np.zeros((2, 2), np.int64)]))
    ident = CliffordOp.identity(2)
    cnot = np.zeros((4, 4), np.int64)
    cnot[0, 0] = cnot[1, 1] = cnot[2, 3] = cnot[3, 2] = 1
    conj = CliffordOp(np.eye(4, dtype=np.int64), antiunitary=True)
    return [conj, CliffordOp(cnot), kron(h, ident), kron(h, h), kron(s, s)]


def class_partition(group):
    """Map each element key to the size of its conjugacy class."""
    gens = list(group.generators)
    inv_gens = [a.inverse() for a in gens]
    sizes: dict[bytes, int] = {}
    for e in group:
        if e.key() in sizes:
            continue
        cls = {e.key(): e}
        queue = deque([e])
        while queue:
            x = queue.popleft()
            for a, ai in zip(gens, inv_gens):
                y = a.mul(x).mul(ai)
                if y.key() not in cls:
                    cls[y.key()] = y
                    queue.append(y)
        for k in cls:
            sizes[k] = len(cls)
    return sizes


def word_order(group, elems, word):
    prod = elems[word[0]]
    for i in word[1:]:
        prod = prod.mul(elems[i])
    return element_order(group, prod)


# Short words over generator indices used as isomorphism-invariant
# fingerprints; at search level k only words whose max index is k apply.
WORDS = [w for n in (1, 2, 3)
         for w in itertools.product(range(5), repeat=n)]


def main() -> None:
    t0 = time.time()
    ec_gens = clifford_generators()
    ec2 = closure(ec_gens)
    tg2 = linear_validity_group(2)
    print(f"|EC(2)/U(1)| = {ec2.order}, |TG(2)| = {tg2.order} "
          f"({time.time() - t0:.0f}s)")
    assert ec2.order == tg2.order == 23040

    t0 = time.time()
    ec_sizes = class_partition(ec2)
    tg_sizes = class_partition(tg2)
    print(f"class partitions done ({time.time() - t0:.0f}s)")

    gen_profiles = [(element_order(ec2, g), ec_sizes[g.key()])
                    for g in ec_gens]
    print("generator (order, class size):", gen_profiles)

    pools = []
    printed = [CONJ_IMAGE, CNOT_IMAGE, HI_IMAGE]
    for lvl, prof in enumerate(gen_profiles):
        pool = [x for x in tg2
                if (element_order(tg2, x), tg_sizes[x.key()]) == prof]
        if lvl < 3 and printed[lvl] in tg2:
            k = printed[lvl].key()
            pool.sort(key=lambda x: x.key() != k)
            print(f"level {lvl}: printed image in pool -> "
                  f"{pool[0].key() == k}")
        pools.append(pool)
    print("pool sizes:", [len(p) for p in pools])

    level_words = [[w for w in WORDS if max(w) == lvl]
                   for lvl in range(5)]
    targets = [{w: word_order(ec2, ec_gens, w) for w in ws}
               for ws in level_words]

    stats = [0] * 5
    certified = [0]

    def extend(chosen):
        lvl = len(chosen)
        if lvl == 5:
            certified[0] += 1
            gm = map_by_generators(ec2, chosen)
            return list(chosen) if gm.status == "consistent-isomorphism" \
                else None
        for x in pools[lvl]:
            cand = chosen + [x]
            if all(word_order(tg2, cand, w) == t
                   for w, t in targets[lvl].items()):
                stats[lvl] += 1
                got = extend(cand)
                if got:
                    return got
        return None

    t0 = time.time()
    solution = extend([])
    print(f"search: candidates per level {stats}, "
          f"full certifications {certified[0]} ({time.time() - t0:.0f}s)")
    if solution is None:
        raise SystemExit("no consistent generator images found")

    labels = ["CONJ_IMAGE", "CNOT_IMAGE", "HI_IMAGE",
              "P1_TILDE", "P2_TILDE"]
    for name, m, ref in zip(labels, solution, printed):
        print(f"{name}: matches published matrix -> "
              f"{m.key() == ref.key()}")
    for name, m in zip(labels, solution):
        perm = m.as_permutation()
        if perm is not None:
            print(f"{name} = Perm({perm.images}).matrix()")
        else:
            body = np.array2string(m.arr, separator=", ", prefix="    ")
            print(f"{name} = ScaledMat(np.array(\n    {body},\n"
                  f"    dtype=np.int64), {m.denom_exp})")
    grp = closure(solution)
    print(f"|closure(solved images)| = {grp.order}")
    derive_p3_and_battery()


def derive_p3_and_battery() -> None:
    from toybit.groups import (FiniteGroup, conjugacy_class_profile,
                               coset_action, find_generators, is_primitive,
                               invariant_battery, set_stabilizer)
    from toybit.states import pure_states
    from toybit.toyops import ontic_pair_perm
    from toybit.groups import Perm

    t0 = time.time()
    blocks = [s.support for s in pure_states(2)]
    spek = find_generators(set_stabilizer(16, blocks))
    print(f"|Spekkens two-bit group| = {spek.order} ({time.time()-t0:.0f}s)")

    swap12 = Perm.from_cycles([(0, 1)], 4)
    swap23 = Perm.from_cycles([(1, 2)], 4)
    ident = Perm.identity(4)
    g1 = ontic_pair_perm(swap12, swap23)
    g2 = ontic_pair_perm(ident, swap12)
    base = closure([g1, g2])
    print(f"|<(12)x(23), Ix(12)>| = {base.order}")

    t0 = time.time()
    p3 = None
    for x in spek:
        if x.key() in base.elements:
            continue
        sub = closure([g1, g2, x])
        if sub.order == 720:
            p3 = x
            break
    print(f"P3_TILDE = Perm({p3.images})  ({time.time()-t0:.0f}s)")
    sub = closure([g1, g2, p3])
    action = coset_action(spek, sub)
    prim, block = is_primitive(action)
    print(f"coset action degree 16, primitive -> {prim}")

    t0 = time.time()
    from toybit.clifford import build_group
    c2 = build_group(2, extended=False)
    verdict = invariant_battery(spek, c2)
    print(f"battery: distinguished={verdict.distinguished} "
          f"stage={verdict.stage} ({time.time()-t0:.0f}s)")
    print("SPEK_CLASS_PROFILE =", verdict.left)
    print("C2_CLASS_PROFILE =", verdict.right)


if __name__ == "__main__":
    main()
