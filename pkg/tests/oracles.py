"""Independent brute-force oracles.

Everything here evaluates the literal textbook definitions: interiors as
unions over the whole open family, the point quantifiers of the delta and
theta operators over every open neighborhood, and set-kind predicates
built from those.  Nothing uses the minimal-neighborhood tables the
package relies on, so agreement between the two is a real check.
"""

from __future__ import annotations

import itertools

from finitop.core import FinSpace, complement, iter_points


def interior(space: FinSpace, a: int) -> int:
    out = 0
    for u in space.opens.members:
        if not u & ~a:
            out |= u
    return out


def closure(space: FinSpace, a: int) -> int:
    acc = space.full
    for u in space.opens.members:
        c = complement(u, space.n)
        if not a & ~c:
            acc &= c
    return acc


def _open_neighborhoods(space: FinSpace, x: int):
    return [u for u in space.opens.members if u >> x & 1]


def cl_delta(space: FinSpace, a: int) -> int:
    out = 0
    for x in range(space.n):
        if all(interior(space, closure(space, u)) & a for u in _open_neighborhoods(space, x)):
            out |= 1 << x
    return out


def int_delta(space: FinSpace, a: int) -> int:
    out = 0
    for x in range(space.n):
        if any(
            not interior(space, closure(space, u)) & ~a
            for u in _open_neighborhoods(space, x)
        ):
            out |= 1 << x
    return out


def cl_theta(space: FinSpace, a: int) -> int:
    out = 0
    for x in range(space.n):
        if all(closure(space, u) & a for u in _open_neighborhoods(space, x)):
            out |= 1 << x
    return out


def int_theta(space: FinSpace, a: int) -> int:
    out = 0
    for x in range(space.n):
        if any(not closure(space, u) & ~a for u in _open_neighborhoods(space, x)):
            out |= 1 << x
    return out


def is_semiopen(space, a):
    return not a & ~closure(space, interior(space, a))


def is_preopen(space, a):
    return not a & ~interior(space, closure(space, a))


def is_b_open(space, a):
    hull = closure(space, interior(space, a)) | interior(space, closure(space, a))
    return not a & ~hull


def is_e_open(space, a):
    hull = closure(space, int_delta(space, a)) | interior(space, cl_delta(space, a))
    return not a & ~hull


def is_a_open(space, a):
    return not a & ~interior(space, closure(space, int_delta(space, a)))


def family(space: FinSpace, kind: str) -> set[int]:
    full = space.full
    subsets = range(full + 1)
    if kind == "open":
        return set(space.opens.members)
    if kind == "closed":
        return {complement(u, space.n) for u in space.opens.members}
    if kind == "clopen":
        return family(space, "open") & family(space, "closed")
    if kind == "regular-open":
        return {a for a in subsets if a == interior(space, closure(space, a))}
    if kind == "regular-closed":
        return {a for a in subsets if a == closure(space, interior(space, a))}
    if kind == "delta-closed":
        return {a for a in subsets if a == cl_delta(space, a)}
    if kind == "delta-open":
        return {complement(a, space.n) for a in family(space, "delta-closed")}
    if kind == "theta-closed":
        return {a for a in subsets if a == cl_theta(space, a)}
    if kind == "theta-open":
        return {complement(a, space.n) for a in family(space, "theta-closed")}
    if kind == "semiopen":
        return {a for a in subsets if is_semiopen(space, a)}
    if kind == "semiclosed":
        return {complement(a, space.n) for a in family(space, "semiopen")}
    if kind == "preopen":
        return {a for a in subsets if is_preopen(space, a)}
    if kind == "preclosed":
        return {complement(a, space.n) for a in family(space, "preopen")}
    if kind == "b-open":
        return {a for a in subsets if is_b_open(space, a)}
    if kind == "b-closed":
        return {complement(a, space.n) for a in family(space, "b-open")}
    if kind == "e-open":
        return {a for a in subsets if is_e_open(space, a)}
    if kind == "e-closed":
        return {complement(a, space.n) for a in family(space, "e-open")}
    if kind == "a-open":
        return {a for a in subsets if is_a_open(space, a)}
    if kind == "a-closed":
        return {complement(a, space.n) for a in family(space, "a-open")}
    if kind == "e-regular":
        return family(space, "e-open") & family(space, "e-closed")
    if kind == "b-regular":
        return family(space, "b-open") & family(space, "b-closed")
    if kind == "e-theta-open":
        return {a for a in subsets if a == e_int_theta(space, a)}
    if kind == "e-theta-closed":
        return {complement(a, space.n) for a in family(space, "e-theta-open")}
    raise ValueError(kind)


def e_cl(space: FinSpace, a: int) -> int:
    acc = space.full
    for c in family(space, "e-closed"):
        if not a & ~c:
            acc &= c
    return acc


def e_cl_theta(space: FinSpace, a: int) -> int:
    """Cluster-point definition over e-open neighborhoods."""
    out = 0
    eo = family(space, "e-open")
    for x in range(space.n):
        if all(e_cl(space, u) & a for u in eo if u >> x & 1):
            out |= 1 << x
    return out


def e_int_theta(space: FinSpace, a: int) -> int:
    out = 0
    eo = family(space, "e-open")
    for x in range(space.n):
        if any(not e_cl(space, u) & ~a for u in eo if u >> x & 1):
            out |= 1 << x
    return out


def e_cl_theta_by_intersection(space: FinSpace, a: int) -> int:
    """Intersection of all e-regular supersets."""
    acc = space.full
    for v in family(space, "e-regular"):
        if not a & ~v:
            acc &= v
    return acc


def product_opens_brute(s1: FinSpace, s2: FinSpace) -> set[int]:
    """Subsets of the product that contain a box neighborhood around each of
    their points; the basis definition of the product topology."""
    n1, n2 = s1.n, s2.n
    total = n1 * n2
    boxes = []
    for u1 in s1.opens.members:
        for u2 in s2.opens.members:
            box = 0
            for p1 in iter_points(u1):
                box |= u2 << (p1 * n2)
            boxes.append(box)
    out = set()
    for w in range(1 << total):
        ok = True
        for p in iter_points(w):
            if not any(box >> p & 1 and not box & ~w for box in boxes):
                ok = False
                break
        if ok:
            out.add(w)
    return out


def all_topologies_brute(n: int) -> set[tuple[int, ...]]:
    """All union/intersection-closed families containing the empty and full
    set, by brute force over every family of proper nonempty subsets."""
    full = (1 << n) - 1
    middle = [m for m in range(1, full)]
    out = set()
    for bits in range(1 << len(middle)):
        fam = {0, full}
        for i, m in enumerate(middle):
            if bits >> i & 1:
                fam.add(m)
        ok = True
        for a, b in itertools.combinations(fam, 2):
            if a | b not in fam or a & b not in fam:
                ok = False
                break
        if ok:
            out.add(tuple(sorted(fam)))
    return out
