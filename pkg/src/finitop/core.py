"""Finite topological spaces over bitmask subsets.

Points of an ``n``-point space are the indices ``0..n-1``.  A subset is a
plain ``int`` whose bit ``i`` records membership of point ``i``; all bits at
position ``n`` and above are zero.  Families of subsets are kept
deduplicated in (popcount, value) order, which is the canonical order used
everywhere, including serialized output.

Every value here is immutable after construction and safe to share across
threads.  Spaces should be built through :func:`validate_topology` (or the
enumeration / product constructors), which establish the family invariants
that the fast interior/closure implementations rely on.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from math import prod
from typing import Iterable, Iterator, Sequence

from .errors import (
    MissingEmptyOrFull,
    NotClosedUnderIntersection,
    NotClosedUnderUnion,
    SpaceMismatch,
    WidthOverflow,
)

DEFAULT_MASK_CEILING = 16
HARD_MASK_CEILING = 24
MASK_CEILING_ENV = "FINITOP_MASK_CEILING"


def mask_ceiling() -> int:
    """Largest permitted ground-set size, overridable via the environment."""
    raw = os.environ.get(MASK_CEILING_ENV)
    if raw is None:
        return DEFAULT_MASK_CEILING
    try:
        value = int(raw)
    except ValueError:
        raise WidthOverflow(f"{MASK_CEILING_ENV} must be an integer, got {raw!r}")
    if not 1 <= value <= HARD_MASK_CEILING:
        raise WidthOverflow(
            f"{MASK_CEILING_ENV} must be in 1..{HARD_MASK_CEILING}", value=value
        )
    return value


def full_mask(n: int) -> int:
    return (1 << n) - 1


def complement(mask: int, n: int) -> int:
    return ~mask & ((1 << n) - 1)


def mask_of(points: Iterable[int]) -> int:
    out = 0
    for p in points:
        out |= 1 << p
    return out


def points_of(mask: int) -> tuple[int, ...]:
    return tuple(iter_points(mask))


def iter_points(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def canonical_members(masks: Iterable[int]) -> tuple[int, ...]:
    """Deduplicate and sort into the canonical (popcount, value) order."""
    return tuple(sorted(set(masks), key=lambda m: (m.bit_count(), m)))


class SetFamily:
    """An ordered, duplicate-free collection of subset masks.

    Membership tests are O(1); iteration follows the canonical order.
    """

    __slots__ = ("members", "_set")

    def __init__(self, masks: Iterable[int]):
        self.members = canonical_members(masks)
        self._set = frozenset(self.members)

    def __contains__(self, mask: int) -> bool:
        return mask in self._set

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __getitem__(self, i: int) -> int:
        return self.members[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, SetFamily) and self.members == other.members

    def __hash__(self) -> int:
        return hash(self.members)

    def __repr__(self) -> str:
        return f"SetFamily({len(self.members)} members)"


class FinSpace:
    """A finite topological space: point count plus its full open family.

    ``labels`` are I/O-only; identity (equality, hashing, caches) is by
    ``(n, opens)`` alone.  ``min_nbhd[x]`` is the smallest open set
    containing ``x``; it exists because the family is finite and closed
    under intersection, and it drives O(n) interior/closure.
    """

    __slots__ = ("n", "opens", "labels", "min_nbhd", "_hash", "_ops")

    def __init__(self, n: int, opens: SetFamily, labels: Sequence[str] | None = None):
        self.n = n
        self.opens = opens
        self.labels = tuple(labels) if labels is not None else None
        full = (1 << n) - 1
        nbhd = []
        for x in range(n):
            bit = 1 << x
            acc = full
            for u in opens.members:
                if u & bit:
                    acc &= u
            nbhd.append(acc)
        self.min_nbhd = tuple(nbhd)
        self._hash = hash((n, opens.members))
        self._ops = None  # lazily attached operator-layer cache

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FinSpace)
            and self.n == other.n
            and self.opens.members == other.opens.members
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"FinSpace(n={self.n}, opens={len(self.opens)})"

    @property
    def full(self) -> int:
        return (1 << self.n) - 1


def _check_fits(space: FinSpace, mask: int) -> None:
    if mask < 0 or mask >> space.n:
        raise WidthOverflow(
            f"mask {mask} does not fit a {space.n}-point space", mask=mask, n=space.n
        )


def complete_family(n: int, masks: Iterable[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Close a family under pairwise union/intersection, adding empty and full.

    Returns ``(completed, added)`` in canonical order.
    """
    start = set(masks)
    fam = set(start)
    fam.add(0)
    fam.add(full_mask(n))
    frontier = list(fam)
    while frontier:
        m = frontier.pop()
        new = []
        for other in fam:
            u = m | other
            if u not in fam:
                new.append(u)
            i = m & other
            if i not in fam:
                new.append(i)
        for m2 in new:
            if m2 not in fam:
                fam.add(m2)
                frontier.append(m2)
    completed = canonical_members(fam)
    added = canonical_members(m for m in fam if m not in start)
    return completed, added


def validate_topology(
    n: int,
    subsets: Iterable[int],
    *,
    strict: bool = False,
    labels: Sequence[str] | None = None,
) -> FinSpace:
    """Build a space from a family of subset masks.

    In strict mode the family must already contain the empty and full sets
    and be closed under pairwise union and intersection; violations raise
    with a witness pair.  Otherwise the family is completed automatically
    (use :func:`complete_family` to learn what was added).
    """
    ceiling = mask_ceiling()
    if not 1 <= n <= ceiling:
        raise WidthOverflow(f"point count must be in 1..{ceiling}", n=n)
    masks = canonical_members(subsets)
    full = full_mask(n)
    for m in masks:
        if m < 0 or m >> n:
            raise WidthOverflow(f"subset {m} does not fit width {n}", mask=m, n=n)
    if strict:
        if 0 not in masks or full not in masks:
            raise MissingEmptyOrFull(
                "strict family must contain the empty and the full set"
            )
        mset = frozenset(masks)
        for a, b in itertools.combinations(masks, 2):
            if a | b not in mset:
                raise NotClosedUnderUnion(a, b)
        for a, b in itertools.combinations(masks, 2):
            if a & b not in mset:
                raise NotClosedUnderIntersection(a, b)
        family = masks
    else:
        family, _added = complete_family(n, masks)
    return FinSpace(n, SetFamily(family), labels)


def interior(space: FinSpace, a: int) -> int:
    """Largest open subset of ``a``: the union of all opens inside it."""
    _check_fits(space, a)
    out = 0
    bit = 1
    for ux in space.min_nbhd:
        if not ux & ~a:
            out |= bit
        bit <<= 1
    return out


def closure(space: FinSpace, a: int) -> int:
    """Smallest closed superset of ``a``."""
    _check_fits(space, a)
    out = 0
    bit = 1
    for ux in space.min_nbhd:
        if ux & a:
            out |= bit
        bit <<= 1
    return out


@dataclass(frozen=True)
class PointMap:
    """A total function between two spaces, as a tuple of target indices."""

    dom: FinSpace
    cod: FinSpace
    map: tuple[int, ...]

    def __post_init__(self):
        if len(self.map) != self.dom.n:
            raise SpaceMismatch(
                f"map has {len(self.map)} entries for a {self.dom.n}-point domain"
            )
        for y in self.map:
            if not 0 <= y < self.cod.n:
                raise SpaceMismatch(f"target index {y} outside codomain", y=y)

    def __call__(self, x: int) -> int:
        return self.map[x]

    def __repr__(self) -> str:
        return f"PointMap({self.dom.n}->{self.cod.n}, {self.map})"


def identity_map(space: FinSpace) -> PointMap:
    return PointMap(space, space, tuple(range(space.n)))


def constant_map(dom: FinSpace, cod: FinSpace, y: int) -> PointMap:
    return PointMap(dom, cod, (y,) * dom.n)


def image(f: PointMap, a: int) -> int:
    """Forward image of a domain subset."""
    _check_fits(f.dom, a)
    out = 0
    fmap = f.map
    for x in iter_points(a):
        out |= 1 << fmap[x]
    return out


def preimage(f: PointMap, b: int) -> int:
    """Inverse image of a codomain subset."""
    _check_fits(f.cod, b)
    out = 0
    bit = 1
    for y in f.map:
        if b >> y & 1:
            out |= bit
        bit <<= 1
    return out


_product_cache: dict[tuple, FinSpace] = {}


def _product2(s1: FinSpace, s2: FinSpace) -> FinSpace:
    """Binary product with row-major encoding (p1, p2) -> p1 * s2.n + p2."""
    key = (s1.n, s1.opens.members, s2.n, s2.opens.members)
    hit = _product_cache.get(key)
    if hit is not None:
        return hit
    n2 = s2.n
    boxes = set()
    for u1 in s1.opens.members:
        for u2 in s2.opens.members:
            box = 0
            for p1 in iter_points(u1):
                box |= u2 << (p1 * n2)
            boxes.add(box)
    opens = set(boxes)
    frontier = list(opens)
    while frontier:
        w = frontier.pop()
        for b in boxes:
            u = w | b
            if u not in opens:
                opens.add(u)
                frontier.append(u)
    space = FinSpace(s1.n * n2, SetFamily(opens))
    _product_cache[key] = space
    return space


def product(spaces: Sequence[FinSpace]) -> FinSpace:
    """Product space of one or more factors, row-major point encoding.

    The open family is the closure of the open boxes under union (boxes are
    already intersection-closed), i.e. the finite product topology.
    """
    if not spaces:
        raise WidthOverflow("product needs at least one factor")
    total = prod(s.n for s in spaces)
    if total > mask_ceiling():
        raise WidthOverflow(
            f"product has {total} points, above the ceiling {mask_ceiling()}",
            total=total,
        )
    out = spaces[0]
    for nxt in spaces[1:]:
        out = _product2(out, nxt)
    return out


def product_index(sizes: Sequence[int], coords: Sequence[int]) -> int:
    """Row-major index of a point tuple in a product of the given sizes."""
    idx = 0
    for size, c in zip(sizes, coords):
        idx = idx * size + c
    return idx


def product_coords(sizes: Sequence[int], index: int) -> tuple[int, ...]:
    out = []
    for size in reversed(sizes):
        out.append(index % size)
        index //= size
    return tuple(reversed(out))


def graph_map(f: PointMap) -> PointMap:
    """The map x -> (x, f(x)) into the product of domain and codomain."""
    space = product([f.dom, f.cod])
    n2 = f.cod.n
    return PointMap(f.dom, space, tuple(x * n2 + y for x, y in enumerate(f.map)))
