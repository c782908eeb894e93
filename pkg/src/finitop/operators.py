"""Generalized interior/closure operators and open-set families.

The delta operators are built from ``int(cl(U))`` over open neighborhoods,
the theta operators from ``cl(U)``, and the e-family from the delta
operators:

* semiopen      A <= cl(int(A))
* preopen       A <= int(cl(A))
* b-open        A <= cl(int(A)) | int(cl(A))
* e-open        A <= cl(int_delta(A)) | int(cl_delta(A))
* a-open        A <= int(cl(int_delta(A)))
* e-regular     e-open and e-closed
* b-regular     b-open and b-closed
* e-theta-open  fixed points of the e-theta-interior

Families are computed by brute force over all ``2^n`` subsets with
per-space memoized tables and cached per (space, kind).  On a finite space
every point has a smallest open neighborhood, and ``cl``, ``int(cl(.))``
are monotone, so the point quantifiers in the delta/theta operators reduce
to that neighborhood; the literal quantifier forms live in the test oracles
and are checked against these implementations exhaustively.
"""

from __future__ import annotations

from .core import FinSpace, SetFamily, _check_fits, closure, complement, interior
from .errors import UnknownKind

_KIND_DUALS = (
    ("open", "closed"),
    ("regular-open", "regular-closed"),
    ("delta-open", "delta-closed"),
    ("theta-open", "theta-closed"),
    ("semiopen", "semiclosed"),
    ("preopen", "preclosed"),
    ("b-open", "b-closed"),
    ("e-open", "e-closed"),
    ("a-open", "a-closed"),
    ("e-theta-open", "e-theta-closed"),
)

SELF_DUAL_KINDS = ("clopen", "e-regular", "b-regular")

OPEN_TO_CLOSED = dict(_KIND_DUALS)
CLOSED_TO_OPEN = {c: o for o, c in _KIND_DUALS}

KINDS: tuple[str, ...] = tuple(
    k for pair in _KIND_DUALS for k in pair
) + SELF_DUAL_KINDS


def dual_kind(kind: str) -> str:
    """The complement-image kind: open <-> closed, self-dual kinds fixed."""
    if kind in OPEN_TO_CLOSED:
        return OPEN_TO_CLOSED[kind]
    if kind in CLOSED_TO_OPEN:
        return CLOSED_TO_OPEN[kind]
    if kind in SELF_DUAL_KINDS:
        return kind
    raise UnknownKind(f"unknown set kind {kind!r}", kind=kind)


class _Ops:
    """Per-space memoized operator tables; attached lazily to the space."""

    __slots__ = (
        "space",
        "n",
        "full",
        "cl_min",
        "icl_min",
        "families",
        "family_at",
        "er_min_at",
        "kernel_memo",
        "eth_memo",
        "eth_table",
        "scratch",
    )

    def __init__(self, space: FinSpace):
        self.space = space
        self.n = space.n
        self.full = space.full
        self.cl_min = tuple(closure(space, u) for u in space.min_nbhd)
        self.icl_min = tuple(interior(space, c) for c in self.cl_min)
        self.families: dict[str, SetFamily] = {}
        self.family_at: dict[str, tuple[tuple[int, ...], ...]] = {}
        self.er_min_at: tuple[tuple[int, ...], ...] | None = None
        self.kernel_memo: dict[tuple[str, int], int] = {}
        self.eth_memo: dict[int, int] = {}
        self.eth_table: tuple[int, ...] | None = None
        self.scratch: dict = {}  # bulk-engine caches keyed by consumer


def _ops(space: FinSpace) -> _Ops:
    ops = space._ops
    if ops is None:
        ops = _Ops(space)
        space._ops = ops
    return ops


def delta_closure(space: FinSpace, a: int) -> int:
    """Points whose every open neighborhood U has int(cl(U)) meeting ``a``."""
    _check_fits(space, a)
    out = 0
    bit = 1
    for m in _ops(space).icl_min:
        if m & a:
            out |= bit
        bit <<= 1
    return out


def delta_interior(space: FinSpace, a: int) -> int:
    """Points with some open neighborhood U such that int(cl(U)) <= ``a``."""
    _check_fits(space, a)
    out = 0
    bit = 1
    for m in _ops(space).icl_min:
        if not m & ~a:
            out |= bit
        bit <<= 1
    return out


def theta_closure(space: FinSpace, a: int) -> int:
    """Points whose every open neighborhood has closure meeting ``a``."""
    _check_fits(space, a)
    out = 0
    bit = 1
    for m in _ops(space).cl_min:
        if m & a:
            out |= bit
        bit <<= 1
    return out


def theta_interior(space: FinSpace, a: int) -> int:
    """Points with an open neighborhood whose closure lies inside ``a``."""
    _check_fits(space, a)
    out = 0
    bit = 1
    for m in _ops(space).cl_min:
        if not m & ~a:
            out |= bit
        bit <<= 1
    return out


def _open_side_members(space: FinSpace, kind: str) -> list[int]:
    n = space.n
    full = space.full
    if kind == "open":
        return list(space.opens.members)
    if kind == "regular-open":
        return [a for a in range(full + 1) if a == interior(space, closure(space, a))]
    if kind == "regular-closed":
        return [a for a in range(full + 1) if a == closure(space, interior(space, a))]
    if kind == "semiopen":
        return [
            a
            for a in range(full + 1)
            if not a & ~closure(space, interior(space, a))
        ]
    if kind == "preopen":
        return [
            a
            for a in range(full + 1)
            if not a & ~interior(space, closure(space, a))
        ]
    if kind == "b-open":
        out = []
        for a in range(full + 1):
            hull = closure(space, interior(space, a)) | interior(space, closure(space, a))
            if not a & ~hull:
                out.append(a)
        return out
    if kind == "e-open":
        out = []
        for a in range(full + 1):
            hull = closure(space, delta_interior(space, a)) | interior(
                space, delta_closure(space, a)
            )
            if not a & ~hull:
                out.append(a)
        return out
    if kind == "a-open":
        return [
            a
            for a in range(full + 1)
            if not a & ~interior(space, closure(space, delta_interior(space, a)))
        ]
    if kind == "delta-closed":
        return [a for a in range(full + 1) if a == delta_closure(space, a)]
    if kind == "theta-open":
        return [a for a in range(full + 1) if a == theta_interior(space, a)]
    if kind == "e-theta-open":
        return [a for a in range(full + 1) if a == e_theta_interior(space, a)]
    raise UnknownKind(f"unknown set kind {kind!r}", kind=kind)


def family(space: FinSpace, kind: str) -> SetFamily:
    """All subsets of the given kind, cached per (space, kind).

    Closed-side kinds are the complement images of their open-side duals;
    regular-closed and delta-closed are computed from their own fixpoint
    predicates (their duality is a tested invariant).
    """
    ops = _ops(space)
    hit = ops.families.get(kind)
    if hit is not None:
        return hit
    n = space.n
    if kind in ("closed", "semiclosed", "preclosed", "b-closed", "e-closed",
                "a-closed", "theta-closed", "delta-open", "e-theta-closed"):
        open_side = dual_kind(kind) if kind != "delta-open" else "delta-closed"
        members = [complement(m, n) for m in family(space, open_side).members]
        fam = SetFamily(members)
    elif kind == "clopen":
        opens = set(space.opens.members)
        fam = SetFamily(m for m in family(space, "closed").members if m in opens)
    elif kind == "e-regular":
        eo = set(family(space, "e-open").members)
        fam = SetFamily(m for m in family(space, "e-closed").members if m in eo)
    elif kind == "b-regular":
        bo = set(family(space, "b-open").members)
        fam = SetFamily(m for m in family(space, "b-closed").members if m in bo)
    elif kind in ("open", "regular-open", "regular-closed", "semiopen", "preopen",
                  "b-open", "e-open", "a-open", "delta-closed", "theta-open",
                  "e-theta-open"):
        fam = SetFamily(_open_side_members(space, kind))
    else:
        raise UnknownKind(f"unknown set kind {kind!r}", kind=kind)
    ops.families[kind] = fam
    return fam


def family_at(space: FinSpace, kind: str) -> tuple[tuple[int, ...], ...]:
    """Per-point tuples of the kind's members containing each point."""
    ops = _ops(space)
    hit = ops.family_at.get(kind)
    if hit is not None:
        return hit
    members = family(space, kind).members
    per_point = tuple(
        tuple(m for m in members if m >> x & 1) for x in range(space.n)
    )
    ops.family_at[kind] = per_point
    return per_point


def _minimal(members: tuple[int, ...]) -> tuple[int, ...]:
    """Inclusion-minimal members (every member contains one of these)."""
    out = []
    for m in members:  # canonical order: popcount ascending
        if not any(not k & ~m for k in out):
            out.append(m)
    return tuple(out)


def _er_min_at(space: FinSpace) -> tuple[tuple[int, ...], ...]:
    ops = _ops(space)
    if ops.er_min_at is None:
        ops.er_min_at = tuple(_minimal(per) for per in family_at(space, "e-regular"))
    return ops.er_min_at


def e_theta_closure(space: FinSpace, a: int) -> int:
    """Points whose every e-regular neighborhood meets ``a``.

    This is the e-regular-neighborhood characterization; the cluster-point
    form (every e-open neighborhood has e-closure meeting ``a``) and the
    intersection-of-e-regular-supersets form are kept as test oracles and
    agree with it on every enumerated space.
    """
    _check_fits(space, a)
    ops = _ops(space)
    hit = ops.eth_memo.get(a)
    if hit is not None:
        return hit
    out = 0
    bit = 1
    for per in _er_min_at(space):
        for u in per:
            if not u & a:
                break
        else:
            out |= bit
        bit <<= 1
    ops.eth_memo[a] = out
    return out


def e_theta_interior(space: FinSpace, a: int) -> int:
    """Dual of :func:`e_theta_closure` under complement."""
    n = space.n
    return complement(e_theta_closure(space, complement(a, n)), n)


def e_theta_closure_table(space: FinSpace) -> tuple[int, ...]:
    """The full e-theta-closure table over all ``2^n`` subsets."""
    ops = _ops(space)
    if ops.eth_table is None:
        ops.eth_table = tuple(
            e_theta_closure(space, a) for a in range(space.full + 1)
        )
    return ops.eth_table


def kernel_closure(space: FinSpace, kind: str, a: int) -> int:
    """Intersection of all kind-closed supersets of ``a``.

    ``kind`` names the open side (open, semiopen, preopen, b-open, e-open,
    a-open, ...); its complement-dual family supplies the closed sets, so
    ``kernel_closure(S, "open", a)`` is the ordinary closure and
    ``kernel_closure(S, "e-open", a)`` the e-closure.
    """
    _check_fits(space, a)
    if kind not in OPEN_TO_CLOSED and kind not in SELF_DUAL_KINDS:
        raise UnknownKind(f"kind {kind!r} has no closed dual", kind=kind)
    ops = _ops(space)
    key = (kind, a)
    hit = ops.kernel_memo.get(key)
    if hit is not None:
        return hit
    closed_kind = dual_kind(kind)
    acc = space.full
    for m in family(space, closed_kind).members:
        if not a & ~m:
            acc &= m
    ops.kernel_memo[key] = acc
    return acc


def kernel_interior(space: FinSpace, kind: str, a: int) -> int:
    """Union of all kind-open subsets of ``a``."""
    _check_fits(space, a)
    if kind not in OPEN_TO_CLOSED and kind not in SELF_DUAL_KINDS:
        raise UnknownKind(f"kind {kind!r} has no closed dual", kind=kind)
    acc = 0
    for m in family(space, kind).members:
        if not m & ~a:
            acc |= m
    return acc


def e_closure(space: FinSpace, a: int) -> int:
    return kernel_closure(space, "e-open", a)


def e_interior(space: FinSpace, a: int) -> int:
    return kernel_interior(space, "e-open", a)
