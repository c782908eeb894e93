"""Decision procedures for every implemented continuity class.

Two shapes of class exist:

* preimage classes: the inverse image of every open set of the codomain
  must land in a fixed family of the domain (open, e-open, e-regular,
  b-regular, e-theta-closed);
* pointwise classes: for every point x and every open V around f(x) there
  must be a set U around x from a fixed domain family whose (possibly
  hulled) image lands in V or in cl(V).

Each verdict is decided by evaluating its defining quantifier literally
over the cached families.  A false verdict always carries the first
failing witness in canonical order (x ascending, then V in family order
for pointwise classes; V in family order for preimage classes), and
re-checking the witness reproduces the failure.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import FinSpace, PointMap, closure, image, interior, preimage
from .errors import UnknownClass, WidthMismatch
from .operators import (
    e_theta_closure,
    e_theta_interior,
    family,
    family_at,
    kernel_closure,
    theta_closure,
)

CLASSES: tuple[str, ...] = (
    "continuous",
    "e-continuous",
    "strongly-theta-continuous",
    "strongly-theta-semi-continuous",
    "strongly-theta-pre-continuous",
    "strongly-theta-b-continuous",
    "strongly-theta-e-continuous",
    "weakly-clopen",
    "weakly-b-continuous",
    "weakly-a-continuous",
    "weakly-e-continuous",
    "weakly-BR-continuous",
    "BR-continuous",
    "eR-continuous",
    "weakly-eR-continuous",
    "contra-e-theta-continuous",
)

# class -> domain family that inverse images of opens must belong to
PREIMAGE_CLASSES: dict[str, str] = {
    "continuous": "open",
    "e-continuous": "e-open",
    "BR-continuous": "b-regular",
    "eR-continuous": "e-regular",
    "contra-e-theta-continuous": "e-theta-closed",
}

# class -> (domain family for U, hull kind applied to U, target uses cl(V)?)
# hull None leaves U as is; otherwise U is replaced by its kind-closure.
POINTWISE_CLASSES: dict[str, tuple[str, str | None, bool]] = {
    "strongly-theta-continuous": ("open", "open", False),
    "strongly-theta-semi-continuous": ("semiopen", "semiopen", False),
    "strongly-theta-pre-continuous": ("preopen", "preopen", False),
    "strongly-theta-b-continuous": ("b-open", "b-open", False),
    "strongly-theta-e-continuous": ("e-open", "e-open", False),
    "weakly-clopen": ("clopen", None, True),
    "weakly-b-continuous": ("b-open", None, True),
    "weakly-a-continuous": ("a-open", None, True),
    "weakly-e-continuous": ("e-open", None, True),
    "weakly-BR-continuous": ("b-regular", None, True),
    "weakly-eR-continuous": ("e-regular", None, True),
}


@dataclass(frozen=True)
class Verdict:
    """One class decision; the witness is index/mask based (see documents)."""

    holds: bool
    witness: dict | None = None


def _check_map(f: PointMap) -> None:
    if len(f.map) != f.dom.n or any(y >= f.cod.n for y in f.map):
        raise WidthMismatch("map entries do not fit its spaces")


def _hulled(space: FinSpace, hull: str | None, u: int) -> int:
    if hull is None:
        return u
    return kernel_closure(space, hull, u)


def _pointwise_holds_at(f: PointMap, cls: str, x: int, v: int) -> bool:
    """Does some admissible U around x send its (hulled) image inside the target?"""
    fam_kind, hull, use_cl = POINTWISE_CLASSES[cls]
    target = closure(f.cod, v) if use_cl else v
    for u in family_at(f.dom, fam_kind)[x]:
        if not image(f, _hulled(f.dom, hull, u)) & ~target:
            return True
    return False


def pointwise_satisfying_set(f: PointMap, cls: str, x: int, v: int) -> int | None:
    """First U (canonical order) witnessing the pointwise condition at (x, V)."""
    fam_kind, hull, use_cl = POINTWISE_CLASSES[cls]
    target = closure(f.cod, v) if use_cl else v
    for u in family_at(f.dom, fam_kind)[x]:
        if not image(f, _hulled(f.dom, hull, u)) & ~target:
            return u
    return None


def is_in_class(f: PointMap, cls: str) -> Verdict:
    """Decide membership of ``f`` in one continuity class, with witness."""
    _check_map(f)
    if cls in PREIMAGE_CLASSES:
        fam = family(f.dom, PREIMAGE_CLASSES[cls])
        for v in f.cod.opens.members:
            pre = preimage(f, v)
            if pre not in fam:
                return Verdict(False, {"V": v, "preimage": pre})
        return Verdict(True)
    if cls in POINTWISE_CLASSES:
        for x in range(f.dom.n):
            fx = f.map[x]
            for v in f.cod.opens.members:
                if v >> fx & 1 and not _pointwise_holds_at(f, cls, x, v):
                    return Verdict(False, {"x": x, "V": v})
        return Verdict(True)
    raise UnknownClass(f"unknown continuity class {cls!r}", cls=cls)


def check_witness(f: PointMap, cls: str, witness: dict) -> bool:
    """Re-evaluate a failure witness; True means it still falsifies the class."""
    if cls in PREIMAGE_CLASSES:
        pre = preimage(f, witness["V"])
        return pre == witness.get("preimage", pre) and pre not in family(
            f.dom, PREIMAGE_CLASSES[cls]
        )
    if cls in POINTWISE_CLASSES:
        x, v = witness["x"], witness["V"]
        return bool(v >> f.map[x] & 1) and not _pointwise_holds_at(f, cls, x, v)
    raise UnknownClass(f"unknown continuity class {cls!r}", cls=cls)


def classify_all(f: PointMap) -> dict[str, Verdict]:
    """Independent verdicts for every class, in canonical class order."""
    return {cls: is_in_class(f, cls) for cls in CLASSES}


def is_weakly_er_continuous_at(f: PointMap, x: int) -> bool:
    """The pointwise form of the weakly-eR condition at one point."""
    _check_map(f)
    fx = f.map[x]
    return all(
        _pointwise_holds_at(f, "weakly-eR-continuous", x, v)
        for v in f.cod.opens.members
        if v >> fx & 1
    )


def strongly_theta_e_via_regular_sets(f: PointMap) -> bool:
    """Equivalent form of the strongly-theta-e class: some e-regular set
    around x maps straight into V.  Kept as a cross-check of the hull form."""
    _check_map(f)
    er_at = family_at(f.dom, "e-regular")
    for x in range(f.dom.n):
        fx = f.map[x]
        for v in f.cod.opens.members:
            if not v >> fx & 1:
                continue
            if not any(not image(f, u) & ~v for u in er_at[x]):
                return False
    return True


def wer_characterization(f: PointMap, variant: int) -> bool:
    """Evaluate one of the eleven equivalent forms of the weakly-eR class.

    1  the pointwise definition over e-regular neighborhoods
    2  the pointwise form over e-theta-open neighborhoods
    3  e-theta-cl(f^-1[U]) <= f^-1[cl(U)] for every preopen U of Y
    4  f^-1[U] <= e-theta-int(f^-1[cl(U)]) for every preopen U of Y
    5  e-theta-cl(f^-1[int(cl(B))]) <= f^-1[cl(B)] for every B <= Y
    6  e-theta-cl(f^-1[int(F)]) <= f^-1[F] for every regular closed F of Y
    7  as 3, over open U only
    8  as 4, over open U only
    9  f[e-theta-cl(A)] <= theta-cl(f[A]) for every A <= X
    10 e-theta-cl(f^-1[B]) <= f^-1[theta-cl(B)] for every B <= Y
    11 e-theta-cl(f^-1[int(theta-cl(B))]) <= f^-1[theta-cl(B)] for every B <= Y
    """
    _check_map(f)
    X, Y = f.dom, f.cod
    if variant == 1:
        return is_in_class(f, "weakly-eR-continuous").holds
    if variant == 2:
        eto_at = family_at(X, "e-theta-open")
        for x in range(X.n):
            fx = f.map[x]
            for v in Y.opens.members:
                if not v >> fx & 1:
                    continue
                clv = closure(Y, v)
                if not any(not image(f, u) & ~clv for u in eto_at[x]):
                    return False
        return True
    if variant in (3, 4):
        for u in family(Y, "preopen").members:
            pre_cl = preimage(f, closure(Y, u))
            if variant == 3:
                if e_theta_closure(X, preimage(f, u)) & ~pre_cl:
                    return False
            else:
                if preimage(f, u) & ~e_theta_interior(X, pre_cl):
                    return False
        return True
    if variant == 5:
        for b in range(Y.full + 1):
            clb = closure(Y, b)
            if e_theta_closure(X, preimage(f, interior(Y, clb))) & ~preimage(f, clb):
                return False
        return True
    if variant == 6:
        for fc in family(Y, "regular-closed").members:
            if e_theta_closure(X, preimage(f, interior(Y, fc))) & ~preimage(f, fc):
                return False
        return True
    if variant in (7, 8):
        for u in Y.opens.members:
            pre_cl = preimage(f, closure(Y, u))
            if variant == 7:
                if e_theta_closure(X, preimage(f, u)) & ~pre_cl:
                    return False
            else:
                if preimage(f, u) & ~e_theta_interior(X, pre_cl):
                    return False
        return True
    if variant == 9:
        for a in range(X.full + 1):
            if image(f, e_theta_closure(X, a)) & ~theta_closure(Y, image(f, a)):
                return False
        return True
    if variant == 10:
        for b in range(Y.full + 1):
            if e_theta_closure(X, preimage(f, b)) & ~preimage(f, theta_closure(Y, b)):
                return False
        return True
    if variant == 11:
        for b in range(Y.full + 1):
            clb = theta_closure(Y, b)
            if e_theta_closure(X, preimage(f, interior(Y, clb))) & ~preimage(f, clb):
                return False
        return True
    raise UnknownClass(f"characterization variant must be 1..11, got {variant}")
