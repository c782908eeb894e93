"""Machine checks for every theorem statement, with vacuity accounting.

Each registered theorem runs a hypothesis filter over an exhaustively
enumerated corpus (spaces, maps, or pairs of maps), evaluates the stated
conclusion, and reports violations together with how often the hypothesis
was actually met, so a theorem is never silently "verified" on an empty
corpus.  Finite Urysohn/Hausdorff spaces are discrete, which makes several
hypotheses deliberately narrow; the counters surface that.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field

import numpy as np

from .classify import (
    is_in_class,
    is_weakly_er_continuous_at,
    strongly_theta_e_via_regular_sets,
    wer_characterization,
)
from .core import (
    FinSpace,
    PointMap,
    closure,
    complement,
    graph_map,
    image,
    interior,
    preimage,
    product,
)
from .documents import map_to_doc, mask_to_labels, space_to_doc
from .errors import UnknownTheoremId
from .operators import (
    e_theta_closure,
    e_theta_interior,
    family,
    family_at,
    kernel_closure,
    kernel_interior,
    theta_closure,
)
from .properties import (
    equalizer,
    has_er_graph,
    is_connected,
    is_e_connected,
    sep_axiom,
    theta_closed_image_check,
)
from .search import (
    _cols,
    _scratch,
    all_class_masks,
    bulk_class_mask,
    bulk_er_graph_mask,
    random_space,
    space_pairs,
    spaces_up_to,
    verify_implication,
)

MAX_VIOLATION_DOCS = 10


@dataclass
class TheoremReport:
    theorem: str
    params: dict
    checked: int
    hypothesis_met: int
    violations: list[dict]
    notes: dict = field(default_factory=dict)
    wall_time_s: float = 0.0

    @property
    def exit_code(self) -> int:
        return 2 if self.violations else 0

    def to_doc(self) -> dict:
        return {
            "theorem": self.theorem,
            "params": self.params,
            "checked": self.checked,
            "hypothesis_met": self.hypothesis_met,
            "violations": self.violations,
            "notes": self.notes,
        }


def _flag(space: FinSpace, name: str) -> bool:
    flags = _scratch(space, "flags")
    if name not in flags:
        if name == "connected":
            flags[name] = is_connected(space)[0]
        elif name == "e-connected":
            flags[name] = is_e_connected(space)[0]
        else:
            flags[name] = sep_axiom(space, name)[0]
    return flags[name]


def _corpus_spaces(n_max: int, sample: int | None, sample_n: int, seed: int):
    spaces = list(spaces_up_to(n_max))
    if sample:
        rng = random.Random(seed)
        spaces.extend(random_space(sample_n, rng) for _ in range(sample))
    return spaces


def _map_from_cols(X: FinSpace, Y: FinSpace, cols: np.ndarray, idx: int) -> PointMap:
    return PointMap(X, Y, tuple(int(v) for v in cols[idx]))


# ---------------------------------------------------------------------------
# operator-level laws


def _eth_laws(n_max: int, sample: int | None, seed: int, **_kw) -> TheoremReport:
    """The ten structural laws of the e-theta closure operator."""
    spaces = _corpus_spaces(n_max, sample, 5, seed)
    violations: list[dict] = []
    subsets = 0

    def bad(space, law, a, extra=None):
        doc = {"law": law, "space": space_to_doc(space), "A": mask_to_labels(space, a)}
        if extra:
            doc.update(extra)
        violations.append(doc)

    for space in spaces:
        full = space.full
        eo_at = family_at(space, "e-open")
        er = family(space, "e-regular")
        etc = family(space, "e-theta-closed")
        eto = family(space, "e-theta-open")
        ecl_of = {u: kernel_closure(space, "e-open", u) for u in family(space, "e-open").members}
        for a in range(full + 1):
            subsets += 1
            ecl_a = kernel_closure(space, "e-open", a)
            eth_a = e_theta_closure(space, a)
            if a & ~ecl_a or ecl_a & ~eth_a:
                bad(space, 1, a)
            if eth_a not in etc:
                bad(space, 2, a)
            if a in etc and eth_a != a:
                bad(space, 3, a)
            if e_theta_closure(space, eth_a) != eth_a:
                bad(space, 5, a)
            if eth_a != complement(e_theta_interior(space, complement(a, space.n)), space.n):
                bad(space, 6, a)
            # literal e-theta-interior: some e-open U around x with e-cl(U) <= a
            lit_int = 0
            for x in range(space.n):
                if any(not ecl_of[u] & ~a for u in eo_at[x]):
                    lit_int |= 1 << x
            if lit_int != e_theta_interior(space, a):
                bad(space, 6, a, {"form": "literal-interior"})
            # cluster-point computation
            cluster = 0
            for x in range(space.n):
                if all(ecl_of[u] & a for u in eo_at[x]):
                    cluster |= 1 << x
            if cluster != eth_a:
                bad(space, 7, a)
            inter_er = full
            for v in er.members:
                if not a & ~v:
                    inter_er &= v
            inter_etc = full
            for v in etc.members:
                if not a & ~v:
                    inter_etc &= v
            if inter_er != eth_a or inter_etc != eth_a:
                bad(space, 8, a)
            # law 9: e-theta-open iff every point has an e-regular subset inside
            er_at = family_at(space, "e-regular")
            covered = all(
                any(not u & ~a for u in er_at[x]) for x in range(space.n) if a >> x & 1
            )
            if (a in eto) != covered:
                bad(space, 9, a)
        # law 4: monotone over all nested pairs
        for b in range(full + 1):
            eth_b = e_theta_closure(space, b)
            sub = b
            while True:
                if e_theta_closure(space, sub) & ~eth_b:
                    bad(space, 4, sub, {"B": mask_to_labels(space, b)})
                if sub == 0:
                    break
                sub = (sub - 1) & b
        # law 10: pairwise closure of the families
        for a, b in itertools.combinations_with_replacement(etc.members, 2):
            if a & b not in etc:
                bad(space, 10, a, {"B": mask_to_labels(space, b)})
        for a, b in itertools.combinations_with_replacement(eto.members, 2):
            if a | b not in eto:
                bad(space, 10, a, {"B": mask_to_labels(space, b), "form": "union"})
    return TheoremReport(
        theorem="e-theta-closure-laws",
        params={"n_max": n_max, "sample": sample or 0, "seed": seed},
        checked=len(spaces),
        hypothesis_met=len(spaces),
        violations=violations[:MAX_VIOLATION_DOCS],
        notes={"subsets_checked": subsets, "violation_count": len(violations)},
    )


def _open_closures_agree(n_max: int, sample: int | None, seed: int, **_kw) -> TheoremReport:
    """The closure and theta-closure of an open set coincide."""
    spaces = _corpus_spaces(n_max, sample, 5, seed)
    violations = []
    checked = 0
    for space in spaces:
        for u in space.opens.members:
            checked += 1
            if closure(space, u) != theta_closure(space, u):
                violations.append(
                    {"space": space_to_doc(space), "A": mask_to_labels(space, u)}
                )
    return TheoremReport(
        "open-set-closures-agree",
        {"n_max": n_max, "sample": sample or 0, "seed": seed},
        checked,
        checked,
        violations[:MAX_VIOLATION_DOCS],
        {"violation_count": len(violations)},
    )


def _aopen_eopen_intersection(n_max: int, sample: int | None, seed: int, **_kw) -> TheoremReport:
    """a-open intersected with e-open stays e-open."""
    spaces = _corpus_spaces(n_max, sample, 5, seed)
    violations = []
    checked = 0
    for space in spaces:
        ao = family(space, "a-open").members
        eo = family(space, "e-open")
        for a in ao:
            for b in eo.members:
                checked += 1
                if a & b not in eo:
                    violations.append(
                        {
                            "space": space_to_doc(space),
                            "A": mask_to_labels(space, a),
                            "B": mask_to_labels(space, b),
                        }
                    )
    return TheoremReport(
        "a-open-e-open-intersection",
        {"n_max": n_max, "sample": sample or 0, "seed": seed},
        checked,
        checked,
        violations[:MAX_VIOLATION_DOCS],
        {"violation_count": len(violations)},
    )


_CHAINS = (
    ("regular-open", "open"),
    ("open", "semiopen"),
    ("open", "preopen"),
    ("semiopen", "b-open"),
    ("preopen", "b-open"),
    ("b-open", "e-open"),
    ("a-open", "e-open"),
    ("delta-open", "open"),
    ("theta-open", "delta-open"),
    ("e-regular", "e-theta-open"),
    ("e-theta-open", "e-open"),
)


def _family_chains(n_max: int, sample: int | None, seed: int, **_kw) -> TheoremReport:
    spaces = _corpus_spaces(n_max, sample, 5, seed)
    violations = []
    checked = 0
    for space in spaces:
        for smaller, larger in _CHAINS:
            checked += 1
            big = family(space, larger)
            for m in family(space, smaller).members:
                if m not in big:
                    violations.append(
                        {
                            "space": space_to_doc(space),
                            "chain": f"{smaller}<={larger}",
                            "member": mask_to_labels(space, m),
                        }
                    )
    return TheoremReport(
        "family-chains",
        {"n_max": n_max, "sample": sample or 0, "seed": seed},
        checked,
        checked,
        violations[:MAX_VIOLATION_DOCS],
        {"violation_count": len(violations)},
    )


def _family_duality(n_max: int, sample: int | None, seed: int, **_kw) -> TheoremReport:
    """Closed families are complement images; fixpoint forms agree."""
    from .operators import _KIND_DUALS, delta_closure, delta_interior, theta_interior

    spaces = _corpus_spaces(n_max, sample, 5, seed)
    violations = []
    checked = 0
    for space in spaces:
        n = space.n
        full = space.full
        for open_kind, closed_kind in _KIND_DUALS:
            checked += 1
            opens = family(space, open_kind).members
            closeds = family(space, closed_kind).members
            if tuple(sorted(complement(m, n) for m in opens)) != tuple(sorted(closeds)):
                violations.append(
                    {"space": space_to_doc(space), "pair": f"{open_kind}/{closed_kind}"}
                )
        # independently computed fixpoint forms
        ro = family(space, "regular-open").members
        rc = family(space, "regular-closed").members
        if {complement(m, n) for m in ro} != set(rc):
            violations.append({"space": space_to_doc(space), "pair": "regular fixpoints"})
        d_open = {a for a in range(full + 1) if a == delta_interior(space, a)}
        if d_open != set(family(space, "delta-open").members):
            violations.append({"space": space_to_doc(space), "pair": "delta fixpoints"})
        t_closed = {a for a in range(full + 1) if a == theta_closure(space, a)}
        if t_closed != set(family(space, "theta-closed").members):
            violations.append({"space": space_to_doc(space), "pair": "theta fixpoints"})
        d_closed = {a for a in range(full + 1) if a == delta_closure(space, a)}
        if d_closed != set(family(space, "delta-closed").members):
            violations.append({"space": space_to_doc(space), "pair": "delta-closed fixpoints"})
    return TheoremReport(
        "family-duality",
        {"n_max": n_max, "sample": sample or 0, "seed": seed},
        checked,
        checked,
        violations[:MAX_VIOLATION_DOCS],
        {"violation_count": len(violations)},
    )


# ---------------------------------------------------------------------------
# classifier-level theorems


def _char_equivalence(n_max: int, **_kw) -> TheoremReport:
    """All eleven characterizations agree with the definition on every map."""
    violations = []
    checked = 0
    for X, Y in space_pairs(n_max):
        for values in itertools.product(range(Y.n), repeat=X.n):
            f = PointMap(X, Y, values)
            checked += 1
            base = wer_characterization(f, 1)
            for variant in range(2, 12):
                if wer_characterization(f, variant) != base:
                    violations.append(
                        {"map": map_to_doc(f), "variant": variant, "base": base}
                    )
    return TheoremReport(
        "char-equivalence",
        {"n_max": n_max},
        checked,
        checked,
        violations[:MAX_VIOLATION_DOCS],
        {"violation_count": len(violations)},
    )


def _pointwise_characterization(n_max: int, **_kw) -> TheoremReport:
    """Pointwise weakly-eR at x iff x lies in the e-theta interior of the
    preimage of cl(V) for every open V around f(x)."""
    violations = []
    checked = 0
    for X, Y in space_pairs(n_max):
        for values in itertools.product(range(Y.n), repeat=X.n):
            f = PointMap(X, Y, values)
            checked += 1
            for x in range(X.n):
                lhs = is_weakly_er_continuous_at(f, x)
                rhs = all(
                    e_theta_interior(X, preimage(f, closure(Y, v))) >> x & 1
                    for v in Y.opens.members
                    if v >> values[x] & 1
                )
                if lhs != rhs:
                    violations.append({"map": map_to_doc(f), "x": x})
    return TheoremReport(
        "pointwise-characterization",
        {"n_max": n_max},
        checked,
        checked,
        violations[:MAX_VIOLATION_DOCS],
        {"violation_count": len(violations)},
    )


def _theta_open_preimages(n_max: int, **_kw) -> TheoremReport:
    """Weakly-eR maps pull theta-open sets back to e-theta-open sets and
    theta-closed sets back to e-theta-closed sets."""
    violations = []
    checked = hypothesis_met = 0
    for X, Y in space_pairs(n_max):
        cols = _cols(X.n, Y.n)
        wer = bulk_class_mask(X, Y, "weakly-eR-continuous", cols)
        checked += cols.shape[0]
        eto = family(X, "e-theta-open")
        etc = family(X, "e-theta-closed")
        theta_o = family(Y, "theta-open").members
        theta_c = family(Y, "theta-closed").members
        for idx in np.nonzero(wer)[0]:
            f = _map_from_cols(X, Y, cols, int(idx))
            hypothesis_met += 1
            for u in theta_o:
                if preimage(f, u) not in eto:
                    violations.append({"map": map_to_doc(f), "set": mask_to_labels(Y, u)})
            for u in theta_c:
                if preimage(f, u) not in etc:
                    violations.append(
                        {"map": map_to_doc(f), "set": mask_to_labels(Y, u), "side": "closed"}
                    )
    return TheoremReport(
        "theta-open-preimages",
        {"n_max": n_max},
        checked,
        hypothesis_met,
        violations[:MAX_VIOLATION_DOCS],
        {"violation_count": len(violations)},
    )


def _theta_preimage_sufficient(n_max: int, **_kw) -> TheoremReport:
    """If preimages of theta-closures of arbitrary sets are e-theta-closed,
    the map is weakly-eR-continuous."""
    violations = []
    checked = hypothesis_met = 0
    for X, Y in space_pairs(n_max):
        etc = family(X, "e-theta-closed")
        theta_cl = [theta_closure(Y, b) for b in range(Y.full + 1)]
        for values in itertools.product(range(Y.n), repeat=X.n):
            f = PointMap(X, Y, values)
            checked += 1
            if all(preimage(f, t) in etc for t in theta_cl):
                hypothesis_met += 1
                if not is_in_class(f, "weakly-eR-continuous").holds:
                    violations.append({"map": map_to_doc(f)})
    return TheoremReport(
        "theta-closure-preimage-sufficient",
        {"n_max": n_max},
        checked,
        hypothesis_met,
        violations[:MAX_VIOLATION_DOCS],
        {"violation_count": len(violations)},
    )


def _nonempty_e_open(n_max: int, **_kw) -> TheoremReport:
    """At a point of weak eR-continuity, every a-open neighborhood contains a
    nonempty e-open set inside the e-theta closure of the preimage of cl(V)."""
    violations = []
    checked = hypothesis_met = 0
    for X, Y in space_pairs(n_max):
        ao_at = family_at(X, "a-open")
        for values in itertools.product(range(Y.n), repeat=X.n):
            f = PointMap(X, Y, values)
            checked += 1
            for x in range(X.n):
                if not is_weakly_er_continuous_at(f, x):
                    continue
                hypothesis_met += 1
                for v in Y.opens.members:
                    if not v >> values[x] & 1:
                        continue
                    ecl = e_theta_closure(X, preimage(f, closure(Y, v)))
                    for h in ao_at[x]:
                        if kernel_interior(X, "e-open", h & ecl) == 0:
                            violations.append(
                                {
                                    "map": map_to_doc(f),
                                    "x": x,
                                    "V": mask_to_labels(Y, v),
                                    "H": mask_to_labels(X, h),
                                }
                            )
    return TheoremReport(
        "nonempty-e-open-refinement",
        {"n_max": n_max},
        checked,
        hypothesis_met,
        violations[:MAX_VIOLATION_DOCS],
        {"violation_count": len(violations)},
    )


def _regular_codomain(n_max: int, **_kw) -> TheoremReport:
    """Into a regular codomain, weakly-eR and strongly-theta-e coincide."""
    violations = []
    checked = hypothesis_met = 0
    for X, Y in space_pairs(n_max):
        cols = _cols(X.n, Y.n)
        checked += cols.shape[0]
        if not _flag(Y, "regular"):
            continue
        wer = bulk_class_mask(X, Y, "weakly-eR-continuous", cols)
        ste = bulk_class_mask(X, Y, "strongly-theta-e-continuous", cols)
        hypothesis_met += cols.shape[0]
        diff = wer != ste
        for idx in np.nonzero(diff)[0]:
            f = _map_from_cols(X, Y, cols, int(idx))
            va = is_in_class(f, "weakly-eR-continuous").holds
            vb = is_in_class(f, "strongly-theta-e-continuous").holds
            if va != vb:
                violations.append({"map": map_to_doc(f), "weakly-eR": va, "strongly-theta-e": vb})
    return TheoremReport(
        "regular-codomain-collapse",
        {"n_max": n_max},
        checked,
        hypothesis_met,
        violations[:MAX_VIOLATION_DOCS],
        {"violation_count": len(violations)},
    )


def _st_theta_e_forms(n_max: int, **_kw) -> TheoremReport:
    """The hulled-image form of strongly-theta-e agrees with the e-regular
    image form on every map."""
    violations = []
    checked = 0
    for X, Y in space_pairs(n_max):
        for values in itertools.product(range(Y.n), repeat=X.n):
            f = PointMap(X, Y, values)
            checked += 1
            a = is_in_class(f, "strongly-theta-e-continuous").holds
            b = strongly_theta_e_via_regular_sets(f)
            if a != b:
                violations.append({"map": map_to_doc(f), "hull-form": a, "regular-form": b})
    return TheoremReport(
        "strong-theta-e-via-e-regular",
        {"n_max": n_max},
        checked,
        checked,
        violations[:MAX_VIOLATION_DOCS],
        {"violation_count": len(violations)},
    )


DIAGRAM_ARROWS: tuple[tuple[str, str], ...] = (
    ("strongly-theta-continuous", "strongly-theta-semi-continuous"),
    ("strongly-theta-continuous", "strongly-theta-pre-continuous"),
    ("strongly-theta-semi-continuous", "strongly-theta-b-continuous"),
    ("strongly-theta-pre-continuous", "strongly-theta-b-continuous"),
    ("strongly-theta-pre-continuous", "strongly-theta-e-continuous"),
    ("strongly-theta-b-continuous", "weakly-BR-continuous"),
    ("strongly-theta-e-continuous", "weakly-eR-continuous"),
    ("weakly-eR-continuous", "weakly-e-continuous"),
    ("BR-continuous", "weakly-b-continuous"),
    ("BR-continuous", "weakly-BR-continuous"),
    ("weakly-BR-continuous", "weakly-b-continuous"),
    ("weakly-clopen", "weakly-BR-continuous"),
    ("weakly-clopen", "weakly-eR-continuous"),
    ("weakly-clopen", "weakly-e-continuous"),
    ("eR-continuous", "weakly-eR-continuous"),
    ("eR-continuous", "weakly-e-continuous"),
    ("e-continuous", "weakly-e-continuous"),
    ("eR-continuous", "e-continuous"),
)

DIAGRAM_CLASSES: tuple[str, ...] = (
    "strongly-theta-continuous",
    "strongly-theta-semi-continuous",
    "strongly-theta-pre-continuous",
    "strongly-theta-b-continuous",
    "strongly-theta-e-continuous",
    "BR-continuous",
    "weakly-BR-continuous",
    "weakly-b-continuous",
    "weakly-clopen",
    "weakly-eR-continuous",
    "weakly-e-continuous",
    "eR-continuous",
    "e-continuous",
)


def _diagram_reachable() -> set[tuple[str, str]]:
    adj: dict[str, set[str]] = {c: set() for c in DIAGRAM_CLASSES}
    for a, b in DIAGRAM_ARROWS:
        adj[a].add(b)
    reach: set[tuple[str, str]] = set()
    for start in DIAGRAM_CLASSES:
        seen = set()
        stack = [start]
        while stack:
            node = stack.pop()
            for nxt in adj[node]:
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        reach.update((start, t) for t in seen)
    return reach


def _implication_diagram(n_max: int, **_kw) -> TheoremReport:
    """Verify every drawn arrow exhaustively; for every missing arrow record
    the first observed counterexample or note that none was found."""
    reachable = _diagram_reachable()
    non_arrows = [
        (a, b)
        for a in DIAGRAM_CLASSES
        for b in DIAGRAM_CLASSES
        if a != b and (a, b) not in reachable
    ]
    witness: dict[tuple[str, str], dict] = {}
    violations = []
    checked = 0
    for X, Y in space_pairs(n_max):
        cols = _cols(X.n, Y.n)
        checked += cols.shape[0]
        masks = {cls: bulk_class_mask(X, Y, cls, cols) for cls in DIAGRAM_CLASSES}
        for a, b in DIAGRAM_ARROWS:
            viol = masks[a] & ~masks[b]
            if viol.any():
                idx = int(np.nonzero(viol)[0][0])
                f = _map_from_cols(X, Y, cols, idx)
                if is_in_class(f, a).holds and not is_in_class(f, b).holds:
                    violations.append({"arrow": f"{a}->{b}", "map": map_to_doc(f)})
        for pair in non_arrows:
            if pair in witness:
                continue
            a, b = pair
            viol = masks[a] & ~masks[b]
            if viol.any():
                idx = int(np.nonzero(viol)[0][0])
                f = _map_from_cols(X, Y, cols, idx)
                if is_in_class(f, a).holds and not is_in_class(f, b).holds:
                    witness[pair] = map_to_doc(f)
    observed = [
        {
            "from": a,
            "to": b,
            "witness": witness.get((a, b)),
            "status": "counterexample" if (a, b) in witness else "none found at this size",
        }
        for a, b in non_arrows
    ]
    return TheoremReport(
        "implication-diagram",
        {"n_max": n_max},
        checked,
        checked,
        violations[:MAX_VIOLATION_DOCS],
        {
            "arrows": [f"{a}->{b}" for a, b in DIAGRAM_ARROWS],
            "non_implications_observed": observed,
            "violation_count": len(violations),
        },
    )


def _implication_entry(theorem_id: str, cls_a: str, cls_b: str):
    def run(n_max: int, budget: int | None = None, **_kw) -> TheoremReport:
        rep = verify_implication(cls_a, cls_b, n_max=n_max, budget=budget)
        violations = [rep.witness] if rep.witness else []
        return TheoremReport(
            theorem_id,
            {"n_max": n_max, "budget": budget},
            rep.examined,
            rep.searched["invocations"] - rep.examined,
            violations,
            {"completed": rep.completed, "resumable_cursor": rep.resumable_cursor},
        )

    return run


# ---------------------------------------------------------------------------
# space and map theorems from the separation/connectedness circle


def _clopen_t2_er_t2(n_max: int, **_kw) -> TheoremReport:
    spaces = spaces_up_to(n_max)
    violations = []
    hypothesis_met = 0
    for space in spaces:
        if _flag(space, "clopen-T2"):
            hypothesis_met += 1
            if not _flag(space, "eR-T2"):
                violations.append({"space": space_to_doc(space)})
    return TheoremReport(
        "clopen-t2-implies-er-t2",
        {"n_max": n_max},
        len(spaces),
        hypothesis_met,
        violations[:MAX_VIOLATION_DOCS],
        {"violation_count": len(violations)},
    )


def _connected_image(n_max: int, **_kw) -> TheoremReport:
    """Weakly-eR surjections carry e-connected domains onto connected images."""
    violations = []
    checked = hypothesis_met = 0
    for X, Y in space_pairs(n_max):
        cols = _cols(X.n, Y.n)
        checked += cols.shape[0]
        if not _flag(X, "e-connected") or Y.n > X.n:
            continue
        wer = bulk_class_mask(X, Y, "weakly-eR-continuous", cols)
        for idx in np.nonzero(wer)[0]:
            values = cols[int(idx)]
            if len(set(values.tolist())) != Y.n:
                continue
            hypothesis_met += 1
            if not _flag(Y, "connected"):
                f = _map_from_cols(X, Y, cols, int(idx))
                violations.append({"map": map_to_doc(f)})
    return TheoremReport(
        "connected-image",
        {"n_max": n_max},
        checked,
        hypothesis_met,
        violations[:MAX_VIOLATION_DOCS],
        {"violation_count": len(violations)},
    )


def _equalizer_e_closed(n_max: int, **_kw) -> TheoremReport:
    """f weakly-eR, g weakly-a, Urysohn codomain: the agreement set is e-closed."""
    violations = []
    checked = hypothesis_met = 0
    urysohn_pairs = 0
    for X, Y in space_pairs(n_max):
        cols = _cols(X.n, Y.n)
        total = cols.shape[0]
        checked += total * total
        if not _flag(Y, "Urysohn"):
            continue
        urysohn_pairs += 1
        wer = np.nonzero(bulk_class_mask(X, Y, "weakly-eR-continuous", cols))[0]
        wac = np.nonzero(bulk_class_mask(X, Y, "weakly-a-continuous", cols))[0]
        ec = family(X, "e-closed")
        for i in wer:
            fi = _map_from_cols(X, Y, cols, int(i))
            for j in wac:
                gj = _map_from_cols(X, Y, cols, int(j))
                hypothesis_met += 1
                eq = equalizer(fi, gj)
                if eq not in ec:
                    violations.append(
                        {
                            "f": map_to_doc(fi),
                            "g": map_to_doc(gj),
                            "equalizer": mask_to_labels(X, eq),
                        }
                    )
    return TheoremReport(
        "equalizer-e-closed",
        {"n_max": n_max},
        checked,
        hypothesis_met,
        violations[:MAX_VIOLATION_DOCS],
        {"urysohn_pairs": urysohn_pairs, "violation_count": len(violations)},
    )


def _injective_sep(theorem_id: str, codomain_axiom: str, domain_axiom: str):
    def run(n_max: int, **_kw) -> TheoremReport:
        violations = []
        checked = hypothesis_met = 0
        for X, Y in space_pairs(n_max):
            if X.n > Y.n:
                continue
            for values in itertools.permutations(range(Y.n), X.n):
                f = PointMap(X, Y, values)
                checked += 1
                if not _flag(Y, codomain_axiom):
                    continue
                if not is_in_class(f, "weakly-eR-continuous").holds:
                    continue
                hypothesis_met += 1
                if not _flag(X, domain_axiom):
                    violations.append({"map": map_to_doc(f)})
        return TheoremReport(
            theorem_id,
            {"n_max": n_max},
            checked,
            hypothesis_met,
            violations[:MAX_VIOLATION_DOCS],
            {"violation_count": len(violations)},
        )

    return run


def _product_cols(cols1: np.ndarray, cols2: np.ndarray, ny2: int) -> np.ndarray:
    """Value matrix of all product maps built from rows of cols1 and cols2."""
    k1, n1 = cols1.shape
    k2, n2 = cols2.shape
    a = cols1[:, None, :, None]
    b = cols2[None, :, None, :]
    prod_vals = a * ny2 + b
    return prod_vals.reshape(k1 * k2, n1 * n2)


def _product_two(n_max: int, second_max: int = 2, **_kw) -> TheoremReport:
    """Two weakly-eR factor maps give a weakly-eR product map.

    The first factor runs over all pairs up to n_max points, the second up
    to second_max, keeping the product spaces inside the mask ceiling.
    """
    violations = []
    checked = hypothesis_met = 0
    small_pairs = space_pairs(second_max)
    big_pairs = space_pairs(n_max)
    for X1, Y1 in big_pairs:
        cols1 = _cols(X1.n, Y1.n)
        checked_1 = cols1.shape[0]
        wer1 = bulk_class_mask(X1, Y1, "weakly-eR-continuous", cols1)
        idx1 = np.nonzero(wer1)[0]
        for X2, Y2 in small_pairs:
            cols2 = _cols(X2.n, Y2.n)
            checked += checked_1 * cols2.shape[0]
            if not len(idx1):
                continue
            wer2 = bulk_class_mask(X2, Y2, "weakly-eR-continuous", cols2)
            idx2 = np.nonzero(wer2)[0]
            if not len(idx2):
                continue
            hypothesis_met += len(idx1) * len(idx2)
            dom = product([X1, X2])
            cod = product([Y1, Y2])
            pcols = _product_cols(cols1[idx1], cols2[idx2], Y2.n)
            ok = bulk_class_mask(dom, cod, "weakly-eR-continuous", pcols)
            for flat in np.nonzero(~ok)[0]:
                f = PointMap(dom, cod, tuple(int(v) for v in pcols[int(flat)]))
                if not is_in_class(f, "weakly-eR-continuous").holds:
                    i = int(idx1[int(flat) // len(idx2)])
                    j = int(idx2[int(flat) % len(idx2)])
                    violations.append(
                        {
                            "f1": map_to_doc(_map_from_cols(X1, Y1, cols1, i)),
                            "f2": map_to_doc(_map_from_cols(X2, Y2, cols2, j)),
                        }
                    )
    return TheoremReport(
        "product-two-factors",
        {"n_max": n_max, "second_max": second_max},
        checked,
        hypothesis_met,
        violations[:MAX_VIOLATION_DOCS],
        {"violation_count": len(violations)},
    )


def _product_three(n_max: int = 2, **_kw) -> TheoremReport:
    """Three-factor version over the fully exhaustive two-point corpus."""
    violations = []
    checked = hypothesis_met = 0
    pairs = space_pairs(min(n_max, 2))
    prepared = []
    for X, Y in pairs:
        cols = _cols(X.n, Y.n)
        idx = np.nonzero(bulk_class_mask(X, Y, "weakly-eR-continuous", cols))[0]
        prepared.append((X, Y, cols, idx))
    for X1, Y1, cols1, idx1 in prepared:
        for X2, Y2, cols2, idx2 in prepared:
            pcols12 = _product_cols(cols1[idx1], cols2[idx2], Y2.n)
            dom12 = product([X1, X2])
            for X3, Y3, cols3, idx3 in prepared:
                checked += cols1.shape[0] * cols2.shape[0] * cols3.shape[0]
                if not (len(idx1) and len(idx2) and len(idx3)):
                    continue
                hypothesis_met += len(idx1) * len(idx2) * len(idx3)
                dom = product([X1, X2, X3])
                cod = product([Y1, Y2, Y3])
                pcols = _product_cols(pcols12, cols3[idx3], Y3.n)
                ok = bulk_class_mask(dom, cod, "weakly-eR-continuous", pcols)
                for flat in np.nonzero(~ok)[0]:
                    f = PointMap(dom, cod, tuple(int(v) for v in pcols[int(flat)]))
                    if not is_in_class(f, "weakly-eR-continuous").holds:
                        violations.append({"map": map_to_doc(f)})
    return TheoremReport(
        "product-three-factors",
        {"n_max": min(n_max, 2)},
        checked,
        hypothesis_met,
        violations[:MAX_VIOLATION_DOCS],
        {"violation_count": len(violations)},
    )


def _graph_function(n_max: int, **_kw) -> TheoremReport:
    """A weakly-eR graph map forces the underlying map to be weakly-eR."""
    violations = []
    checked = hypothesis_met = 0
    for X, Y in space_pairs(n_max):
        cols = _cols(X.n, Y.n)
        checked += cols.shape[0]
        prod_space = product([X, Y])
        gcols = cols + (np.arange(X.n, dtype=np.int64) * Y.n)[None, :]
        g_ok = bulk_class_mask(X, prod_space, "weakly-eR-continuous", gcols)
        if not g_ok.any():
            continue
        f_ok = bulk_class_mask(X, Y, "weakly-eR-continuous", cols)
        hypothesis_met += int(g_ok.sum())
        viol = g_ok & ~f_ok
        for idx in np.nonzero(viol)[0]:
            f = _map_from_cols(X, Y, cols, int(idx))
            g = graph_map(f)
            if is_in_class(g, "weakly-eR-continuous").holds and not is_in_class(
                f, "weakly-eR-continuous"
            ).holds:
                violations.append({"map": map_to_doc(f)})
    return TheoremReport(
        "graph-function",
        {"n_max": n_max},
        checked,
        hypothesis_met,
        violations[:MAX_VIOLATION_DOCS],
        {"violation_count": len(violations)},
    )


def _er_graph_urysohn(n_max: int, **_kw) -> TheoremReport:
    """Weakly-eR maps into Urysohn codomains have er-graphs."""
    violations = []
    checked = hypothesis_met = 0
    for X, Y in space_pairs(n_max):
        cols = _cols(X.n, Y.n)
        checked += cols.shape[0]
        if not _flag(Y, "Urysohn"):
            continue
        wer = bulk_class_mask(X, Y, "weakly-eR-continuous", cols)
        er_ok = bulk_er_graph_mask(X, Y, cols)
        hypothesis_met += int(wer.sum())
        viol = wer & ~er_ok
        for idx in np.nonzero(viol)[0]:
            f = _map_from_cols(X, Y, cols, int(idx))
            if not has_er_graph(f)[0]:
                violations.append({"map": map_to_doc(f)})
    return TheoremReport(
        "er-graph-urysohn",
        {"n_max": n_max},
        checked,
        hypothesis_met,
        violations[:MAX_VIOLATION_DOCS],
        {"violation_count": len(violations)},
    )


def _er_graph_injection(n_max: int, **_kw) -> TheoremReport:
    """An er-graph plus a weakly-eR injection forces eR-T2 on the domain."""
    violations = []
    checked = hypothesis_met = 0
    for X, Y in space_pairs(n_max):
        if X.n > Y.n:
            continue
        for values in itertools.permutations(range(Y.n), X.n):
            f = PointMap(X, Y, values)
            checked += 1
            if not has_er_graph(f)[0]:
                continue
            if not is_in_class(f, "weakly-eR-continuous").holds:
                continue
            hypothesis_met += 1
            if not _flag(X, "eR-T2"):
                violations.append({"map": map_to_doc(f)})
    return TheoremReport(
        "er-graph-injection-er-t2",
        {"n_max": n_max},
        checked,
        hypothesis_met,
        violations[:MAX_VIOLATION_DOCS],
        {"violation_count": len(violations)},
    )


def _theta_closed_images(n_max: int, **_kw) -> TheoremReport:
    """Maps with er-graphs send every subset (all are relatively eR-compact
    on a finite space) to a theta-closed image."""
    violations = []
    checked = hypothesis_met = 0
    for X, Y in space_pairs(n_max):
        cols = _cols(X.n, Y.n)
        checked += cols.shape[0]
        er_ok = bulk_er_graph_mask(X, Y, cols)
        for idx in np.nonzero(er_ok)[0]:
            f = _map_from_cols(X, Y, cols, int(idx))
            hypothesis_met += 1
            for k in range(X.full + 1):
                if not theta_closed_image_check(f, k):
                    violations.append({"map": map_to_doc(f), "K": mask_to_labels(X, k)})
    return TheoremReport(
        "theta-closed-images",
        {"n_max": n_max},
        checked,
        hypothesis_met,
        violations[:MAX_VIOLATION_DOCS],
        {"violation_count": len(violations)},
    )


THEOREMS: dict[str, tuple] = {
    # id: (runner, default n_max, description)
    "e-theta-closure-laws": (_eth_laws, 3, "ten structural laws of the e-theta closure"),
    "open-set-closures-agree": (_open_closures_agree, 3, "cl and theta-cl agree on opens"),
    "a-open-e-open-intersection": (_aopen_eopen_intersection, 3, "aO meet eO lands in eO"),
    "family-chains": (_family_chains, 3, "inclusion chains between the families"),
    "family-duality": (_family_duality, 3, "closed families are complement images"),
    "char-equivalence": (_char_equivalence, 3, "the eleven weakly-eR forms agree"),
    "pointwise-characterization": (_pointwise_characterization, 3, "pointwise weakly-eR form"),
    "theta-open-preimages": (_theta_open_preimages, 3, "theta-open sets pull back e-theta-open"),
    "theta-closure-preimage-sufficient": (
        _theta_preimage_sufficient,
        3,
        "e-theta-closed theta-closure preimages imply weakly-eR",
    ),
    "nonempty-e-open-refinement": (_nonempty_e_open, 2, "nonempty e-open refinements exist"),
    "regular-codomain-collapse": (_regular_codomain, 3, "weakly-eR = strongly-theta-e if codomain regular"),
    "strong-theta-e-via-e-regular": (_st_theta_e_forms, 3, "two forms of strongly-theta-e agree"),
    "implication-diagram": (_implication_diagram, 3, "all drawn arrows hold; missing arrows witnessed"),
    "er-implies-wer": (
        _implication_entry("er-implies-wer", "eR-continuous", "weakly-eR-continuous"),
        3,
        "eR-continuity implies weak eR-continuity",
    ),
    "er-implies-ec": (
        _implication_entry("er-implies-ec", "eR-continuous", "e-continuous"),
        3,
        "eR-continuity implies e-continuity",
    ),
    "contra-implies-wer": (
        _implication_entry(
            "contra-implies-wer", "contra-e-theta-continuous", "weakly-eR-continuous"
        ),
        3,
        "contra e-theta-continuity implies weak eR-continuity",
    ),
    "clopen-t2-implies-er-t2": (_clopen_t2_er_t2, 4, "clopen-T2 spaces are eR-T2"),
    "connected-image": (_connected_image, 3, "weakly-eR surjections preserve connectedness"),
    "equalizer-e-closed": (_equalizer_e_closed, 3, "agreement sets are e-closed under Urysohn codomains"),
    "injective-er-t1": (
        _injective_sep("injective-er-t1", "Hausdorff", "eR-T1"),
        3,
        "weakly-eR injections into Hausdorff give eR-T1",
    ),
    "injective-er-t2": (
        _injective_sep("injective-er-t2", "Urysohn", "eR-T2"),
        3,
        "weakly-eR injections into Urysohn give eR-T2",
    ),
    "product-two-factors": (_product_two, 3, "binary products of weakly-eR maps are weakly-eR"),
    "product-three-factors": (_product_three, 2, "ternary products of weakly-eR maps are weakly-eR"),
    "graph-function": (_graph_function, 3, "weakly-eR graph maps force weakly-eR maps"),
    "er-graph-urysohn": (_er_graph_urysohn, 3, "weakly-eR into Urysohn yields an er-graph"),
    "er-graph-injection-er-t2": (_er_graph_injection, 3, "er-graph + weakly-eR injection gives eR-T2"),
    "theta-closed-images": (_theta_closed_images, 3, "er-graphs force theta-closed images"),
}


def theorem_ids() -> tuple[str, ...]:
    return tuple(THEOREMS)


def verify_theorem(
    theorem: str,
    n_max: int | None = None,
    sample: int | None = None,
    seed: int = 0,
    budget: int | None = None,
) -> TheoremReport:
    """Run one registered theorem check over its enumerated corpus."""
    if theorem not in THEOREMS:
        raise UnknownTheoremId(f"unknown theorem id {theorem!r}", theorem=theorem)
    runner, default_n, _desc = THEOREMS[theorem]
    t0 = time.perf_counter()
    report = runner(
        n_max=n_max if n_max is not None else default_n,
        sample=sample,
        seed=seed,
        budget=budget,
    )
    report.wall_time_s = time.perf_counter() - t0
    return report
