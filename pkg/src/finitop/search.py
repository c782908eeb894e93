"""Exhaustive enumeration and counterexample search.

Finite topologies correspond bijectively to preorders (reflexive
transitive relations): the opens of a finite space are exactly the up-sets
of its specialization preorder.  Enumeration therefore walks relation
matrices instead of the doubly-exponential space of set families.

Scans over (domain, codomain, map) triples are deterministic: spaces
ascend by point count then enumeration index, map values are lexicographic,
and the first witness in that order is reported.  Budgets are counted in
classifier invocations (one per hypothesis evaluation plus one per
conclusion evaluation on hypothesis-true maps) and enforced conservatively
at pair boundaries, so identical inputs and budgets always produce
identical reports.

The hot loops run through a vectorized bulk engine that evaluates a class
on every map of a pair at once; it relies on the finite-space fact that
every point has a minimal open neighborhood.  Every reported witness is
re-verified through the literal classifier, and the engine itself is
checked against the classifier exhaustively on small corpora in the tests.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass

import numpy as np

from .classify import CLASSES, POINTWISE_CLASSES, PREIMAGE_CLASSES, is_in_class
from .core import FinSpace, PointMap, SetFamily, closure, complement, iter_points
from .documents import map_to_doc
from .errors import DocumentError, SizeUnsupported
from .operators import family, kernel_closure

ENUMERATION_LIMIT = 5


def _transitive_rows(rows: tuple[int, ...]) -> bool:
    for row in rows:
        m = row
        while m:
            low = m & -m
            if rows[low.bit_length() - 1] & ~row:
                return False
            m ^= low
    return True


def _upset_space(rows: tuple[int, ...]) -> FinSpace:
    n = len(rows)
    opens = []
    for mask in range(1 << n):
        ok = True
        for x in iter_points(mask):
            if rows[x] & ~mask:
                ok = False
                break
        if ok:
            opens.append(mask)
    return FinSpace(n, SetFamily(opens))


def _decode_rows(n: int, code: int) -> tuple[int, ...]:
    rows = [1 << i for i in range(n)]
    bit = 0
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            if code >> bit & 1:
                rows[i] |= 1 << j
            bit += 1
    return tuple(rows)


def _encode_rows(rows: tuple[int, ...]) -> int:
    n = len(rows)
    code = 0
    bit = 0
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            if rows[i] >> j & 1:
                code |= 1 << bit
            bit += 1
    return code


def _permuted_rows(rows: tuple[int, ...], perm: tuple[int, ...]) -> tuple[int, ...]:
    n = len(rows)
    out = [0] * n
    for i in range(n):
        m = 0
        row = rows[i]
        for j in range(n):
            if row >> j & 1:
                m |= 1 << perm[j]
        out[perm[i]] = m
    return tuple(out)


def _canonical_code(rows: tuple[int, ...], perms) -> int:
    return min(_encode_rows(_permuted_rows(rows, p)) for p in perms)


def enumerate_preorders(n: int):
    """All reflexive transitive relations on n labeled points, as row masks,
    in ascending order of their off-diagonal bit encoding."""
    for code in range(1 << (n * (n - 1))):
        rows = _decode_rows(n, code)
        if _transitive_rows(rows):
            yield rows


def enumerate_topologies(n: int, dedup: bool = False, max_n: int = ENUMERATION_LIMIT):
    """Every labeled topology on n points exactly once, via its preorder.

    With ``dedup`` only one representative per homeomorphism class is
    emitted (the permutation minimizing the relation encoding).
    """
    if not 1 <= n <= max_n:
        raise SizeUnsupported(
            f"exhaustive enumeration supports 1..{max_n} points", n=n
        )
    perms = list(itertools.permutations(range(n))) if dedup else None
    for rows in enumerate_preorders(n):
        if dedup and _encode_rows(rows) != _canonical_code(rows, perms):
            continue
        yield _upset_space(rows)


def random_space(n: int, rng: random.Random) -> FinSpace:
    """The topology of a random preorder: reflexive-transitive closure of a
    random relation.  Deterministic for a seeded generator."""
    rows = [1 << i for i in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j and rng.random() < 0.35:
                rows[i] |= 1 << j
    for k in range(n):  # Warshall closure
        for i in range(n):
            if rows[i] >> k & 1:
                rows[i] |= rows[k]
    return _upset_space(tuple(rows))


def enumerate_functions(
    s1: FinSpace, s2: FinSpace, injective: bool = False, surjective: bool = False
):
    """All total maps from s1 to s2 in lexicographic order of value tuples."""
    for values in itertools.product(range(s2.n), repeat=s1.n):
        if injective and len(set(values)) != len(values):
            continue
        if surjective and len(set(values)) != s2.n:
            continue
        yield PointMap(s1, s2, values)


_spaces_cache: dict[int, list[FinSpace]] = {}


def spaces_of_size(n: int) -> list[FinSpace]:
    if n not in _spaces_cache:
        _spaces_cache[n] = list(enumerate_topologies(n))
    return _spaces_cache[n]


def spaces_up_to(n_max: int) -> list[FinSpace]:
    out: list[FinSpace] = []
    for n in range(1, n_max + 1):
        out.extend(spaces_of_size(n))
    return out


_pairs_cache: dict[int, list[tuple[FinSpace, FinSpace]]] = {}


def space_pairs(n_max: int) -> list[tuple[FinSpace, FinSpace]]:
    """Ordered (domain, codomain) pairs over all spaces with at most n_max
    points; the fixed enumeration order behind cursors and first-witness
    semantics."""
    if n_max not in _pairs_cache:
        spaces = spaces_up_to(n_max)
        _pairs_cache[n_max] = [(x, y) for x in spaces for y in spaces]
    return _pairs_cache[n_max]


# ---------------------------------------------------------------------------
# bulk engine


def _scratch(space: FinSpace, key: str) -> dict:
    from .operators import _ops

    scratch = _ops(space).scratch
    if key not in scratch:
        scratch[key] = {}
    return scratch[key]


def map_cols(n1: int, n2: int) -> np.ndarray:
    """Value matrix of all n2**n1 maps, row m listing the images of 0..n1-1
    for the m-th map in lexicographic order."""
    m = np.arange(n2**n1, dtype=np.int64)
    divisors = n2 ** (n1 - 1 - np.arange(n1, dtype=np.int64))
    return (m[:, None] // divisors) % n2


_cols_cache: dict[tuple[int, int], np.ndarray] = {}


def _cols(n1: int, n2: int) -> np.ndarray:
    key = (n1, n2)
    if key not in _cols_cache:
        _cols_cache[key] = map_cols(n1, n2)
    return _cols_cache[key]


def _bulk_pre(cols: np.ndarray, mask: int, pow2: np.ndarray) -> np.ndarray:
    """Preimage masks of one codomain subset, for every map at once."""
    return ((mask >> cols) & 1) @ pow2


def _pow2(n1: int) -> np.ndarray:
    return np.int64(1) << np.arange(n1, dtype=np.int64)


def _pointwise_table(space: FinSpace, cls: str) -> np.ndarray:
    """table[B] = points x having an admissible U with hull(U) <= B."""
    cache = _scratch(space, "pt")
    if cls in cache:
        return cache[cls]
    fam_kind, hull, _use_cl = POINTWISE_CLASSES[cls]
    full = space.full
    table = [0] * (full + 1)
    for u in family(space, fam_kind).members:
        hu = u if hull is None else kernel_closure(space, hull, u)
        b = hu
        while True:
            table[b] |= u
            if b == full:
                break
            b = (b + 1) | hu
    arr = np.array(table, dtype=np.int64)
    cache[cls] = arr
    return arr


def _family_lookup(space: FinSpace, kind: str) -> np.ndarray:
    cache = _scratch(space, "famb")
    if kind in cache:
        return cache[kind]
    arr = np.zeros(space.full + 1, dtype=bool)
    arr[list(family(space, kind).members)] = True
    cache[kind] = arr
    return arr


def _targets(space: FinSpace, use_cl: bool) -> tuple[int, ...]:
    """Per-point target mask: the minimal open neighborhood, or its closure.

    Monotonicity of cl reduces the for-every-open-V quantifiers to the
    minimal neighborhood of f(x); the tests check this reduction against
    the literal classifier."""
    cache = _scratch(space, "targets")
    if use_cl not in cache:
        if use_cl:
            cache[use_cl] = tuple(closure(space, u) for u in space.min_nbhd)
        else:
            cache[use_cl] = tuple(space.min_nbhd)
    return cache[use_cl]


def bulk_class_mask(
    X: FinSpace, Y: FinSpace, cls: str, cols: np.ndarray | None = None
) -> np.ndarray:
    """Boolean verdicts of one class for every map of the pair at once.

    ``cols`` defaults to all maps in lexicographic order; pass an explicit
    value matrix to evaluate a subset of maps (rows are value tuples).
    """
    if cols is None:
        cols = _cols(X.n, Y.n)
    pow2 = _pow2(X.n)
    m_count = cols.shape[0]
    if cls in PREIMAGE_CLASSES:
        lookup = _family_lookup(X, PREIMAGE_CLASSES[cls])
        ok = np.ones(m_count, dtype=bool)
        for v in Y.opens.members:
            ok &= lookup[_bulk_pre(cols, v, pow2)]
        return ok
    table = _pointwise_table(X, cls)
    use_cl = POINTWISE_CLASSES[cls][2]
    targets = _targets(Y, use_cl)
    prey = np.empty((Y.n, m_count), dtype=np.int64)
    for y in range(Y.n):
        prey[y] = _bulk_pre(cols, targets[y], pow2)
    rows = np.arange(m_count)
    ok = np.ones(m_count, dtype=bool)
    for x in range(X.n):
        sel = prey[cols[:, x], rows]
        ok &= ((table[sel] >> x) & 1).astype(bool)
    return ok


def bulk_er_graph_mask(
    X: FinSpace, Y: FinSpace, cols: np.ndarray | None = None
) -> np.ndarray:
    """Vectorized er-graph test: every off-graph (x, y) admits an e-regular
    U around x whose image misses cl of the minimal neighborhood of y."""
    if cols is None:
        cols = _cols(X.n, Y.n)
    pow2 = _pow2(X.n)
    m_count = cols.shape[0]
    table = _pointwise_table(X, "weakly-eR-continuous")  # U from eR(X), no hull
    targets = _targets(Y, True)
    ok = np.ones(m_count, dtype=bool)
    for y in range(Y.n):
        avoid = complement(targets[y], Y.n)
        vals = table[_bulk_pre(cols, avoid, pow2)]
        for x in range(X.n):
            cond = ((vals >> x) & 1).astype(bool) | (cols[:, x] == y)
            ok &= cond
    return ok


def all_class_masks(
    X: FinSpace, Y: FinSpace, cols: np.ndarray | None = None
) -> dict[str, np.ndarray]:
    if cols is None:
        cols = _cols(X.n, Y.n)
    return {cls: bulk_class_mask(X, Y, cls, cols) for cls in CLASSES}


# ---------------------------------------------------------------------------
# scan reports


@dataclass
class SearchReport:
    """Outcome of a scan; ``wall_time_s`` never enters the JSON payload."""

    question: str
    searched: dict
    witness: dict | None
    examined: int
    completed: bool
    resumable_cursor: str | None
    wall_time_s: float

    @property
    def exit_code(self) -> int:
        if self.witness is not None:
            return 2
        if self.resumable_cursor is not None:
            return 3
        return 0

    def to_doc(self) -> dict:
        doc = {
            "question": self.question,
            "searched": self.searched,
            "examined": self.examined,
        }
        if self.witness is not None:
            doc["witness"] = self.witness
        if self.resumable_cursor is not None:
            doc["resumable_cursor"] = self.resumable_cursor
        return doc


def _parse_cursor(resume: str | None, limit: int) -> int:
    if resume is None:
        return 0
    try:
        value = int(resume)
    except ValueError:
        raise DocumentError(f"cursor must be a pair index, got {resume!r}")
    if not 0 <= value <= limit:
        raise DocumentError(f"cursor {value} outside 0..{limit}")
    return value


def _scan_for_counterexample(
    question: str,
    cls_a: str,
    cls_b: str,
    n_max: int,
    budget: int | None,
    resume: str | None,
) -> SearchReport:
    """First map satisfying cls_a but not cls_b, or exhaustion."""
    t0 = time.perf_counter()
    pairs = space_pairs(n_max)
    start = _parse_cursor(resume, len(pairs))
    invocations = 0
    examined = 0
    witness = None
    cursor = None
    completed = True
    for pi in range(start, len(pairs)):
        X, Y = pairs[pi]
        total = Y.n**X.n
        if budget is not None and invocations + 2 * total > budget:
            cursor = str(pi)
            completed = False
            break
        cols = _cols(X.n, Y.n)
        a_ok = bulk_class_mask(X, Y, cls_a, cols)
        invocations += total
        examined += total
        hits = int(a_ok.sum())
        if not hits:
            continue
        invocations += hits
        b_ok = bulk_class_mask(X, Y, cls_b, cols)
        viol = a_ok & ~b_ok
        if viol.any():
            idx = int(np.nonzero(viol)[0][0])
            f = PointMap(X, Y, tuple(int(v) for v in cols[idx]))
            va, vb = is_in_class(f, cls_a), is_in_class(f, cls_b)
            if not va.holds or vb.holds:
                raise RuntimeError(
                    "bulk engine disagrees with the literal classifier on "
                    f"{cls_a}/{cls_b}; refusing to report"
                )
            witness = {
                "satisfies": cls_a,
                "violates": cls_b,
                "map": map_to_doc(f),
            }
            completed = True
            break
    report = SearchReport(
        question=question,
        searched={
            "n_max": n_max,
            "pairs": len(pairs),
            "start_pair": start,
            "invocations": invocations,
        },
        witness=witness,
        examined=examined,
        completed=completed,
        resumable_cursor=cursor,
        wall_time_s=time.perf_counter() - t0,
    )
    return report


def verify_implication(
    cls_a: str,
    cls_b: str,
    n_max: int = 3,
    budget: int | None = None,
    resume: str | None = None,
) -> SearchReport:
    """Scan for a map in cls_a but outside cls_b; no witness means the
    implication held on every examined map."""
    if cls_a not in CLASSES or cls_b not in CLASSES:
        from .errors import UnknownClass

        raise UnknownClass(f"unknown class in implication {cls_a!r} -> {cls_b!r}")
    return _scan_for_counterexample(
        f"implication:{cls_a}->{cls_b}", cls_a, cls_b, n_max, budget, resume
    )


def open_question_search(
    n_max: int = 3, budget: int | None = None, resume: str | None = None
) -> SearchReport:
    """Hunt for a weakly-e-continuous map that is not weakly-eR-continuous.

    Reports bounded-size evidence only: a re-verified witness, or none up
    to the searched size.
    """
    return _scan_for_counterexample(
        "open-question",
        "weakly-e-continuous",
        "weakly-eR-continuous",
        n_max,
        budget,
        resume,
    )
