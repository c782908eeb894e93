import pytest

from finitop.classify import is_in_class
from finitop.documents import map_from_doc
from finitop.errors import UnknownTheoremId
from finitop.theorems import (
    DIAGRAM_ARROWS,
    THEOREMS,
    theorem_ids,
    verify_theorem,
)

ZERO_VIOLATION_RUNS = [
    ("e-theta-closure-laws", {"n_max": 2, "sample": 30, "seed": 5}),
    ("open-set-closures-agree", {"n_max": 3}),
    ("a-open-e-open-intersection", {"n_max": 3}),
    ("family-chains", {"n_max": 3}),
    ("family-duality", {"n_max": 3}),
    ("char-equivalence", {"n_max": 2}),
    ("pointwise-characterization", {"n_max": 2}),
    ("theta-open-preimages", {"n_max": 2}),
    ("theta-closure-preimage-sufficient", {"n_max": 2}),
    ("nonempty-e-open-refinement", {"n_max": 2}),
    ("regular-codomain-collapse", {"n_max": 2}),
    ("strong-theta-e-via-e-regular", {"n_max": 2}),
    ("implication-diagram", {"n_max": 2}),
    ("er-implies-wer", {"n_max": 2}),
    ("er-implies-ec", {"n_max": 2}),
    ("contra-implies-wer", {"n_max": 2}),
    ("clopen-t2-implies-er-t2", {"n_max": 4}),
    ("connected-image", {"n_max": 3}),
    ("equalizer-e-closed", {"n_max": 2}),
    ("injective-er-t1", {"n_max": 3}),
    ("injective-er-t2", {"n_max": 3}),
    ("product-three-factors", {"n_max": 2}),
    ("graph-function", {"n_max": 2}),
    ("er-graph-urysohn", {"n_max": 2}),
    ("er-graph-injection-er-t2", {"n_max": 2}),
    ("theta-closed-images", {"n_max": 2}),
]


@pytest.mark.parametrize("theorem,params", ZERO_VIOLATION_RUNS,
                         ids=[t for t, _ in ZERO_VIOLATION_RUNS])
def test_theorem_zero_violations(theorem, params):
    report = verify_theorem(theorem, **params)
    assert report.violations == []
    assert report.checked > 0
    assert report.exit_code == 0


def test_registry_lists_every_theorem():
    ids = theorem_ids()
    assert set(ids) == set(THEOREMS)
    assert "char-equivalence" in ids


def test_unknown_theorem_id():
    with pytest.raises(UnknownTheoremId):
        verify_theorem("flux-capacitor")


def test_vacuity_counters_are_reported():
    report = verify_theorem("equalizer-e-closed", n_max=2)
    assert report.hypothesis_met <= report.checked
    assert report.notes["urysohn_pairs"] > 0
    report = verify_theorem("connected-image", n_max=3)
    # e-open families are so rich at these sizes that only the one-point
    # space is e-connected, and the counter must surface that
    assert report.hypothesis_met == 1


def test_diagram_non_implications_have_witness_or_note():
    report = verify_theorem("implication-diagram", n_max=2)
    observed = report.notes["non_implications_observed"]
    assert observed, "non-arrow table missing"
    arrow_set = {f"{a}->{b}" for a, b in DIAGRAM_ARROWS}
    for entry in observed:
        assert f"{entry['from']}->{entry['to']}" not in arrow_set
        if entry["status"] == "counterexample":
            f = map_from_doc(entry["witness"], strict=True)
            assert is_in_class(f, entry["from"]).holds
            assert not is_in_class(f, entry["to"]).holds
        else:
            assert entry["status"] == "none found at this size"
            assert entry["witness"] is None


def test_product_two_factor_counterexample_is_real():
    """The two-factor product scan finds genuine counterexamples once a
    three-point factor is allowed; each recorded violation re-verifies
    against the literal classifier.  With both factors on at most two
    points the statement holds exhaustively."""
    clean = verify_theorem("product-two-factors", n_max=2)
    assert clean.violations == []
    report = verify_theorem("product-two-factors", n_max=3)
    assert report.notes["violation_count"] > 0
    from finitop.core import product

    sample = report.violations[0]
    f1 = map_from_doc(sample["f1"], strict=True)
    f2 = map_from_doc(sample["f2"], strict=True)
    assert is_in_class(f1, "weakly-eR-continuous").holds
    assert is_in_class(f2, "weakly-eR-continuous").holds
    from finitop.core import PointMap

    dom = product([f1.dom, f2.dom])
    cod = product([f1.cod, f2.cod])
    values = tuple(
        f1.map[x1] * f2.cod.n + f2.map[x2]
        for x1 in range(f1.dom.n)
        for x2 in range(f2.dom.n)
    )
    prod_map = PointMap(dom, cod, values)
    assert not is_in_class(prod_map, "weakly-eR-continuous").holds


def test_theorem_reports_serialize():
    report = verify_theorem("family-chains", n_max=2)
    doc = report.to_doc()
    assert set(doc) == {
        "theorem", "params", "checked", "hypothesis_met", "violations", "notes",
    }
