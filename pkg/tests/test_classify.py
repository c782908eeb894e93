import itertools

import pytest

from finitop.classify import (
    CLASSES,
    check_witness,
    classify_all,
    is_in_class,
    is_weakly_er_continuous_at,
    pointwise_satisfying_set,
    strongly_theta_e_via_regular_sets,
    wer_characterization,
)
from finitop.core import PointMap, constant_map, identity_map, image, validate_topology
from finitop.documents import labels_to_mask, mask_to_labels, verdict_doc
from finitop.errors import UnknownClass
from finitop.operators import family
from finitop.search import enumerate_functions, spaces_of_size


def test_example_37_verdicts(map37):
    assert is_in_class(map37, "weakly-eR-continuous").holds
    # The strongly-theta-e condition is satisfied: {b,c,d} is semiopen in
    # the domain family, hence e-open, and its complement {a,e} is semiopen
    # too, so {b,c,d} is e-regular and maps onto exactly the open {b,c,d}.
    bcd = labels_to_mask(map37.dom, ["b", "c", "d"])
    assert bcd in family(map37.dom, "e-regular")
    assert image(map37, bcd) == bcd
    assert is_in_class(map37, "strongly-theta-e-continuous").holds
    # the plain strongly-theta class does fail, with the canonical witness
    verdict = is_in_class(map37, "strongly-theta-continuous")
    assert not verdict.holds
    assert verdict.witness == {"x": 1, "V": bcd}


def test_example_38_verdicts(map38):
    assert is_in_class(map38, "weakly-eR-continuous").holds
    verdict = is_in_class(map38, "eR-continuous")
    assert not verdict.holds
    assert verdict.witness["V"] == labels_to_mask(map38.cod, ["b", "c", "d"])
    assert verdict.witness["preimage"] == labels_to_mask(map38.dom, ["a", "c", "d"])
    assert verdict.witness["preimage"] not in family(map38.dom, "e-regular")


def test_example_39_verdicts(map39):
    assert is_in_class(map39, "e-continuous").holds
    assert is_in_class(map39, "weakly-e-continuous").holds
    verdict = is_in_class(map39, "eR-continuous")
    assert not verdict.holds
    assert mask_to_labels(map39.cod, verdict.witness["V"]) == ["a", "b", "c"]


def test_constant_maps_are_er_continuous(small_spaces):
    for dom in small_spaces[:8]:
        for cod in small_spaces[:8]:
            for y in range(cod.n):
                f = constant_map(dom, cod, y)
                assert is_in_class(f, "eR-continuous").holds


def test_identity_on_discrete_domain():
    disc = validate_topology(3, list(range(8)), strict=True)
    for cod in spaces_of_size(3)[:10]:
        f = PointMap(disc, cod, (0, 1, 2))
        assert is_in_class(f, "eR-continuous").holds


def test_witness_reproducibility(small_spaces):
    corpus = [(s1, s2) for s1 in small_spaces[10:20] for s2 in small_spaces[10:20]]
    for s1, s2 in corpus[:40]:
        for f in enumerate_functions(s1, s2):
            for cls in ("weakly-eR-continuous", "eR-continuous",
                        "strongly-theta-continuous", "weakly-clopen"):
                verdict = is_in_class(f, cls)
                if not verdict.holds:
                    assert check_witness(f, cls, verdict.witness)


def test_witness_canonical_order(map38):
    verdict = is_in_class(map38, "eR-continuous")
    opens = map38.cod.opens.members
    failing = [v for v in opens
               if is_in_class(map38, "eR-continuous").witness["V"] == v]
    assert verdict.witness["V"] == failing[0]
    # pointwise witnesses scan x ascending, then opens in family order
    sierp = validate_topology(2, [0, 1, 3], strict=True)
    disc = validate_topology(2, [0, 1, 2, 3], strict=True)
    f = PointMap(disc, sierp, (0, 1))
    v = is_in_class(f, "strongly-theta-continuous")
    if not v.holds:
        assert v.witness["x"] == min(
            x for x in range(2)
            for u in sierp.opens.members
            if u >> f.map[x] & 1 and not is_in_class(f, "strongly-theta-continuous").holds
        )


def test_classify_all_shape(map39):
    report = classify_all(map39)
    assert tuple(report) == CLASSES
    assert report["e-continuous"].holds
    assert not report["eR-continuous"].holds
    again = classify_all(map39)
    assert {k: v.holds for k, v in report.items()} == {
        k: v.holds for k, v in again.items()
    }


def test_verdict_doc_rendering(map38):
    verdict = is_in_class(map38, "eR-continuous")
    doc = verdict_doc(map38, "eR-continuous", verdict.holds, verdict.witness)
    assert doc == {
        "class": "eR-continuous",
        "holds": False,
        "witness": {"V": ["b", "c", "d"], "preimage": ["a", "c", "d"]},
    }


def test_unknown_class(map38):
    with pytest.raises(UnknownClass):
        is_in_class(map38, "hyper-continuous")
    with pytest.raises(UnknownClass):
        wer_characterization(map38, 12)


def test_characterizations_all_true_for_wer_maps(map37, map38):
    for f in (map37, map38):
        assert all(wer_characterization(f, k) for k in range(1, 12))


def test_characterizations_identity_indiscrete():
    ind = validate_topology(3, [0, 0b111], strict=True)
    f = identity_map(ind)
    assert all(wer_characterization(f, k) for k in range(1, 12))
    assert is_in_class(f, "eR-continuous").holds


def test_characterizations_all_false_together(small_spaces):
    found = 0
    for s1 in small_spaces:
        for s2 in small_spaces[:6]:
            for f in enumerate_functions(s1, s2):
                if not wer_characterization(f, 1):
                    assert not any(wer_characterization(f, k) for k in range(2, 12))
                    found += 1
            if found > 50:
                return
    assert found, "corpus contained no non-weakly-eR map"


def test_pointwise_form_and_satisfying_set(map38):
    dom = map38.dom
    for x in range(dom.n):
        assert is_weakly_er_continuous_at(map38, x)
    fx = map38.map[0]
    for v in map38.cod.opens.members:
        if v >> fx & 1:
            u = pointwise_satisfying_set(map38, "weakly-eR-continuous", 0, v)
            assert u is not None and u >> 0 & 1
            assert u in family(dom, "e-regular")


def test_strongly_theta_e_forms_agree(small_spaces):
    for s1 in small_spaces[:10]:
        for s2 in small_spaces[:10]:
            for f in enumerate_functions(s1, s2):
                assert (
                    is_in_class(f, "strongly-theta-e-continuous").holds
                    == strongly_theta_e_via_regular_sets(f)
                )
