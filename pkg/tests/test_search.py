import random

import numpy as np
import pytest

import oracles
from finitop.classify import CLASSES, is_in_class
from finitop.core import PointMap, validate_topology
from finitop.documents import map_from_doc
from finitop.errors import DocumentError, SizeUnsupported
from finitop.search import (
    all_class_masks,
    bulk_class_mask,
    bulk_er_graph_mask,
    enumerate_functions,
    enumerate_topologies,
    map_cols,
    open_question_search,
    random_space,
    space_pairs,
    spaces_of_size,
    verify_implication,
)
from finitop.properties import has_er_graph


def test_labeled_topology_counts():
    assert [len(list(enumerate_topologies(n))) for n in range(1, 5)] == [1, 4, 29, 355]


def test_dedup_counts():
    assert [len(list(enumerate_topologies(n, dedup=True))) for n in range(1, 5)] == [
        1, 3, 9, 33,
    ]


def test_enumerator_soundness_and_idempotence():
    for space in enumerate_topologies(3):
        revalidated = validate_topology(3, space.opens.members, strict=True)
        assert revalidated.opens.members == space.opens.members


def test_enumerator_completeness_brute_force():
    for n in (1, 2, 3):
        enumerated = {frozenset(space.opens.members) for space in enumerate_topologies(n)}
        assert enumerated == {frozenset(fam) for fam in oracles.all_topologies_brute(n)}


def test_enumerator_size_limit():
    with pytest.raises(SizeUnsupported):
        list(enumerate_topologies(6))


def test_enumerate_functions_counts():
    point = spaces_of_size(1)[0]
    assert len(list(enumerate_functions(point, point))) == 1
    two = spaces_of_size(2)[0]
    maps = list(enumerate_functions(two, two))
    assert len(maps) == 4
    assert len(list(enumerate_functions(two, two, injective=True))) == 2
    assert len(list(enumerate_functions(two, two, surjective=True))) == 2
    tau5 = validate_topology(
        5, [0, 1, 4, 5, 12, 13, 31], strict=True
    )
    assert sum(1 for _ in enumerate_functions(tau5, tau5)) == 5**5


def test_map_cols_matches_lexicographic():
    cols = map_cols(2, 3)
    maps = [(int(a), int(b)) for a, b in cols]
    assert maps == [(y0, y1) for y0 in range(3) for y1 in range(3)]


def test_bulk_engine_matches_classifier_exhaustive_two_points():
    for X in spaces_of_size(2):
        for Y in spaces_of_size(2):
            masks = all_class_masks(X, Y)
            for idx, f in enumerate(enumerate_functions(X, Y)):
                for cls in CLASSES:
                    assert bool(masks[cls][idx]) == is_in_class(f, cls).holds, cls


def test_bulk_engine_matches_classifier_sampled_three_points():
    rng = random.Random(7)
    pairs = space_pairs(3)
    for X, Y in rng.sample(pairs, 25):
        masks = all_class_masks(X, Y)
        for idx, f in enumerate(enumerate_functions(X, Y)):
            for cls in CLASSES:
                assert bool(masks[cls][idx]) == is_in_class(f, cls).holds, cls


def test_bulk_er_graph_matches_scalar():
    rng = random.Random(11)
    pairs = space_pairs(3)
    for X, Y in rng.sample(pairs, 25):
        mask = bulk_er_graph_mask(X, Y)
        for idx, f in enumerate(enumerate_functions(X, Y)):
            assert bool(mask[idx]) == has_er_graph(f)[0]


def test_implication_no_counterexample():
    report = verify_implication("eR-continuous", "weakly-eR-continuous", n_max=3)
    assert report.witness is None
    assert report.completed
    assert report.exit_code == 0
    # reflexive implications can never fail
    report = verify_implication("weakly-clopen", "weakly-clopen", n_max=2)
    assert report.witness is None


def test_implication_counterexample_reverifies():
    report = verify_implication("weakly-e-continuous", "e-continuous", n_max=3)
    assert report.witness is not None
    assert report.exit_code == 2
    f = map_from_doc(report.witness["map"], strict=True)
    assert is_in_class(f, "weakly-e-continuous").holds
    assert not is_in_class(f, "e-continuous").holds


def test_implication_determinism():
    first = verify_implication("weakly-e-continuous", "e-continuous", n_max=3)
    second = verify_implication("weakly-e-continuous", "e-continuous", n_max=3)
    assert first.to_doc() == second.to_doc()


def test_budget_and_resume():
    full = open_question_search(n_max=2)
    assert full.completed and full.examined == 77
    partial = open_question_search(n_max=2, budget=40)
    assert not partial.completed
    assert partial.exit_code == 3
    cursor = partial.resumable_cursor
    assert cursor is not None
    resumed = open_question_search(n_max=2, resume=cursor)
    assert resumed.completed
    assert partial.examined + resumed.examined == full.examined
    with pytest.raises(DocumentError):
        open_question_search(n_max=2, resume="not-a-cursor")
    with pytest.raises(DocumentError):
        open_question_search(n_max=2, resume="10000")


def test_open_question_trivial_sizes():
    report = open_question_search(n_max=1)
    assert report.witness is None and report.examined == 1
    report = open_question_search(n_max=2)
    assert report.witness is None
    assert report.examined == sum(
        len(list(enumerate_functions(x, y))) for x, y in space_pairs(2)
    )


def test_search_report_doc_fields():
    report = open_question_search(n_max=2, budget=40)
    doc = report.to_doc()
    assert set(doc) == {"question", "searched", "examined", "resumable_cursor"}
    finished = open_question_search(n_max=2)
    assert set(finished.to_doc()) == {"question", "searched", "examined"}


def test_random_space_is_valid_topology():
    rng = random.Random(3)
    for _ in range(30):
        space = random_space(5, rng)
        revalidated = validate_topology(5, space.opens.members, strict=True)
        assert revalidated.opens.members == space.opens.members
