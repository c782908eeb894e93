import json

import pytest

from finitop.documents import (
    default_labels,
    json_line,
    labels_to_mask,
    map_from_doc,
    map_to_doc,
    mask_to_labels,
    space_from_doc,
    space_to_doc,
)
from finitop.errors import DocumentError, UnknownLabel
from conftest import SIGMA_5, TAU_5


def test_space_round_trip_is_byte_identical():
    doc = space_from_doc(TAU_5, strict=True)
    emitted = space_to_doc(doc)
    assert json_line(emitted) == json_line(space_to_doc(space_from_doc(emitted, strict=True)))
    assert emitted == TAU_5


def test_map_round_trip():
    doc = {
        "dom": TAU_5,
        "cod": SIGMA_5,
        "map": {"a": "b", "b": "a", "c": "c", "d": "d", "e": "e"},
    }
    f = map_from_doc(doc, strict=True)
    assert map_to_doc(f) == doc


def test_opens_emitted_in_canonical_order():
    shuffled = {
        "points": ["a", "b", "c"],
        "opens": [["a", "b", "c"], ["b"], [], ["a", "b"]],
    }
    space = space_from_doc(shuffled)
    assert space_to_doc(space)["opens"] == [[], ["b"], ["a", "b"], ["a", "b", "c"]]


def test_unknown_labels_are_errors():
    with pytest.raises(UnknownLabel):
        space_from_doc({"points": ["a"], "opens": [[], ["z"]]})
    with pytest.raises(UnknownLabel):
        map_from_doc(
            {
                "dom": {"points": ["a"], "opens": [[], ["a"]]},
                "cod": {"points": ["a"], "opens": [[], ["a"]]},
                "map": {"a": "z"},
            }
        )
    with pytest.raises(UnknownLabel):
        map_from_doc(
            {
                "dom": {"points": ["a"], "opens": [[], ["a"]]},
                "cod": {"points": ["a"], "opens": [[], ["a"]]},
                "map": {"q": "a"},
            }
        )


def test_document_shape_errors():
    with pytest.raises(DocumentError):
        space_from_doc({"points": [], "opens": []})
    with pytest.raises(DocumentError):
        space_from_doc({"points": ["a", "a"], "opens": [[]]})
    with pytest.raises(DocumentError):
        space_from_doc({"opens": [[]]})
    with pytest.raises(DocumentError):
        map_from_doc({"dom": TAU_5, "cod": SIGMA_5, "map": {"a": "b"}})


def test_mask_label_round_trip(tau44):
    for mask in range(16):
        labels = mask_to_labels(tau44, mask)
        assert labels_to_mask(tau44, labels) == mask


def test_default_labels():
    assert default_labels(3) == ("a", "b", "c")
    assert len(set(default_labels(24))) == 24


def test_json_line_compact_and_pretty():
    obj = {"b": 1, "a": [1, 2]}
    assert json_line(obj) == '{"b":1,"a":[1,2]}'
    assert "\n" in json_line(obj, pretty=True)
