import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from finitop.documents import map_from_doc, space_from_doc
from finitop.search import spaces_up_to

TAU_5 = {
    "points": ["a", "b", "c", "d", "e"],
    "opens": [[], ["a"], ["c"], ["a", "c"], ["c", "d"], ["a", "c", "d"],
              ["a", "b", "c", "d", "e"]],
}
SIGMA_5 = {
    "points": ["a", "b", "c", "d", "e"],
    "opens": [[], ["b", "c", "d"], ["a", "b", "c", "d", "e"]],
}
TAU_39 = {
    "points": ["a", "b", "c", "d"],
    "opens": [[], ["a"], ["b"], ["a", "b"], ["a", "b", "c"], ["a", "b", "c", "d"]],
}
SIGMA_39 = {
    "points": ["a", "b", "c", "d"],
    "opens": [[], ["a"], ["b", "c"], ["a", "b", "c"], ["a", "b", "c", "d"]],
}
TAU_44 = {
    "points": ["a", "b", "c", "d"],
    "opens": [[], ["a"], ["b"], ["a", "b"], ["a", "b", "c"], ["a", "b", "d"],
              ["a", "b", "c", "d"]],
}


@pytest.fixture(scope="session")
def tau5():
    return space_from_doc(TAU_5, strict=True)


@pytest.fixture(scope="session")
def sigma5():
    return space_from_doc(SIGMA_5, strict=True)


@pytest.fixture(scope="session")
def tau39():
    return space_from_doc(TAU_39, strict=True)


@pytest.fixture(scope="session")
def sigma39():
    return space_from_doc(SIGMA_39, strict=True)


@pytest.fixture(scope="session")
def tau44():
    return space_from_doc(TAU_44, strict=True)


@pytest.fixture(scope="session")
def map37():
    return map_from_doc({"dom": TAU_5, "cod": SIGMA_5,
                         "map": {"a": "e", "b": "b", "c": "c", "d": "d", "e": "a"}})


@pytest.fixture(scope="session")
def map38():
    return map_from_doc({"dom": TAU_5, "cod": SIGMA_5,
                         "map": {"a": "b", "b": "a", "c": "c", "d": "d", "e": "e"}})


@pytest.fixture(scope="session")
def map39():
    return map_from_doc({"dom": TAU_39, "cod": SIGMA_39,
                         "map": {"a": "a", "b": "c", "c": "b", "d": "d"}})


@pytest.fixture(scope="session")
def small_spaces():
    """Every labeled topology on up to three points."""
    return spaces_up_to(3)
