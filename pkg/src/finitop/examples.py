"""Bundled reference examples, keyed by their conventional ids.

Each entry carries input documents plus the expected verdicts; reproduce()
recomputes everything and reports field-by-field agreement.  A mismatch is
reported, never patched: the expected values are part of the bundle's
contract and the computed values are what the engine actually finds.
"""

from __future__ import annotations

from .classify import is_in_class
from .documents import (
    map_from_doc,
    mask_to_labels,
    space_from_doc,
    verdict_doc,
)
from .errors import UnknownExample
from .operators import family
from .properties import sep_axiom

_TAU_5 = {
    "points": ["a", "b", "c", "d", "e"],
    "opens": [[], ["a"], ["c"], ["a", "c"], ["c", "d"], ["a", "c", "d"],
              ["a", "b", "c", "d", "e"]],
}
_SIGMA_5 = {
    "points": ["a", "b", "c", "d", "e"],
    "opens": [[], ["b", "c", "d"], ["a", "b", "c", "d", "e"]],
}
_TAU_39 = {
    "points": ["a", "b", "c", "d"],
    "opens": [[], ["a"], ["b"], ["a", "b"], ["a", "b", "c"], ["a", "b", "c", "d"]],
}
_SIGMA_39 = {
    "points": ["a", "b", "c", "d"],
    "opens": [[], ["a"], ["b", "c"], ["a", "b", "c"], ["a", "b", "c", "d"]],
}
_TAU_44 = {
    "points": ["a", "b", "c", "d"],
    "opens": [[], ["a"], ["b"], ["a", "b"], ["a", "b", "c"], ["a", "b", "d"],
              ["a", "b", "c", "d"]],
}

MAP_EXAMPLES: dict[str, dict] = {
    "3.7": {
        "map": {
            "dom": _TAU_5,
            "cod": _SIGMA_5,
            "map": {"a": "e", "b": "b", "c": "c", "d": "d", "e": "a"},
        },
        "expected": {
            "weakly-eR-continuous": True,
            "strongly-theta-e-continuous": False,
        },
    },
    "3.8": {
        "map": {
            "dom": _TAU_5,
            "cod": _SIGMA_5,
            "map": {"a": "b", "b": "a", "c": "c", "d": "d", "e": "e"},
        },
        "expected": {
            "weakly-eR-continuous": True,
            "eR-continuous": False,
        },
    },
    "3.9": {
        "map": {
            "dom": _TAU_39,
            "cod": _SIGMA_39,
            "map": {"a": "a", "b": "c", "c": "b", "d": "d"},
        },
        "expected": {
            "e-continuous": True,
            "weakly-e-continuous": True,
            "eR-continuous": False,
        },
    },
}

SPACE_EXAMPLES: dict[str, dict] = {
    "4.4": {
        "space": _TAU_44,
        "expected_families": {
            "clopen": [[], ["a", "b", "c", "d"]],
            "e-regular": [
                [],
                ["a"],
                ["b"],
                ["a", "c"],
                ["b", "c"],
                ["a", "d"],
                ["b", "d"],
                ["a", "c", "d"],
                ["b", "c", "d"],
                ["a", "b", "c", "d"],
            ],
        },
        "expected_axioms": {"eR-T2": True, "clopen-T2": False},
    },
}

EXAMPLE_IDS: tuple[str, ...] = ("3.7", "3.8", "3.9", "4.4")


def reproduce(example: str) -> dict:
    """Recompute one bundled example and compare against its expectations."""
    if example in MAP_EXAMPLES:
        entry = MAP_EXAMPLES[example]
        f = map_from_doc(entry["map"], strict=True)
        classes = {}
        witnesses = {}
        ok = True
        for cls, expected in entry["expected"].items():
            verdict = is_in_class(f, cls)
            classes[cls] = verdict.holds
            witnesses[cls] = verdict_doc(f, cls, verdict.holds, verdict.witness)["witness"]
            if verdict.holds != expected:
                ok = False
        return {
            "example": example,
            "map": entry["map"],
            "classes": classes,
            "witnesses": witnesses,
            "expected": entry["expected"],
            "reproduced": ok,
        }
    if example in SPACE_EXAMPLES:
        entry = SPACE_EXAMPLES[example]
        space = space_from_doc(entry["space"], strict=True)
        families = {
            kind: [mask_to_labels(space, m) for m in family(space, kind).members]
            for kind in entry["expected_families"]
        }
        axioms = {
            axiom: sep_axiom(space, axiom)[0] for axiom in entry["expected_axioms"]
        }
        ok = (
            families == entry["expected_families"]
            and axioms == entry["expected_axioms"]
        )
        return {
            "example": example,
            "space": entry["space"],
            "families": families,
            "axioms": axioms,
            "expected": {
                "families": entry["expected_families"],
                "axioms": entry["expected_axioms"],
            },
            "reproduced": ok,
        }
    raise UnknownExample(f"unknown example id {example!r}", example=example)


def reproduce_all() -> tuple[list[dict], bool]:
    results = [reproduce(example) for example in EXAMPLE_IDS]
    return results, all(r["reproduced"] for r in results)
