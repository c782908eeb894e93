"""JSON space and map documents, the only wire/file format.

A space document is ``{"points": ["a","b"], "opens": [[], ["a"], ...]}``;
a map document is ``{"dom": <space>, "cod": <space>, "map": {"a": "b", ...}}``.
Emission is canonical: opens in (popcount, value) order, each set listing
labels in point order, so any emitted document re-validates strictly and
re-emits byte-identically.
"""

from __future__ import annotations

import json
from typing import Mapping, Sequence

from .core import FinSpace, PointMap, iter_points, validate_topology
from .errors import DocumentError, UnknownLabel

_ALPHABET = "abcdefghijklmnopqrstuvwx"  # 24 letters, one per permitted point


def default_labels(n: int) -> tuple[str, ...]:
    if n <= len(_ALPHABET):
        return tuple(_ALPHABET[:n])
    return tuple(f"p{i}" for i in range(n))


def space_labels(space: FinSpace) -> tuple[str, ...]:
    return space.labels if space.labels is not None else default_labels(space.n)


def mask_to_labels(space: FinSpace, mask: int) -> list[str]:
    labels = space_labels(space)
    return [labels[i] for i in iter_points(mask)]


def labels_to_mask(space: FinSpace, names: Sequence[str]) -> int:
    labels = space_labels(space)
    index = {name: i for i, name in enumerate(labels)}
    out = 0
    for name in names:
        if name not in index:
            raise UnknownLabel(f"unknown point label {name!r}", label=name)
        out |= 1 << index[name]
    return out


def space_to_doc(space: FinSpace) -> dict:
    return {
        "points": list(space_labels(space)),
        "opens": [mask_to_labels(space, m) for m in space.opens.members],
    }


def space_from_doc(doc: Mapping, *, strict: bool = False) -> FinSpace:
    if not isinstance(doc, Mapping) or "points" not in doc or "opens" not in doc:
        raise DocumentError("space document needs 'points' and 'opens'")
    points = doc["points"]
    if (
        not isinstance(points, Sequence)
        or isinstance(points, str)
        or not points
        or not all(isinstance(p, str) for p in points)
    ):
        raise DocumentError("'points' must be a non-empty list of strings")
    if len(set(points)) != len(points):
        raise DocumentError("point labels must be unique")
    index = {name: i for i, name in enumerate(points)}
    masks = []
    opens = doc["opens"]
    if not isinstance(opens, Sequence) or isinstance(opens, str):
        raise DocumentError("'opens' must be a list of label lists")
    for entry in opens:
        if not isinstance(entry, Sequence) or isinstance(entry, str):
            raise DocumentError("each open must be a list of labels")
        mask = 0
        for name in entry:
            if name not in index:
                raise UnknownLabel(f"unknown point label {name!r}", label=name)
            mask |= 1 << index[name]
        masks.append(mask)
    return validate_topology(len(points), masks, strict=strict, labels=points)


def map_to_doc(f: PointMap) -> dict:
    dom_labels = space_labels(f.dom)
    cod_labels = space_labels(f.cod)
    return {
        "dom": space_to_doc(f.dom),
        "cod": space_to_doc(f.cod),
        "map": {dom_labels[x]: cod_labels[y] for x, y in enumerate(f.map)},
    }


def map_from_doc(doc: Mapping, *, strict: bool = False) -> PointMap:
    if not isinstance(doc, Mapping) or not {"dom", "cod", "map"} <= set(doc):
        raise DocumentError("map document needs 'dom', 'cod' and 'map'")
    dom = space_from_doc(doc["dom"], strict=strict)
    cod = space_from_doc(doc["cod"], strict=strict)
    mapping = doc["map"]
    if not isinstance(mapping, Mapping):
        raise DocumentError("'map' must be an object of label pairs")
    dom_index = {name: i for i, name in enumerate(space_labels(dom))}
    cod_index = {name: i for i, name in enumerate(space_labels(cod))}
    if set(mapping) != set(dom_index):
        missing = sorted(set(dom_index) - set(mapping))
        extra = sorted(set(mapping) - set(dom_index))
        if extra:
            raise UnknownLabel(f"map uses unknown domain labels {extra}", labels=extra)
        raise DocumentError(f"map must cover every domain point, missing {missing}")
    values = [0] * dom.n
    for src, dst in mapping.items():
        if dst not in cod_index:
            raise UnknownLabel(f"unknown codomain label {dst!r}", label=dst)
        values[dom_index[src]] = cod_index[dst]
    return PointMap(dom, cod, tuple(values))


def verdict_doc(f: PointMap, cls: str, holds: bool, witness: dict | None) -> dict:
    doc: dict = {"class": cls, "holds": holds, "witness": None}
    if witness is not None:
        rendered: dict = {}
        if "x" in witness:
            rendered["x"] = space_labels(f.dom)[witness["x"]]
        if "V" in witness:
            rendered["V"] = mask_to_labels(f.cod, witness["V"])
        if "preimage" in witness:
            rendered["preimage"] = mask_to_labels(f.dom, witness["preimage"])
        doc["witness"] = rendered
    return doc


def json_line(obj, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(obj, indent=2)
    return json.dumps(obj, separators=(",", ":"))
