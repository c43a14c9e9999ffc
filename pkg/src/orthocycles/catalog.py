"""Embedded store of small verified ingredient pairs.

Each entry is one JSON data file: a host graph with display labels and the two
systems, either as explicit label cycles or as base blocks plus the group
action that develops them (with pinned orbit sizes).  Entries marked as
search-supplied carry the seed and budget that reproduce them.
"""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

from .core import CycleSystem, GraphSpec, OrthogonalPair
from .develop import action_from_dict, develop


def _data_files():
    return resources.files("orthocycles") / "data"


@lru_cache(maxsize=None)
def list_ingredients() -> tuple[tuple[str, str], ...]:
    """(key, citation) for every embedded entry, sorted by key."""
    out = []
    for item in _data_files().iterdir():
        if item.name.endswith(".json"):
            d = json.loads(item.read_text())
            out.append((d["key"], d["citation"]))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def _load(key: str) -> dict:
    path = _data_files() / f"{key}.json"
    try:
        return json.loads(path.read_text())
    except FileNotFoundError:
        raise KeyError(f"no catalog entry {key!r}") from None


def has_ingredient(key: str) -> bool:
    try:
        _load(key)
        return True
    except KeyError:
        return False


def spec_from_dict(g: dict) -> GraphSpec:
    labels = tuple(g["labels"])
    idx = {lab: i for i, lab in enumerate(labels)}
    if g["kind"] == "complete":
        return GraphSpec("complete", labels)
    if g["kind"] == "complete_minus_hole":
        return GraphSpec("complete_minus_hole", labels,
                         hole=frozenset(idx[h] for h in g["hole"]))
    return GraphSpec("multipartite", labels,
                     parts=tuple(tuple(idx[p] for p in part) for part in g["parts"]))


def _label_cycles(payload: dict) -> list:
    if payload["kind"] == "explicit":
        return payload["cycles"]
    cycles = []
    for g in payload["groups"]:
        cycles.extend(develop(g["bases"], action_from_dict(g["action"]), g["expected"]))
    return cycles


@lru_cache(maxsize=None)
def get_ingredient(key: str) -> OrthogonalPair:
    d = _load(key)
    spec = spec_from_dict(d["graph"])
    meta = tuple(sorted({"source": "catalog", "key": key,
                         "citation": d["citation"], **d.get("meta", {})}.items()))
    systems = []
    for name in ("first", "second"):
        label_cycles = _label_cycles(d["systems"][name])
        systems.append(CycleSystem(
            spec,
            [tuple(spec.index(lab) for lab in c) for c in label_cycles],
            meta=meta,
        ))
    return OrthogonalPair(spec, systems[0], systems[1])


def cycle_length(key: str) -> int:
    return _load(key)["l"]


def verify_catalog() -> list:
    """(key, VerificationReport) for every entry; the full regression gate."""
    from .verify import verify_pair

    out = []
    for key, _ in list_ingredients():
        pair = get_ingredient(key)
        out.append((key, verify_pair(pair, cycle_length(key))))
    return out
