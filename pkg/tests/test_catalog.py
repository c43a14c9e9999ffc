import pytest

from orthocycles.catalog import (
    cycle_length,
    get_ingredient,
    has_ingredient,
    list_ingredients,
    verify_catalog,
)
from orthocycles.core import CycleSystem, OrthogonalPair
from orthocycles.verify import verify_pair

# cycles per system, pinned; counts are |E| / l for each host graph
PINNED_COUNTS = {
    "l3_v7": 7,
    "l5_v11": 11,
    "l5_v15": 21,
    "l5_K15mK5": 19,
    "l5_v21": 42,
    "l5_v25": 60,
    "l6_v9": 6,
    "l6_v13": 13,
    "l6_K444": 8,
    "l6_v21": 35,
    "l6_K6x10": 10,
    "l7_v15": 15,
    "l7_v21": 30,
    "l7_K21mK7": 27,
    "l7_v29": 58,
    "l7_v35": 85,
    "l8_v17": 17,
    "l8_K16x16": 32,
    "l9_v19": 19,
    "l9_v27": 39,
    "l9_K27mK9": 35,
    "l9_v37": 74,
    "l9_v45": 110,
    "l9_K999": 27,
}


def test_listing_covers_pinned_keys():
    keys = {k for k, _ in list_ingredients()}
    assert keys >= set(PINNED_COUNTS)
    assert all(cite for _, cite in list_ingredients())


def test_pinned_cycle_counts():
    for key, count in PINNED_COUNTS.items():
        pair = get_ingredient(key)
        assert len(pair.first.cycles) == count, key
        assert len(pair.second.cycles) == count, key


def test_every_entry_verifies():
    for key, report in verify_catalog():
        assert report.ok, (key, report)
        assert report.max_cross_intersection <= 1, key


def test_cycle_lengths_match_key_prefix():
    for key, _ in list_ingredients():
        l = cycle_length(key)
        assert key.startswith(f"l{l}_")
        pair = get_ingredient(key)
        assert pair.first.cycle_length == l


def test_unknown_key():
    assert not has_ingredient("l4_v99")
    with pytest.raises(KeyError, match="l4_v99"):
        get_ingredient("l4_v99")


def test_ingredients_are_cached():
    assert get_ingredient("l6_v9") is get_ingredient("l6_v9")


def test_meta_carries_provenance():
    m = dict(get_ingredient("l5_v15").first.meta)
    assert m["source"] == "catalog"
    assert m["key"] == "l5_v15"
    assert m["citation"]


def test_verifier_catches_tampered_entry():
    pair = get_ingredient("l6_v9")
    c0 = list(pair.first.cycles[0])
    c0[0], c0[1] = c0[1], c0[0]
    tampered = CycleSystem(pair.spec, [tuple(c0)] + list(pair.first.cycles[1:]))
    report = verify_pair(OrthogonalPair(pair.spec, tampered, pair.second), 6)
    assert not report.ok
