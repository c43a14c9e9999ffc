"""Regenerate the search-supplied catalog entries.

Two families are frozen here so that builds never depend on a live search:
  * the five smallest two-base-class orders (v = 2l+1) as single cyclic base
    cycles, found by the seeded difference-cycle search;
  * the K_{16,16} ingredient: published base 8-cycles cover only half of the
    difference classes of each side, so each system gets a second base on the
    complementary classes, found by exhaustive scan over closures.

Re-running with the pinned seeds/budgets must reproduce the files verbatim;
the acceptance suite checks exactly that.
"""

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from orthocycles.catalog import get_ingredient  # noqa: E402
from orthocycles.core import complete  # noqa: E402
from orthocycles.search import (  # noqa: E402
    SearchBudget,
    bipartite_translation_completion,
    search_pair,
)
from orthocycles.verify import verify_pair  # noqa: E402

DATA = Path(__file__).resolve().parents[1] / "src" / "orthocycles" / "data"

SEED = 1
BUDGET = 500_000

K16_FIRST = ((0, 0), (0, 1), (1, 0), (2, 1), (6, 0), (1, 1), (4, 0), (6, 1))
K16_SECOND = ((0, 0), (0, 1), (6, 0), (7, 1), (4, 0), (3, 1), (7, 0), (5, 1))


def dump(entry: dict):
    path = DATA / f"{entry['key']}.json"
    path.write_text(json.dumps(entry, indent=1, sort_keys=True) + "\n")
    print(f"wrote {path.name}")


def freeze_cyclic(l: int, v: int):
    res = search_pair(complete(v), l, SearchBudget(max_nodes=BUDGET, seed=SEED))
    assert res.status == "found", (l, v, res.status)
    bases = [list(sys_.cycles[0]) for sys_ in (res.pair.first, res.pair.second)]
    entry = {
        "key": f"l{l}_v{v}",
        "l": l,
        "citation": f"pair of orthogonal {l}-cycle systems of order {v} found "
                    f"by seeded difference-cycle search; frozen for reproducibility",
        "graph": {"kind": "complete", "labels": [str(i) for i in range(v)]},
        "systems": {
            name: {"kind": "bases",
                   "groups": [{"action": {"kind": "cyclic", "modulus": [v]},
                               "bases": [[str(x) for x in base]],
                               "expected": [v]}]}
            for name, base in zip(("first", "second"), bases)
        },
        "meta": {"route": "search", "seed": SEED, "budget": BUDGET},
    }
    dump(entry)


def freeze_k16():
    mate_a, mate_b = bipartite_translation_completion(K16_FIRST, K16_SECOND)
    lab = lambda p: f"({p[0]},{p[1]})"
    labels = [f"({i},0)" for i in range(16)] + [f"({i},1)" for i in range(16)]
    entry = {
        "key": "l8_K16x16",
        "l": 8,
        "citation": "pair of orthogonal 8-cycle decompositions of K_{16,16}: "
                    "published base cycles plus complementary-difference mates "
                    "found by exhaustive scan; frozen for reproducibility",
        "graph": {"kind": "multipartite", "labels": labels,
                  "parts": [labels[:16], labels[16:]]},
        "systems": {
            name: {"kind": "bases",
                   "groups": [{"action": {"kind": "pair_first", "modulus": [16]},
                               "bases": [[lab(p) for p in base] for base in bases],
                               "expected": [16, 16]}]}
            for name, bases in (("first", (K16_FIRST, mate_a)),
                                ("second", (K16_SECOND, mate_b)))
        },
        "meta": {"route": "completion-search"},
    }
    dump(entry)


def main():
    for l, v in [(5, 11), (6, 13), (7, 15), (8, 17), (9, 19)]:
        freeze_cyclic(l, v)
    freeze_k16()
    get_ingredient.cache_clear()
    for l, v in [(5, 11), (6, 13), (7, 15), (8, 17), (9, 19)]:
        pair = get_ingredient(f"l{l}_v{v}")
        rep = verify_pair(pair, l)
        assert rep.ok and len(pair.first.cycles) == v * (v - 1) // (2 * l), (l, v)
        print(f"verified l{l}_v{v}: {len(pair.first.cycles)} cycles per system")
    pair = get_ingredient("l8_K16x16")
    rep = verify_pair(pair, 8)
    assert rep.ok and len(pair.first.cycles) == 32
    print("verified l8_K16x16: 32 cycles per system")


if __name__ == "__main__":
    main()
