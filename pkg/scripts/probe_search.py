"""Probe the backtracking searcher: node counts across seeds for the smallest
open order of each length, plus the exhaustive refusals at v = l."""
import argparse
import time

from orthocycles.core import complete
from orthocycles.search import SearchBudget, search_pair


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seeds", type=int, default=5)
    ap.add_argument("--budget", type=int, default=1_000_000)
    args = ap.parse_args()

    print("cyclic search at v = 2l + 1:")
    for l in (5, 6, 7, 8, 9):
        v = 2 * l + 1
        for seed in range(1, args.seeds + 1):
            t0 = time.perf_counter()
            res = search_pair(complete(v), l, SearchBudget(args.budget, seed))
            dt = time.perf_counter() - t0
            print(f"  l={l} v={v} seed={seed}: {res.status:<11}"
                  f" nodes={res.nodes:>8}  {dt * 1000:7.1f} ms")

    print("exhaustive refusals at v = l:")
    for l in (5, 7, 9):
        t0 = time.perf_counter()
        res = search_pair(complete(l), l, SearchBudget(max(args.budget, 700_000), 1))
        dt = time.perf_counter() - t0
        print(f"  l={l} v={l}: {res.status} after {res.nodes} nodes"
              f" ({dt:.2f} s)")


if __name__ == "__main__":
    main()
