"""Build and verify an orthogonal pair for every admissible order up to a
bound; print per-order routes, cycle counts, and build times."""
import argparse
import time
from collections import Counter

from orthocycles.construct import (UnsatisfiableError, admissible,
                                   construct_pair, plan_for)
from orthocycles.verify import verify_pair


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-order", type=int, default=201)
    ap.add_argument("--lengths", type=int, nargs="*", default=[5, 6, 7, 8, 9])
    ap.add_argument("--quiet", action="store_true", help="totals only")
    args = ap.parse_args()

    routes = Counter()
    t_all = time.perf_counter()
    for l in args.lengths:
        rows = []
        for v in range(l, args.max_order + 1):
            if not admissible(l, v):
                continue
            t0 = time.perf_counter()
            try:
                pair = construct_pair(l, v)
            except UnsatisfiableError:
                rows.append((v, 0, "unsatisfiable", time.perf_counter() - t0))
                continue
            assert verify_pair(pair, l).ok, (l, v)
            dt = time.perf_counter() - t0
            route = plan_for(l, v).route
            routes[route] += 1
            rows.append((v, len(pair.first.cycles), route, dt))
        print(f"length {l}: {len(rows)} admissible orders up to {args.max_order}")
        if not args.quiet:
            for v, n, route, dt in rows:
                print(f"  v={v:>3}  cycles/system={n:>4}  {route:<18}"
                      f"{dt * 1000:8.1f} ms")
    print(f"route totals: {dict(routes)}")
    print(f"total wall time: {time.perf_counter() - t_all:.1f} s")


if __name__ == "__main__":
    main()
