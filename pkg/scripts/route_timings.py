"""Wall time of the three P-function routes on growing inputs.

    python3 scripts/route_timings.py [--seq monomial] [--max-vars 5]
"""

import argparse
import time

from pfq.partitions import enumerate_strict
from pfq.pfunc import ROUTES, p_function
from pfq.sequences import parse_sequence


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seq", default="monomial")
    ap.add_argument("--max-vars", type=int, default=5)
    ap.add_argument("--weight", type=int, default=6)
    args = ap.parse_args()
    F = parse_sequence(args.seq)
    print(f"{'n':>2} {'partitions':>10} " + " ".join(f"{r:>9}" for r in ROUTES))
    for n in range(1, args.max_vars + 1):
        lams = [lam for lam in enumerate_strict(args.weight, n) if lam.weight == args.weight]
        times = []
        for route in ROUTES:
            t0 = time.perf_counter()
            vals = [p_function(F, lam, n, route) for lam in lams]
            times.append(time.perf_counter() - t0)
            if route == ROUTES[0]:
                ref = vals
            elif vals != ref:
                raise SystemExit(f"route {route} disagrees at n={n}")
        print(f"{n:>2} {len(lams):>10} " + " ".join(f"{t:>8.3f}s" for t in times))


if __name__ == "__main__":
    main()
