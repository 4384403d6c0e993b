"""Show how the factorial Pieri coefficients depend on the parity of n.

Expands P_mu(x|a) q_r(x) directly in n = l(mu) + 1 and n = l(mu) + 2
variables and prints the determinant generating function for each parity,
including the (8,6,4,3,2) / (6,5,4,2,1) example.

    python3 scripts/pieri_parity_demo.py [--mu 2] [--r 1]
"""

import argparse

from pfq.partitions import parse_parts
from pfq.pieri import EXAMPLE_LAMBDA, EXAMPLE_MU, pieri_det, pieri_direct, example_product
from pfq.sequences import symbolic_factorial


def show(c):
    return c.render() if hasattr(c, "render") else str(c)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--mu", default="2")
    ap.add_argument("--r", type=int, default=1)
    args = ap.parse_args()
    F = symbolic_factorial()
    mu = parse_parts(args.mu)
    for n in (len(mu) + 1, len(mu) + 2):
        parity = "even" if n % 2 == 0 else "odd"
        print(f"n = {n} ({parity}):")
        for lam, c in sorted(pieri_direct(F, mu, args.r, n).items(), key=lambda t: t[0].parts):
            det = pieri_det(F, lam, mu, parity, args.r).coeffs[args.r]
            mark = "ok" if det == c else "MISMATCH"
            print(f"  {str(lam):<12} {show(c):<40} {mark}")
    N = 7
    for parity in ("even", "odd"):
        v = pieri_det(F, EXAMPLE_LAMBDA, EXAMPLE_MU, parity, N)
        branch = "long" if v == example_product("long", N) else "short" if v == example_product("short", N) else "neither"
        print(f"example, {parity} n: matches the {branch} product; z^5 coefficient {show(v.coeffs[5])}")


if __name__ == "__main__":
    main()
