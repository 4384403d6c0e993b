"""Sign census for factorial Pieri coefficients and small product expansions.

Prints one row per nonzero coefficient with its counts of positive and
negative a-monomials, followed by totals.

    python3 scripts/positivity_census.py [--max-mu 4] [--rmax 4] [--vars 3]
"""

import argparse

from pfq.pieri import conjecture_spot_check, signs_report


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-mu", type=int, default=4)
    ap.add_argument("--rmax", type=int, default=4)
    ap.add_argument("--vars", type=int, default=3)
    args = ap.parse_args()

    census = signs_report(None, args.max_mu, args.rmax)
    for row in census["rows"]:
        print(f"{row['lambda']:>12} / {row['mu']:<10} r={row['r']} {row['parity']:<4} "
              f"+{row['positive']} -{row['negative']}")
    print(f"Pieri coefficients: {census['entries']}, negative terms: {census['negative_terms']}")

    pairs = [((1,), (1,)), ((2,), (1,)), ((2, 1), (1,)), ((2, 1), (2,)), ((3,), (2,))]
    for second in ("classical", "minus-b"):
        rows = conjecture_spot_check(pairs, args.vars, second)
        neg = sum(r["negative"] for r in rows)
        print(f"products with {second} second factor: {len(rows)} coefficients, negative terms: {neg}")


if __name__ == "__main__":
    main()
