"""Independent oracle for frozen test values, written with sympy.

The f-sequences are recovered from their x + 1/x definitions by solving
for coefficients, P-functions come from symmetrizing over all of S_n with
sympy's rational-function cancellation, and Pieri coefficients are solved
as a linear system. Nothing from the pfq package is imported.

    python3 scripts/freeze_oracle.py  # writes tests/data/oracle.json
"""

from __future__ import annotations

import json
import math
from itertools import permutations
from pathlib import Path

import sympy as sp

OUT = Path(__file__).resolve().parent.parent / "tests" / "data" / "oracle.json"
u, x = sp.symbols("u x")
A = sp.symbols("a0:8")
MAX_D = 6


def reciprocal_to_u(h, d):
    """The polynomial f of degree d with f(x + 1/x) = h(x)."""
    cs = sp.symbols(f"c0:{d + 1}")
    f = sum(c * u ** k for k, c in enumerate(cs))
    diff = sp.expand((f.subs(u, x + 1 / x) - h) * x ** (d + 2))
    sol = sp.solve(sp.Poly(diff, x).coeffs(), cs, dict=True)[0]
    return sp.expand(f.subs(sol))


def f_seq(kind, d):
    if d == 0:
        return sp.Integer(1)
    if kind == "monomial":
        return u ** d
    if kind == "factorial":
        return sp.expand(sp.prod([u - A[i] for i in range(d)]))
    if kind == "typeB":
        h = sp.cancel((x ** d - x ** -d) * (x + 1) / (x - 1))
    elif kind == "typeC":
        h = sp.cancel((x ** d - x ** -d) * (x + 1 / x) / (x - 1 / x))
    else:
        h = x ** d + x ** -d
    return reciprocal_to_u(sp.expand(h), d)


def strict_partitions(max_weight):
    out = [()]

    def rec(prefix, left, top):
        for p in range(min(left, top), 0, -1):
            lam = prefix + (p,)
            out.append(lam)
            rec(lam, left - p, p - 1)

    rec((), max_weight, max_weight)
    return out


def p_function(kind, lam, n):
    xs = sp.symbols(f"x1:{n + 1}")
    l = len(lam)
    if l > n:
        return sp.Integer(0), xs
    total = 0
    for w in permutations(range(n)):
        y = [xs[k] for k in w]
        term = sp.prod([f_seq(kind, lam[i]).subs(u, y[i]) for i in range(l)])
        for i in range(l):
            for j in range(i + 1, n):
                term *= (y[i] + y[j]) / (y[i] - y[j])
        total += term
    return sp.expand(sp.cancel(sp.together(total) / math.factorial(n - l))), xs


def encode(expr, gens):
    gens = list(gens) + sorted((s for s in expr.free_symbols if s not in gens), key=str)
    terms = []
    if expr != 0 and not gens:
        c = sp.Rational(expr)
        terms.append([[], f"{c.p}/{c.q}"])
    elif expr != 0:
        for mon, c in sp.Poly(expr, *gens).terms():
            c = sp.Rational(c)
            terms.append([list(mon), f"{c.p}/{c.q}"])
    return {"vars": [str(g) for g in gens], "terms": terms}


def pieri_table(kind, mu, r, n):
    """c^lambda_{mu,r}: P_mu * Q_(r) = sum c P_lambda (classical Q_(r) = 2 P_(r))."""
    target, xs = p_function(kind, mu, n)
    q = 2 * p_function("monomial", (r,), n)[0] if r else 1
    target = sp.expand(target * q)
    weight = sum(mu) + r
    lams = [lam for lam in strict_partitions(weight) if len(lam) <= n]
    cs = sp.symbols(f"k0:{len(lams)}")
    expr = target - sum(c * p_function(kind, lam, n)[0] for c, lam in zip(cs, lams))
    eqs = sp.Poly(sp.expand(expr), *xs).coeffs()
    sol = sp.solve(eqs, cs, dict=True)[0]
    out = []
    for c, lam in zip(cs, lams):
        v = sp.expand(sol.get(c, c))
        if v != 0:
            out.append([list(lam), encode(v, [])])
    return out


def main():
    data = {"f": {}, "P": [], "pieri": []}
    for kind in ("typeB", "typeC", "typeD"):
        data["f"][kind] = [encode(f_seq(kind, d), [u]) for d in range(MAX_D + 1)]
    for kind in ("monomial", "typeB", "typeC", "typeD", "factorial"):
        for n in (1, 2, 3):
            for lam in strict_partitions(4):
                val, xs = p_function(kind, lam, n)
                data["P"].append({"seq": kind, "partition": list(lam), "n": n, "value": encode(val, xs)})
        print("P", kind, flush=True)
    for kind in ("monomial", "typeC", "factorial"):
        for mu in [(), (1,), (2,), (2, 1), (3,)]:
            for r in (1, 2):
                for n in (len(mu) + 1, len(mu) + 2):
                    data["pieri"].append({"seq": kind, "mu": list(mu), "r": r, "n": n,
                                          "coefficients": pieri_table(kind, mu, r, n)})
        print("pieri", kind, flush=True)
    OUT.write_text(json.dumps(data, separators=(",", ":")) + "\n")
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
