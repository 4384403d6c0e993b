"""Named verification suites. Each suite returns a Report; default bounds are
the acceptance bounds and can be lowered or raised through SuiteOptions."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from gmpy2 import mpq

from . import bcd, pieri, skew
from .kernels import schur_pf_checks, tilde_kernel_checks
from .partitions import enumerate_strict
from .pfaffian import (SkewMatrix, block_skew, cauchy_binet_pf, det_bareiss, laplace_pfaffian,
                       pfaffian, pfaffian_def, pfaffian_expand, sylvester_check)
from .pfunc import (basis_change_check, basis_rank_check, cauchy_check, gf_checks,
                    ns_interpolation_check, staircase_check, stability_check, triple_route_check)
from .report import Report
from .sequences import (biorthogonality_check, factorial_dual_check, factorial_dual_identities,
                        make_sequence, standard_sequences, symbolic_factorial)


@dataclass(frozen=True)
class SuiteOptions:
    """Overrides for suite bounds; None keeps the suite default."""

    max_weight: int | None = None
    vars: int | None = None
    order: int | None = None
    seed: int = 0

    def get(self, name: str, default: int) -> int:
        v = getattr(self, name)
        return default if v is None else v


@dataclass(frozen=True)
class Suite:
    name: str
    criterion: int
    description: str
    run: Callable[[SuiteOptions], Report]
    gating: bool = True


# random instances

def _rand_skew(rng: random.Random, dim: int, lo: int = -5, hi: int = 5) -> SkewMatrix:
    return SkewMatrix.from_function(dim, lambda i, j: mpq(rng.randint(lo, hi)))


def _rand_matrix(rng: random.Random, rows: int, cols: int) -> list[list]:
    return [[mpq(rng.randint(-4, 4)) for _ in range(cols)] for _ in range(rows)]


def _with_row(X: SkewMatrix, k: int, row) -> SkewMatrix:
    up = dict(X.upper)
    for j in range(X.dim):
        if j < k:
            up[(j, k)] = -row[j]
        elif j > k:
            up[(k, j)] = row[j]
    return SkewMatrix(X.dim, up)


def _perm_sign(p) -> int:
    inv = sum(1 for a in range(len(p)) for b in range(a + 1, len(p)) if p[a] > p[b])
    return -1 if inv % 2 else 1


def appendix_pfaffian(opts: SuiteOptions) -> Report:
    rep = Report("appendix-pfaffian")
    rng = random.Random(opts.seed)
    for t in range(200):
        dim = rng.choice((2, 4, 6, 8))
        X = _rand_skew(rng, dim)
        pf = pfaffian(X)
        rep.check(f"random {t} dim={dim}: definition", pf == pfaffian_def(X))
        rep.check(f"random {t} dim={dim}: Pf^2 = det", pf * pf == det_bareiss(X.rows()))
        perm = list(range(dim))
        rng.shuffle(perm)
        rep.check(f"random {t} dim={dim}: permutation sign", pfaffian(X.permuted(perm)) == _perm_sign(perm) * pf)
        k = rng.randrange(dim)
        a, b = mpq(rng.randint(-3, 3)), mpq(rng.randint(-3, 3))
        r1 = [mpq(rng.randint(-4, 4)) for _ in range(dim)]
        r2 = [mpq(rng.randint(-4, 4)) for _ in range(dim)]
        X1, X2 = _with_row(X, k, r1), _with_row(X, k, r2)
        X12 = _with_row(X, k, [a * u + b * v for u, v in zip(r1, r2)])
        rep.check(f"random {t} dim={dim}: multilinear in row {k}",
                  pfaffian(X12) == a * pfaffian(X1) + b * pfaffian(X2))
        if dim >= 4 and t % 4 == 0:
            rep.check(f"random {t} dim={dim}: expansion along every row",
                      all(pfaffian_expand(X, r) == pf for r in range(dim)))
            src, dst = rng.sample(range(dim), 2)
            c = mpq(rng.randint(-3, 3))
            rows = X.rows()
            E = [[mpq(int(i == j)) for j in range(dim)] for i in range(dim)]
            E[dst][src] = c
            Y = [[sum(E[i][p] * rows[p][q] * E[j][q] for p in range(dim) for q in range(dim))
                  for j in range(dim)] for i in range(dim)]
            rep.check(f"random {t} dim={dim}: row operation", pfaffian(SkewMatrix.from_rows(Y)) == pf)

    for n in range(1, 5):
        for p in range(0, 4):
            if n + p <= 6:
                rep.extend(schur_pf_checks(n, p), f"classical kernels n={n} p={p}: ")
    for n in range(1, 4):
        for p in range(0, 3):
            rep.extend(tilde_kernel_checks(n, p), f"x + 1/x kernels n={n} p={p}: ")

    for n, m in ((2, 2), (2, 4), (4, 2)):
        for t in range(5):
            X = _rand_skew(rng, n + m)
            while pfaffian(SkewMatrix.from_function(n, lambda i, j: X[i, j])) == 0:
                X = _rand_skew(rng, n + m)
            rep.check(f"Sylvester n={n} m={m} #{t}", sylvester_check(X, n, m))

    for t in range(100):
        m = rng.randint(1, 5)
        n = rng.choice([k for k in range(0, 6) if (m - k) % 2 == 0])
        Z = _rand_skew(rng, m)
        W = _rand_matrix(rng, m, n)
        rep.check(f"Laplace #{t} m={m} n={n}", pfaffian(block_skew(Z, W)) == laplace_pfaffian(Z, W))
    for t in range(100):
        m = rng.randint(0, 3)
        n = rng.choice([k for k in range(0, 4) if (m - k) % 2 == 0])
        l = rng.randint(0, 3)
        A, B = _rand_skew(rng, m), _rand_skew(rng, n)
        S, T = _rand_matrix(rng, m, l), _rand_matrix(rng, n, l)
        for variant in (1, 2):
            left, right = cauchy_binet_pf(A, B, S, T, variant)
            rep.check(f"Cauchy-Binet #{t} variant {variant} m={m} n={n} l={l}", left == right)
    return rep


def triple_route(opts: SuiteOptions) -> Report:
    rep = Report("triple-route")
    w, nmax = opts.get("max_weight", 6), opts.get("vars", 4)
    for F in standard_sequences():
        for n in range(1, nmax + 1):
            rep.extend(triple_route_check(F, w, n), f"{F} n={n} ")
    return rep


def cauchy(opts: SuiteOptions) -> Report:
    rep = Report("cauchy")
    N = opts.get("order", 8)
    for F in standard_sequences() + [symbolic_factorial()]:
        rep.check(f"{F}: biorthogonal to order {N}", biorthogonality_check(F, N))
    rep.check("factorial dual closed form, symbolic, order 6", factorial_dual_check(symbolic_factorial(), 6))
    rep.check("factorial dual closed form, cyclic, order 6", factorial_dual_check(standard_sequences()[1], 6))
    for r in range(1, 7):
        first, second = factorial_dual_identities(r, 7)
        rep.check(f"partial fractions r={r} (first)", first)
        rep.check(f"partial fractions r={r} (second)", second)
    n, D = opts.get("vars", 2), 4
    for F in (make_sequence("monomial"), symbolic_factorial()):
        rep.check(f"{F}: Cauchy identity n={n} D={D}", cauchy_check(F, n, D))
    return rep


def generating_functions(opts: SuiteOptions) -> Report:
    rep = Report("generating-functions")
    N, nmax = opts.get("order", 5), opts.get("vars", 3)
    for F in standard_sequences():
        for n in range(1, nmax + 1):
            rep.extend(gf_checks(F, n, N), f"{F} n={n} ")
    for X in bcd.TYPES:
        for n in range(1, min(nmax, 2) + 1):
            rep.extend(bcd.bcd_gf_checks(X, n, N), f"type {X} n={n} ")
    rep.check("phi - psi = 1", bcd.phi_minus_psi_check(N))
    return rep


def branching(opts: SuiteOptions) -> Report:
    rep = Report("branching")
    w = opts.get("max_weight", 5)
    for F in (make_sequence("monomial"), symbolic_factorial()):
        for n, p in ((1, 1), (2, 1), (2, 2), (1, 2)):
            for lam in enumerate_strict(w, n + p):
                rep.check(f"{F} {lam} n={n} p={p}", skew.branching_check(F, lam, n, p))
    return rep


def pieri_cross(opts: SuiteOptions) -> Report:
    rep = Report("pieri-cross")
    w = opts.get("max_weight", 4)
    for F in standard_sequences():
        rep.extend(pieri.pieri_cross_check(F, w, 3))
        if F.constant_term_free:
            rep.extend(pieri.ctf_padding_check(F), f"{F} ")
    rep.extend(pieri.factorial_pieri_check(8))
    rep.extend(pieri.factorial_b_check())
    rep.extend(pieri.example_check())
    rep.extend(pieri.morris_check(w, 4))
    return rep


def stability(opts: SuiteOptions) -> Report:
    rep = Report("stability")
    w, nmax = opts.get("max_weight", 5), opts.get("vars", 3)
    for F in standard_sequences():
        for n in range(1, nmax + 1):
            for lam in enumerate_strict(w, n):
                rep.extend(stability_check(F, lam, n), f"{F} {lam} n={n} ")
    return rep


def factorial_closed_forms(opts: SuiteOptions) -> Report:
    rep = Report("factorial-closed-forms")
    G = symbolic_factorial()
    for n in range(1, 4):
        rep.extend(skew.factorial_r_check(G, 5, n))
    w = opts.get("max_weight", 6)
    x = ("x1",)
    for lam in enumerate_strict(w, w):
        for mu in enumerate_strict(lam.weight, lam.length):
            for p in (0, 1):
                rep.check(f"single variable {lam}/{mu} p={p}",
                          skew.skew_single_var(G, lam, mu, p) == skew.skew_p(G, lam, mu, p, x))
    for r in range(1, 7):
        rep.check(f"elementary splitting r={r}", skew.rel_e_check(r))
    return rep


def bcd_suite(opts: SuiteOptions) -> Report:
    rep = Report("bcd")
    rep.extend(bcd.weyl_suite(opts.get("max_weight", 5), opts.get("vars", 3)))
    rep.extend(bcd.f_table_check())
    for X in bcd.TYPES:
        for n in range(1, 4):
            for lam in enumerate_strict(4, n):
                rep.check(f"type {X} {lam} n={n}: Schur-type Pfaffian", bcd.schur_pf_check(X, lam, n))
                rep.check(f"type {X} {lam} n={n}: symmetry", bcd.symmetry_check(bcd.bcd_q(X, lam, n)))
    return rep


def basis_change(opts: SuiteOptions) -> Report:
    rep = Report("basis-change")
    seqs = standard_sequences()
    n = opts.get("vars", 3)
    for F in seqs:
        for G in seqs:
            if F != G:
                for lam in enumerate_strict(opts.get("max_weight", 4), n):
                    rep.extend(basis_change_check(F, G, lam, n))
    for F in seqs:
        rep.check(f"{F}: P-functions span symmetric polynomials, n=2, degree 4", basis_rank_check(F, 2, 4))
        for mu in ((0,), (1,), (2, 0), (1, 1), (2, 1)):
            rep.check(f"{F}: staircase {mu}", staircase_check(F, mu, 2 if len(mu) < 2 else 3))
        for lam in enumerate_strict(4, 3):
            rep.check(f"{F}: interpolation {lam} n=2 p=1", ns_interpolation_check(F, lam, 2, 1))
    for F in seqs:
        if F.constant_term_free:
            rep.check(f"{F}: skew P does not depend on p", skew.p_independence_check(F, 4, 2))
    return rep


def positivity(opts: SuiteOptions) -> Report:
    """Data only: the report records sign counts and never fails."""
    rep = Report("positivity")
    census = pieri.signs_report(None, opts.get("max_weight", 4), 4)
    rep.check("census", True, entries=census["entries"], negative_terms=census["negative_terms"])
    pairs = [((1,), (1,)), ((2,), (1,)), ((2, 1), (1,)), ((2, 1), (2,)), ((3,), (2,))]
    for second in ("classical", "minus-b"):
        rows = pieri.conjecture_spot_check(pairs, 3, second)
        neg = sum(r["negative"] for r in rows)
        rep.check(f"product expansions ({second})", True, entries=len(rows), negative_terms=neg)
    return rep


SUITES: dict[str, Suite] = {s.name: s for s in (
    Suite("appendix-pfaffian", 1, "Pfaffian algebra, kernel evaluations, Sylvester, Laplace, Cauchy-Binet", appendix_pfaffian),
    Suite("triple-route", 2, "Nimmo Pfaffian = t = -1 coset sum = Schur-type Pfaffian", triple_route),
    Suite("cauchy", 3, "dual sequences, factorial dual closed form, Cauchy identity", cauchy),
    Suite("generating-functions", 4, "one- and two-row generating functions, types B/C/D", generating_functions),
    Suite("branching", 5, "P(x, y) = sum of skew P(x) P(y)", branching),
    Suite("pieri-cross", 6, "Pieri determinant, direct expansion, factorial and classical rules", pieri_cross),
    Suite("stability", 7, "setting variables to zero", stability),
    Suite("factorial-closed-forms", 8, "factorial R coefficients, one-variable skew determinants, e_j splitting", factorial_closed_forms),
    Suite("bcd", 9, "signed permutation oracle, f^X tables, Schur-type Pfaffian, Laurent symmetry", bcd_suite),
    Suite("positivity", 10, "sign census of factorial Pieri and product coefficients (report only)", positivity, gating=False),
    Suite("basis-change", 0, "basis change, spanning, staircase and interpolation formulas", basis_change),
)}


def run_suite(name: str, opts: SuiteOptions | None = None) -> Report:
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name].run(opts or SuiteOptions()).finish()
