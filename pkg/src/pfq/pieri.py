"""Modified Pieri coefficients c^lambda_{mu,r}: products P^F_mu q_r expanded
in the P^F basis, their generating functions in z, and the factorial and
classical closed forms."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from gmpy2 import mpq

from .arith import SparsePoly, TruncSeries, det, series_invert
from .errors import NotContained
from .kernels import xvars
from .partitions import (HAS_BLOCK, StrictPartition, as_partition, connected_components,
                         contains, enumerate_strict, has_block, skew_cells, strict_of_weight,
                         strip_decompose)
from .pfunc import _parts, dual_p, expand_in_basis, nimmo_p
from .report import Report
from .sequences import AdmissibleSeq, make_sequence, symbolic_factorial, to_f_basis

Z = "z"
PARITIES = ("even", "odd")


def _parity(p) -> int:
    if p in ("even", 0):
        return 0
    if p in ("odd", 1):
        return 1
    raise ValueError(f"parity must be 'even' or 'odd', got {p!r}")


def _simplify(c):
    return c.constant_term() if isinstance(c, SparsePoly) and c.is_constant() else c


@dataclass(frozen=True)
class BTable:
    """b^s_r(z) for r <= rmax, s <= rmax + order, truncated at z-order ``order``."""

    F: AdmissibleSeq
    rmax: int
    order: int
    entries: tuple

    def __call__(self, s: int, r: int) -> TruncSeries:
        if r > self.rmax:
            raise IndexError(f"b table built for r <= {self.rmax}")
        row = self.entries[r]
        if s < len(row):
            return row[s]
        return TruncSeries(Z, self.order)


@lru_cache(maxsize=None)
def b_table(F: AdmissibleSeq, rmax: int, N: int) -> BTable:
    """Expand f_r(u) (1 + uz)/(1 - uz) = sum_s b^s_r(z) f_s(u) to z-order N."""
    u = SparsePoly.var("u")
    entries = []
    for r in range(rmax + 1):
        fr = F.f(r)
        width = r + N + 1
        cols = [[mpq(0)] * (N + 1) for _ in range(width)]
        cols[r][0] = mpq(1)
        for k in range(1, N + 1):
            for s, c in enumerate(to_f_basis(fr * u ** k * 2, F)):
                if s < width:
                    cols[s][k] = _simplify(c)
        entries.append(tuple(TruncSeries(Z, N, c) for c in cols))
    return BTable(F, rmax, N, tuple(entries))


def _zero(N: int) -> TruncSeries:
    return TruncSeries(Z, N)


def _one(N: int) -> TruncSeries:
    return TruncSeries.constant(1, Z, N)


def b_det(table: BTable, alpha, beta) -> TruncSeries:
    """det (b^{alpha_i}_{beta_j})."""
    N = table.order
    rows = [[table(a, b) for b in beta] for a in alpha]
    return det(rows, one=_one(N), zero=_zero(N))


def pieri_case(lam, mu, parity) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """The padded pair (alpha, beta) whose B-determinant gives c^lambda_mu(z),
    or None when the coefficient vanishes. ``parity`` is that of n."""
    lam, mu = _parts(lam), _parts(mu)
    l, m = len(lam), len(mu)
    even = (_parity(parity) + m) % 2 == 0
    if even:
        if l == m:
            return lam, mu
        if l == m - 1:
            return lam + (0,), mu
        if l == m + 1:
            return lam, mu + (0,)
    else:
        if l == m:
            return lam + (0,), mu + (0,)
        if l == m + 1:
            return lam, mu + (0,)
    return None


def pieri_det(F: AdmissibleSeq, lam, mu, parity, N: int) -> TruncSeries:
    """c^lambda_mu(z) = sum_r c^lambda_{mu,r} z^r to order N, by the B-determinant."""
    case = pieri_case(lam, mu, parity)
    if case is None:
        return _zero(N)
    alpha, beta = case
    rmax = max(beta, default=0)
    return b_det(b_table(F, rmax, N), alpha, beta)


def q_r(r: int, xs) -> SparsePoly:
    """Classical Q_(r)(x), the one-row dual for the monomial sequence."""
    if r == 0:
        return SparsePoly.one(tuple(xs))
    return dual_p(make_sequence("monomial"), (r,), tuple(xs), r)


def pieri_direct(F: AdmissibleSeq, mu, r: int, n: int) -> dict[StrictPartition, object]:
    """Coefficients of P^F_mu q_r in the basis P^F_lambda (l(lambda) <= n)."""
    xs = xvars(n)
    prod = nimmo_p(F, mu, xs) * q_r(r, xs)
    return expand_in_basis(prod, F, xs)


def pieri_check(F: AdmissibleSeq, mu, r: int, n: int) -> Report:
    """pieri_det against pieri_direct in n variables, for every lambda with
    l(lambda) <= n and |lambda| <= |mu| + r."""
    mu = as_partition(mu)
    rep = Report(f"pieri {F} mu={mu} r={r} n={n}")
    direct = pieri_direct(F, mu, r, n)
    parity = n % 2
    for lam in enumerate_strict(mu.weight + r, n):
        c = pieri_det(F, lam, mu, parity, r).coeffs[r]
        got = direct.get(lam, mpq(0))
        rep.check(f"lambda={lam}", c == got, det=str(c), direct=str(got))
    return rep


# factorial closed form

def _geom_inv(a, N: int) -> TruncSeries:
    """1 / (1 - a z)."""
    return series_invert(TruncSeries(Z, N, [1, -a]))


def _a(F: AdmissibleSeq, i: int):
    return F.a(i)


def fac_pieri_product(lam, mu, parity, N: int, F: AdmissibleSeq | None = None) -> TruncSeries:
    """Border-strip product formula for factorial sequences."""
    F = symbolic_factorial() if F is None else F
    lam, mu = as_partition(lam), as_partition(mu)
    try:
        dec = strip_decompose(lam, mu)
    except NotContained:
        return _zero(N)
    if dec == HAS_BLOCK:
        return _zero(N)
    m = mu.length
    top = m if (_parity(parity) + m) % 2 == 0 else m + 1
    out = _one(N)
    for k in range(1, top + 1):
        if lam[k - 1] == mu[k - 1]:
            a = _a(F, mu[k - 1])
            out = out * TruncSeries(Z, N, [1, a]) * _geom_inv(a, N)
    for lo, hi in dec.strips:
        top_part, bottom = lam[lo - 1], mu[hi - 1]
        e = top_part - bottom
        term = TruncSeries(Z, N, [0] * e + [2]) if e <= N else _zero(N)
        for j in range(bottom, top_part + 1):
            term = term * _geom_inv(_a(F, j), N)
        out = out * term
    return out


def fac_b_closed(F: AdmissibleSeq, s: int, r: int, N: int) -> TruncSeries:
    """b^s_r(z|a) for factorial F in closed form."""
    if s < r:
        return _zero(N)
    if s == r:
        a = F.a(r)
        return TruncSeries(Z, N, [1, a]) * _geom_inv(a, N)
    out = TruncSeries(Z, N, [0] * (s - r) + [2]) if s - r <= N else _zero(N)
    for j in range(r, s + 1):
        out = out * _geom_inv(F.a(j), N)
    return out


# classical rule

def morris_rule(mu, r: int) -> dict[StrictPartition, int]:
    """{lambda: 2^(number of connected components of S(lambda/mu))} over strict
    lambda containing mu with |lambda| = |mu| + r and no 2x2 block."""
    mu = as_partition(mu)
    out = {}
    for lam in enumerate_strict(mu.weight + r, mu.length + r):
        if lam.weight != mu.weight + r or not contains(lam, mu) or has_block(lam, mu):
            continue
        out[lam] = 2 ** len(connected_components(skew_cells(lam, mu)))
    return out


# a large example

EXAMPLE_LAMBDA = (8, 6, 4, 3, 2)
EXAMPLE_MU = (6, 5, 4, 2, 1)


def example_product(branch: str, N: int) -> TruncSeries:
    """The two product expressions for c^{(8,6,4,3,2)}_{(6,5,4,2,1)}(z|a): without
    the (1 + a_0 z)/(1 - a_0 z) factor (``branch='short'``) and with it
    (``branch='long'``)."""
    F = symbolic_factorial()
    a = F.a
    out = TruncSeries(Z, N, [1, a(4)]) * _geom_inv(a(4), N)
    out = out * TruncSeries(Z, N, [0, 0, 0, 2])
    for i in range(5, 9):
        out = out * _geom_inv(a(i), N)
    out = out * TruncSeries(Z, N, [0, 0, 2])
    for i in range(1, 4):
        out = out * _geom_inv(a(i), N)
    if branch == "long":
        out = out * TruncSeries(Z, N, [1, a(0)]) * _geom_inv(a(0), N)
    return out


# positivity

def coefficient_signs(c) -> tuple[int, int]:
    """(number of positive, number of negative) monomial coefficients."""
    if isinstance(c, SparsePoly):
        vals = list(c.terms().values())
    else:
        vals = [c] if c else []
    return sum(1 for v in vals if v > 0), sum(1 for v in vals if v < 0)


def signs_report(F: AdmissibleSeq | None = None, max_mu: int = 4, rmax: int = 4) -> dict:
    """Sign census of the a-monomial coefficients of c^lambda_{mu,r}(a) over
    |mu| <= max_mu, r <= rmax, both parities. Data only."""
    F = symbolic_factorial() if F is None else F
    rows = []
    negatives = 0
    for mu in enumerate_strict(max_mu, max_mu):
        for r in range(1, rmax + 1):
            for lam in enumerate_strict(mu.weight + r, mu.length + 1):
                if not contains(lam, mu):
                    continue
                for par in PARITIES:
                    c = fac_pieri_product(lam, mu, par, r, F).coeffs[r]
                    pos, neg = coefficient_signs(c)
                    if pos or neg:
                        rows.append({"lambda": str(lam), "mu": str(mu), "r": r, "parity": par,
                                     "positive": pos, "negative": neg})
                    negatives += neg
    return {"entries": len(rows), "negative_terms": negatives, "rows": rows}


def _minus_b(bound: int) -> AdmissibleSeq:
    return AdmissibleSeq("factorial", tuple(-SparsePoly.var(f"b{i}") for i in range(bound)))


def product_expansion(mu, nu, n: int, second: str = "classical") -> dict[StrictPartition, object]:
    """Coefficients of P_mu(x|a) P_nu(x|.) in the basis P_lambda(x|a), with
    the second factor classical (``'classical'``) or with parameters -b
    (``'minus-b'``)."""
    F = symbolic_factorial()
    xs = xvars(n)
    nu = _parts(nu)
    G = make_sequence("monomial") if second == "classical" else _minus_b(max(nu, default=0) + n)
    return expand_in_basis(nimmo_p(F, mu, xs) * nimmo_p(G, nu, xs), F, xs)


def conjecture_spot_check(pairs, n: int, second: str = "classical") -> list[dict]:
    """Sign census of the structure constants of product_expansion. Data only."""
    out = []
    for mu, nu in pairs:
        for lam, c in sorted(product_expansion(mu, nu, n, second).items(), key=lambda t: t[0].parts):
            pos, neg = coefficient_signs(c)
            out.append({"mu": str(as_partition(mu)), "nu": str(as_partition(nu)), "lambda": str(lam),
                        "positive": pos, "negative": neg})
    return out


# suites

def pieri_cross_check(F: AdmissibleSeq, max_mu: int = 4, rmax: int = 3) -> Report:
    """pieri_det against pieri_direct, realizing each parity with
    n = l(mu) + 1 and n = l(mu) + 2. Only l(lambda) <= l(mu) + 1 can carry a
    nonzero coefficient, so these n see the whole expansion."""
    rep = Report(f"pieri cross-check {F}")
    for mu in enumerate_strict(max_mu, max_mu):
        for r in range(rmax + 1):
            for n in (mu.length + 1, mu.length + 2):
                rep.extend(pieri_check(F, mu, r, n))
    return rep


def factorial_pieri_check(max_weight: int = 8, N: int | None = None) -> Report:
    """fac_pieri_product against pieri_det for symbolic a, both parities."""
    F = symbolic_factorial()
    rep = Report("factorial Pieri product")
    for lam in enumerate_strict(max_weight, max_weight):
        for mu in enumerate_strict(lam.weight, lam.length):
            order = lam.weight - mu.weight if N is None else N
            for par in PARITIES:
                rep.check(f"{lam}/{mu} {par}",
                          fac_pieri_product(lam, mu, par, order, F) == pieri_det(F, lam, mu, par, order))
    return rep


def factorial_b_check(rmax: int = 5, smax: int = 8, N: int = 5) -> Report:
    F = symbolic_factorial()
    rep = Report("factorial b coefficients")
    for r in range(rmax + 1):
        table = b_table(F, r, N)
        for s in range(smax + 1):
            rep.check(f"b^{s}_{r}", table(s, r) == fac_b_closed(F, s, r, N))
    return rep


def example_check(N: int = 8) -> Report:
    """The example reproduces with the a_0 factor for even n and without it for odd n."""
    F = symbolic_factorial()
    rep = Report("Pieri example")
    for par, branch in (("even", "long"), ("odd", "short")):
        v = pieri_det(F, EXAMPLE_LAMBDA, EXAMPLE_MU, par, N)
        rep.check(f"{par} n, determinant", v == example_product(branch, N))
        rep.check(f"{par} n, product", fac_pieri_product(EXAMPLE_LAMBDA, EXAMPLE_MU, par, N, F) == v)
    return rep


def morris_check(max_mu: int = 4, rmax: int = 4) -> Report:
    """morris_rule against the factorial product at a = 0 (both parities)."""
    F = make_sequence("factorial", ("0",), cycle=True)
    rep = Report("Morris rule")
    for mu in enumerate_strict(max_mu, max_mu):
        for r in range(1, rmax + 1):
            rule = morris_rule(mu, r)
            for lam in strict_of_weight(mu.weight + r, mu.length + r):
                for par in PARITIES:
                    c = fac_pieri_product(lam, mu, par, r, F).coeffs[r]
                    rep.check(f"{lam}/{mu} {par}", c == rule.get(lam, 0), product=str(c))
    return rep


def ctf_padding_check(F: AdmissibleSeq, max_weight: int = 5, N: int = 5) -> Report:
    """For constant-term-free F: det B^{lam0}_{mu0} = det B^lam_mu and det B^{lam0}_mu = 0."""
    rep = Report(f"constant-term-free Pieri {F}")
    for lam in enumerate_strict(max_weight, max_weight):
        for mu in enumerate_strict(max_weight, max_weight):
            table = b_table(F, max(mu.parts, default=0), N)
            if lam.length == mu.length:
                rep.check(f"{lam}/{mu} padded",
                          b_det(table, lam.parts + (0,), mu.parts + (0,)) == b_det(table, lam.parts, mu.parts))
            if lam.length + 1 == mu.length:
                rep.check(f"{lam}/{mu} short", not b_det(table, lam.parts + (0,), mu.parts))
    return rep
