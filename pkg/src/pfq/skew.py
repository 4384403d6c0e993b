"""Skew P-functions: the coefficients R_{r/k}, the Pfaffian definition with
its four parity cases, branching, and single-variable determinant forms."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Sequence

from gmpy2 import mpq

from .arith import SparsePoly, det
from .kernels import xvars
from .partitions import StrictPartition, as_partition, contains, enumerate_strict
from .pfaffian import SkewMatrix, pfaffian
from .pfunc import _names, _parts, _poly, nimmo_p, one_row, two_row
from .report import Report
from .sequences import AdmissibleSeq, to_f_basis

# auxiliary variable for the expansion of P_(r)(x, y) in the f-basis of y
_Y = "ybranch"


def r_coeffs(F: AdmissibleSeq, r: int, n) -> tuple[SparsePoly, ...]:
    """All R_{r/k}(x), k = 0..r, from one f-basis expansion of P_(r)(x, y)."""
    return _r_coeffs(F, r, _names(n))


@lru_cache(maxsize=None)
def _r_coeffs(F: AdmissibleSeq, r: int, xs: tuple[str, ...]) -> tuple[SparsePoly, ...]:
    if r == 0:
        return (SparsePoly.one(xs),)
    p = one_row(F, r, xs + (_Y,))
    return tuple(_poly(c, xs) for c in to_f_basis(p, F, _Y))


def r_coeff(F: AdmissibleSeq, r: int, k: int, n) -> SparsePoly:
    xs = _names(n)
    cs = _r_coeffs(F, r, xs)
    return cs[k] if k < len(cs) else SparsePoly.zero(xs)


def m_matrix(F: AdmissibleSeq, alpha: Sequence[int], beta: Sequence[int], xs) -> list[list[SparsePoly]]:
    """M_{alpha/beta} with columns in reversed beta order."""
    s = len(beta)
    return [[r_coeff(F, a, beta[s - 1 - j], xs) for j in range(s)] for a in alpha]


def skew_p(F: AdmissibleSeq, lam, mu, p: int, n) -> SparsePoly:
    """P_{lambda/mu, p}(x); only the parity of p matters."""
    return _skew(F, _parts(lam), _parts(mu), p % 2, _names(n))


@lru_cache(maxsize=None)
def _skew(F, lam: tuple[int, ...], mu: tuple[int, ...], p: int, xs: tuple[str, ...]) -> SparsePoly:
    alpha = lam if len(lam) % 2 == p else lam + (0,)
    beta = mu if len(mu) % 2 == p else mu + (0,)
    r, s = len(alpha), len(beta)
    up = {}
    for i in range(r):
        for j in range(i + 1, r):
            up[(i, j)] = two_row(F, alpha[i], alpha[j], xs)
    M = m_matrix(F, alpha, beta, xs)
    for i in range(r):
        for j in range(s):
            up[(i, r + j)] = M[i][j]
    return _poly(pfaffian(SkewMatrix(r + s, up)), xs)


def branching_check(F: AdmissibleSeq, lam, n: int, p: int) -> bool:
    """P_lambda(x, y) = sum_mu P_{lambda/mu, p}(x) P_mu(y)."""
    lam = _parts(lam)
    xs, ys = xvars(n), xvars(p, "y")
    total = SparsePoly.zero(xs + ys)
    for mu in enumerate_strict(sum(lam), p):
        total = total + skew_p(F, lam, mu, p, xs) * nimmo_p(F, mu, ys)
    return total == nimmo_p(F, lam, xs + ys)


def r_det(F: AdmissibleSeq, lam, mu, xs, last_column_p: bool = False) -> SparsePoly:
    """det (R_{lambda_i/mu_j}) over l(lambda) x l(lambda), mu padded with zeros.

    With ``last_column_p`` the padded zero column holds P_(lambda_i)(x)
    instead of R_{lambda_i/0}(x).
    """
    lam, mu = _parts(lam), _parts(mu)
    l = len(lam)
    pad = l - len(mu)
    mu = mu + (0,) * pad
    rows = []
    for a in lam:
        row = [r_coeff(F, a, b, xs) for b in mu]
        if last_column_p and pad:
            row[-1] = one_row(F, a, xs)
        rows.append(row)
    return _poly(det(rows, one=SparsePoly.one(), zero=SparsePoly.zero()), xs)


def skew_single_var(F: AdmissibleSeq, lam, mu, p: int, x: str = "x1") -> SparsePoly:
    """P_{lambda/mu, p}(x) for one variable by the determinant forms.

    Constant-term-free sequences: det R when l(lambda) - l(mu) <= 1, else 0.
    Factorial sequences: det R when l(mu) is l(lambda) or l(lambda) - 1, else 0;
    when l(lambda) is odd relative to p and l(mu) is not, the padded column
    carries P_(lambda_i)(x) rather than R_{lambda_i/0}(x) (the two agree when
    a_0 = 0). Other sequences fall back to the Pfaffian definition.
    """
    lam, mu = _parts(lam), _parts(mu)
    xs = (x,)
    l, m = len(lam), len(mu)
    if not contains(lam, mu):
        return SparsePoly.zero(xs)
    if F.constant_term_free:
        return r_det(F, lam, mu, xs) if l - m <= 1 else SparsePoly.zero(xs)
    if F.kind == "factorial":
        if m not in (l, l - 1):
            return SparsePoly.zero(xs)
        return r_det(F, lam, mu, xs, last_column_p=(l % 2 != p % 2 and m % 2 == p % 2))
    return skew_p(F, lam, mu, p, xs)


# factorial closed forms

def _fac(params) -> AdmissibleSeq:
    return AdmissibleSeq("factorial", tuple(params))


def factorial_r_closed_form(F: AdmissibleSeq, r: int, k: int, xs) -> SparsePoly:
    """R_{r/k}(x|a) as a one-row factorial P-function with shifted parameters.

    For 1 <= k <= r - 1 the value is 2 P_(r-k)(x|0, a_{k+1}, ..., a_{r-1});
    the factor 2 is the Q/P normalization of the y^k coefficient.
    """
    xs = _names(xs)
    if k > r:
        return SparsePoly.zero(xs)
    if k == r:
        return SparsePoly.one(xs)
    if k == 0:
        return one_row(_fac([-_sym(F.a(0))] + [F.a(i) for i in range(1, r)]), r, xs)
    return one_row(_fac([0] + [F.a(i) for i in range(k + 1, r)]), r - k, xs) * 2


def _sym(a):
    return a if isinstance(a, SparsePoly) else SparsePoly.const(a)


def factorial_single_var_r(F: AdmissibleSeq, r: int, k: int, x: str = "x1") -> SparsePoly:
    """R_{r/k}(x|a) for one variable: (x + a_0) prod_{i=1}^{r-1} (x - a_i) at
    k = 0 and 2x prod_{i=k+1}^{r-1} (x - a_i) for 1 <= k <= r - 1."""
    X = SparsePoly.var(x)
    if k > r:
        return SparsePoly.zero((x,))
    if k == r:
        return SparsePoly.one((x,))
    out = X + F.a(0) if k == 0 else X * 2
    for i in range(k + 1, r):
        out = out * (X - F.a(i))
    return out


def factorial_r_check(F: AdmissibleSeq, rmax: int, n: int) -> Report:
    rep = Report(f"factorial R closed forms {F} n={n}")
    xs = xvars(n)
    for r in range(rmax + 1):
        for k in range(r + 2):
            rep.check(f"R_{r}/{k}", r_coeff(F, r, k, xs) == factorial_r_closed_form(F, r, k, xs))
            if n == 1:
                rep.check(f"R_{r}/{k} single variable",
                          r_coeff(F, r, k, xs) == factorial_single_var_r(F, r, k, xs[0]))
    return rep


# elementary symmetric relations

def elementary(p: int, vars_: Sequence[str]) -> SparsePoly:
    if p < 0 or p > len(vars_):
        return SparsePoly.zero(tuple(vars_))
    out = SparsePoly.zero(tuple(vars_))
    for I in combinations(vars_, p):
        t = SparsePoly.one()
        for v in I:
            t = t * SparsePoly.var(v)
        out = out + t
    return out


def rel_e_check(r: int) -> bool:
    """The two splitting relations for e_j(x_1..x_r) at every k, l >= 1."""
    xs = xvars(r)
    ok = True
    for k in range(1, r + 1):
        for l in range(1, r + 1):
            lhs = SparsePoly.zero(xs)
            for m in range(1, r):
                lhs = lhs + elementary(m - k, xs[:m]) * elementary(r - m - l, xs[m + 1:])
            ok &= lhs == elementary(r - k - l, xs)
    neg = {xs[0]: -SparsePoly.var(xs[0])} if r else {}
    for l in range(1, r + 1):
        lhs = SparsePoly.zero(xs)
        for m in range(1, r):
            lhs = lhs + elementary(m, xs[:m]) * elementary(r - m - l, xs[m + 1:]) * 2
        flipped = elementary(r - l, xs).subs(neg) if r else elementary(r - l, xs)
        ok &= lhs + flipped == elementary(r - l, xs)
    return bool(ok)


def p_independence_check(F: AdmissibleSeq, max_weight: int, n: int) -> bool:
    """For constant-term-free F, P_{lambda/mu, p} does not depend on p."""
    xs = xvars(n)
    for lam in enumerate_strict(max_weight, max_weight):
        for mu in enumerate_strict(lam.weight, lam.length):
            if skew_p(F, lam, mu, 0, xs) != skew_p(F, lam, mu, 1, xs):
                return False
    return True
