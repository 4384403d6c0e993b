"""Generalized P-functions: Nimmo-type Pfaffian, Hall-Littlewood sum at t = -1,
Schur-type Pfaffian of two-row values, and the dual functions."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Sequence

from gmpy2 import mpq

from .arith import SparsePoly, exact_divide, rat
from .errors import OrderTooLow, SingularBasis, TooManyVariables
from .kernels import delta_divisor, xvars
from .partitions import StrictPartition, as_partition, contains, enumerate_strict
from .pfaffian import SkewMatrix, pfaffian
from .report import Report
from .sequences import AdmissibleSeq, dual_solve, to_f_basis
from .arith import det as det_expand

ROUTES = ("nimmo", "hl", "schur")
HL_MAX_VARS = 8


def _parts(lam) -> tuple[int, ...]:
    return as_partition(lam).parts


def _names(n_or_names) -> tuple[str, ...]:
    if isinstance(n_or_names, int):
        return xvars(n_or_names)
    return tuple(n_or_names)


def _v(name: str) -> SparsePoly:
    return SparsePoly.var(name)


def _row_scale(xs: Sequence[str]) -> list[SparsePoly]:
    """d_i = prod_{k != i} (x_i + x_k); clears row i of A(x)."""
    out = []
    for i, a in enumerate(xs):
        d = SparsePoly.one()
        for k, b in enumerate(xs):
            if k != i:
                d = d * (_v(a) + _v(b))
        out.append(d)
    return out


def _scaled_a(xs: Sequence[str], d: list[SparsePoly]) -> dict[tuple[int, int], SparsePoly]:
    """d_i d_j (x_j - x_i)/(x_j + x_i), computed without division."""
    up = {}
    n = len(xs)
    for i in range(n):
        for j in range(i + 1, n):
            rest = SparsePoly.one()
            for k in range(n):
                if k != i and k != j:
                    rest = rest * (_v(xs[i]) + _v(xs[k])) * (_v(xs[j]) + _v(xs[k]))
            up[(i, j)] = (_v(xs[j]) - _v(xs[i])) * (_v(xs[i]) + _v(xs[j])) * rest
    return up


def nimmo_matrix(xs: Sequence[str], columns: Sequence[Sequence], d=None) -> SkewMatrix:
    """[[A(x), V], [-V^T, O]] with rows of the A block scaled by d_i.

    ``columns[j][i]`` is the (i, j) entry of V before scaling.
    """
    n = len(xs)
    d = _row_scale(xs) if d is None else d
    up = _scaled_a(xs, d)
    for j, col in enumerate(columns):
        for i in range(n):
            up[(i, n + j)] = col[i] * d[i]
    return SkewMatrix(n + len(columns), up)


def _alpha(lam: tuple[int, ...], n: int) -> tuple[int, ...]:
    return lam if (n + len(lam)) % 2 == 0 else lam + (0,)


def nimmo_p(F: AdmissibleSeq, lam, n) -> SparsePoly:
    """P^F_lambda in the variables x1..xn (or the given names)."""
    return _nimmo(F, _parts(lam), _names(n))


@lru_cache(maxsize=None)
def _nimmo(F: AdmissibleSeq, lam: tuple[int, ...], xs: tuple[str, ...]) -> SparsePoly:
    n = len(xs)
    if len(lam) > n:
        return SparsePoly.zero(xs)
    if n == 0:
        return SparsePoly.one()
    alpha = _alpha(lam, n)
    cols = [[F.f_in(a, x) for x in xs] for a in alpha]
    pf = pfaffian(nimmo_matrix(xs, cols))
    if not isinstance(pf, SparsePoly):
        pf = SparsePoly.const(pf, xs)
    return exact_divide(pf, delta_divisor(xs))


def hl_tminus1(F: AdmissibleSeq, lam, n) -> SparsePoly:
    """Sum over S_n / S_{n-l} of prod f_{lambda_i}(x_{u(i)}) prod (x_a + x_b)/(x_a - x_b)."""
    xs = _names(n)
    if len(xs) > HL_MAX_VARS:
        raise TooManyVariables(f"coset sum limited to n <= {HL_MAX_VARS}")
    return _hl(F, _parts(lam), xs)


@lru_cache(maxsize=None)
def _hl(F: AdmissibleSeq, lam: tuple[int, ...], xs: tuple[str, ...]) -> SparsePoly:
    n, l = len(xs), len(lam)
    if l > n:
        return SparsePoly.zero(xs)
    X = [_v(x) for x in xs]
    total = SparsePoly.zero(xs)
    # every term is put over V = prod_{a<b} (x_a - x_b)
    for heads in permutations(range(n), l):
        tail = [k for k in range(n) if k not in heads]
        order = list(heads) + tail
        num = SparsePoly.one(xs)
        sign = 1
        for i, h in enumerate(heads):
            num = num * F.f_in(lam[i], xs[h])
        for i in range(l):
            for j in range(i + 1, n):
                a, b = order[i], order[j]
                num = num * (X[a] + X[b])
                if a > b:
                    sign = -sign
        for a, b in combinations(sorted(tail), 2):
            num = num * (X[a] - X[b])
        total = total + (num if sign > 0 else -num)
    V = SparsePoly.one(xs)
    for a, b in combinations(range(n), 2):
        V = V * (X[a] - X[b])
    return exact_divide(total, V)


def two_row(F: AdmissibleSeq, r: int, s: int, n) -> SparsePoly:
    """P_(r,s) for any r, s >= 0 with the conventions P_(0) = 1,
    P_(s,r) = -P_(r,s), P_(r,0) = P_(r), P_(0,0) = 0."""
    xs = _names(n)
    if r == s:
        return SparsePoly.zero(xs)
    if r < s:
        return -two_row(F, s, r, xs)
    if s == 0:
        return one_row(F, r, xs)
    return _nimmo(F, (r, s), xs)


def one_row(F: AdmissibleSeq, r: int, n) -> SparsePoly:
    xs = _names(n)
    if r == 0:
        return SparsePoly.one(xs)
    return _nimmo(F, (r,), xs)


def schur_form_p(F: AdmissibleSeq, lam, n) -> SparsePoly:
    """Pf (P_(alpha_i, alpha_j)) with alpha = lambda or lambda with a zero appended."""
    xs = _names(n)
    lam = _parts(lam)
    alpha = lam if len(lam) % 2 == 0 else lam + (0,)
    if not alpha:
        return SparsePoly.one(xs)
    S = SkewMatrix.from_function(len(alpha), lambda i, j: two_row(F, alpha[i], alpha[j], xs))
    pf = pfaffian(S)
    return pf if isinstance(pf, SparsePoly) else SparsePoly.const(pf, xs)


def p_function(F: AdmissibleSeq, lam, n, route: str = "nimmo") -> SparsePoly:
    if route == "nimmo":
        return nimmo_p(F, lam, n)
    if route == "hl":
        return hl_tminus1(F, lam, n)
    if route == "schur":
        return schur_form_p(F, lam, n)
    raise ValueError(f"unknown route {route!r}")


def triple_route_check(F: AdmissibleSeq, max_weight: int, n: int) -> Report:
    rep = Report(f"triple-route {F} n={n}")
    for lam in enumerate_strict(max_weight, max_weight):
        a = nimmo_p(F, lam, n)
        b = hl_tminus1(F, lam, n) if len(lam) <= n else SparsePoly.zero()
        c = schur_form_p(F, lam, n)
        rep.check(f"{lam}", a == b == c, partition=str(lam))
    return rep


# dual functions

def _series_poly(F: AdmissibleSeq, d: int, x: str, N: int) -> SparsePoly:
    """fhat_d(x) truncated at x-degree N."""
    s = dual_solve(F, N).fhat(d)
    out = SparsePoly.zero((x,))
    X = _v(x)
    for k, c in enumerate(s.coeffs):
        if c:
            out = out + (X ** k) * c
    return out


def dual_p(F: AdmissibleSeq, lam, n, D: int) -> SparsePoly:
    """Dual P-function truncated at total degree D."""
    lam = _parts(lam)
    if D < sum(lam):
        raise OrderTooLow(f"degree cap {D} below |lambda| = {sum(lam)}")
    return _dual(F, lam, _names(n), D)


@lru_cache(maxsize=None)
def _dual(F: AdmissibleSeq, lam: tuple[int, ...], xs: tuple[str, ...], D: int) -> SparsePoly:
    n = len(xs)
    if len(lam) > n:
        return SparsePoly.zero(xs)
    if n == 0:
        return SparsePoly.one()
    h = n * (n - 1)
    cap = D + h
    alpha = _alpha(lam, n)
    cols = [[_series_poly(F, a, x, cap) for x in xs] for a in alpha]
    mul = lambda a, b: a.mul_trunc(b, xs, cap) if isinstance(a, SparsePoly) and isinstance(b, SparsePoly) else a * b
    pf = pfaffian(nimmo_matrix(xs, cols), mul=mul)
    if not isinstance(pf, SparsePoly):
        pf = SparsePoly.const(pf, xs)
    # the divisor is homogeneous of degree h, so each graded piece divides separately
    return exact_divide(pf.truncate(xs, cap), delta_divisor(xs))


def cauchy_kernel(xs: Sequence[str], ys: Sequence[str], D: int) -> SparsePoly:
    """prod (1 + x_i y_j)/(1 - x_i y_j) truncated at y-degree D."""
    out = SparsePoly.one(tuple(xs) + tuple(ys))
    for x in xs:
        for y in ys:
            t = _v(x) * _v(y)
            fac = SparsePoly.one()
            pw = SparsePoly.one()
            for _ in range(D):
                pw = pw * t
                fac = fac + pw * 2
            out = out.mul_trunc(fac, ys, D)
    return out


def cauchy_check(F: AdmissibleSeq, n: int, D: int, report: Report | None = None) -> bool:
    xs, ys = xvars(n), xvars(n, "y")
    lhs = SparsePoly.zero(xs + ys)
    for lam in enumerate_strict(D, n):
        lhs = lhs + nimmo_p(F, lam, xs) * dual_p(F, lam, ys, D)
    ok = lhs.truncate(ys, D) == cauchy_kernel(xs, ys, D)
    if report is not None:
        report.check(f"cauchy {F} n={n} D={D}", ok)
    return ok


# generating functions

def pi_series(xs: Sequence[str], z: str, N: int) -> SparsePoly:
    return cauchy_kernel(xs, (z,), N)


def _box(p: SparsePoly, caps: dict[str, int]) -> SparsePoly:
    for v, c in caps.items():
        p = p.truncate((v,), c) if v in p.vars else p
    return p


def gf_checks(F: AdmissibleSeq, n: int, N: int) -> Report:
    """One-row and two-row generating functions, as polynomials in z, w
    truncated at degree N in each of z and w."""
    rep = Report(f"generating-functions {F} n={n} N={N}")
    xs = xvars(n)
    fz = [_series_poly(F, r, "z", N) for r in range(N + 1)]
    fw = [_series_poly(F, r, "w", N) for r in range(N + 1)]
    pz, pw = pi_series(xs, "z", N), pi_series(xs, "w", N)
    lhs1 = SparsePoly.zero()
    for r in range(N + 1):
        lhs1 = lhs1 + one_row(F, r, xs) * fz[r]
    rhs1 = pz if n % 2 else pz + fz[0] - 1
    rep.check("one-row", _box(lhs1, {"z": N}) == rhs1)

    z, w = _v("z"), _v("w")
    lhs2 = SparsePoly.zero()
    for r in range(N + 1):
        for s in range(N + 1):
            if r != s:
                lhs2 = lhs2 + two_row(F, r, s, xs) * fz[r] * fw[s]
    caps = {"z": N, "w": N}
    prod = _box(pz * pw, caps)
    rhs2 = (z - w) * (prod - 1)
    if n % 2:
        rhs2 = rhs2 + (z + w) * ((fw[0] - 1) * pz - (fz[0] - 1) * pw)
    rep.check("two-row (times z + w)", _box((z + w) * lhs2, caps) == _box(rhs2, caps))
    return rep


# stability

def stability_check(F: AdmissibleSeq, lam, n: int) -> Report:
    lam = _parts(lam)
    rep = Report(f"stability {F} {StrictPartition(lam)} n={n}")
    xs = xvars(n)
    base = nimmo_p(F, lam, xs)
    # the coset sum is the fast route for the padded variable sets
    two = hl_tminus1(F, lam, xvars(n + 2)).subs({f"x{n + 1}": 0, f"x{n + 2}": 0})
    rep.check("two zero variables", two == base)
    one = hl_tminus1(F, lam, xvars(n + 1)).subs({f"x{n + 1}": 0})
    if F.constant_term_free:
        rep.check("one zero variable (constant-term free)", one == base)
    if len(lam) == 1:
        f0 = F.f(lam[0]).subs({"u": 0})
        rep.check("one-row shift by (-1)^n f_r(0)", one == base + (-1) ** n * f0)
    return rep


# basis change

def _coeff(c):
    return c.constant_term() if isinstance(c, SparsePoly) and c.is_constant() else c


def transition(F: AdmissibleSeq, G: AdmissibleSeq, kmax: int) -> list[list]:
    """a[k][j] with f_k = sum_j a[k][j] g_j."""
    out = []
    for k in range(kmax + 1):
        row = to_f_basis(F.f(k), G)
        out.append([_coeff(c) for c in row] + [mpq(0)] * (kmax + 1 - len(row)))
    return out


def change_basis(F: AdmissibleSeq, G: AdmissibleSeq, lam, n: int) -> dict[StrictPartition, object]:
    """a_{lambda,mu} with P^F_lambda = sum_mu a_{lambda,mu} P^G_mu, via
    determinants of the transition coefficients."""
    lam = _parts(lam)
    l = len(lam)
    if not lam:
        return {StrictPartition(()): mpq(1)}
    a = transition(F, G, lam[0])
    out = {}
    for mu in enumerate_strict(sum(lam), l):
        m = len(mu)
        if m == l or (m == l - 1 and (n + l) % 2 == 0):
            cols = list(mu.parts) + [0] * (l - m)
            c = det_expand([[a[li][mj] if mj <= li else mpq(0) for mj in cols] for li in lam])
            c = _coeff(c)
            if c:
                out[mu] = c
    return out


def expand_in_basis(target: SparsePoly, G: AdmissibleSeq, xs: Sequence[str]) -> dict[StrictPartition, object]:
    """Peel off leading monomials x^mu against P^G_mu (leading coefficient
    prod lc(g_{mu_i})) until nothing remains."""
    xs = tuple(xs)
    rest = target
    out: dict[StrictPartition, object] = {}
    while rest:
        parts = rest.split_by(xs)
        lead = max(parts, key=lambda e: (sum(e), e))
        shape = tuple(e for e in lead if e)
        if any(b >= a for a, b in zip(shape, shape[1:])) or list(lead[:len(shape)]) != list(shape):
            raise SingularBasis(f"leading exponent {lead} is not a strict partition")
        mu = StrictPartition(shape)
        lc = mpq(1)
        for k in shape:
            lc *= G.leading(k)
        c = _coeff(parts[lead] * (1 / lc))
        out[mu] = c
        rest = rest - nimmo_p(G, mu, xs) * c
    return out


def basis_change_check(F: AdmissibleSeq, G: AdmissibleSeq, lam, n: int) -> Report:
    lam = _parts(lam)
    rep = Report(f"basis-change {F} -> {G} {StrictPartition(lam)} n={n}")
    xs = xvars(n)
    coeffs = change_basis(F, G, lam, n)
    total = SparsePoly.zero(xs)
    for mu, c in coeffs.items():
        total = total + nimmo_p(G, mu, xs) * c
    rep.check("reproduces P^F", total == nimmo_p(F, lam, xs))
    rep.check("diagonal nonzero", bool(coeffs.get(StrictPartition(lam))))
    rep.check("supported on mu inside lambda", all(contains(lam, mu) for mu in coeffs))
    return rep


# generalized Schur functions

def gen_schur(F: AdmissibleSeq, mu: Sequence[int], n: int) -> SparsePoly:
    """det f_{mu_j + n - j}(x_i) / det f_{n - j}(x_i)."""
    xs = xvars(n)
    mu = tuple(mu) + (0,) * (n - len(mu))
    num = det_expand([[F.f_in(mu[j] + n - 1 - j, x) for j in range(n)] for x in xs],
                     one=SparsePoly.one(), zero=SparsePoly.zero())
    den = det_expand([[F.f_in(n - 1 - j, x) for j in range(n)] for x in xs],
                     one=SparsePoly.one(), zero=SparsePoly.zero())
    return exact_divide(_poly(num, xs), _poly(den, xs))


def _poly(p, xs) -> SparsePoly:
    return p if isinstance(p, SparsePoly) else SparsePoly.const(p, xs)


def staircase_check(F: AdmissibleSeq, mu: Sequence[int], n: int) -> bool:
    """P_{mu + delta_n} = prod_{i<j} (x_i + x_j) s_mu."""
    xs = xvars(n)
    mu = tuple(mu) + (0,) * (n - len(mu))
    lam = tuple(p for p in (mu[i] + n - 1 - i for i in range(n)) if p)
    pre = SparsePoly.one(xs)
    for a, b in combinations(xs, 2):
        pre = pre * (_v(a) + _v(b))
    return nimmo_p(F, lam, xs) == pre * gen_schur(F, mu, n)


# interpolation between the Nimmo and Schur forms

def ns_interpolation_check(F: AdmissibleSeq, lam, n: int, p: int) -> bool:
    """P_lambda(x, y) = Pf [[S(x), N(x|y)], [-N^T, A(y)]] / Delta(y)."""
    lam = _parts(lam)
    xs, ys = xvars(n), xvars(p, "y")
    alpha = lam if (len(lam) + p) % 2 == 0 else lam + (0,)
    r = len(alpha)
    d = _row_scale(ys)
    up = {}
    for i in range(r):
        for j in range(i + 1, r):
            up[(i, j)] = two_row(F, alpha[i], alpha[j], xs)
        for j, y in enumerate(ys):
            up[(i, r + j)] = one_row(F, alpha[i], xs + (y,)) * d[j]
    for (i, j), v in _scaled_a(ys, d).items():
        up[(r + i, r + j)] = v
    pf = pfaffian(SkewMatrix(r + p, up))
    rhs = exact_divide(_poly(pf, xs + ys), delta_divisor(ys)) if p else _poly(pf, xs)
    return rhs == nimmo_p(F, lam, xs + ys)


def symmetric(p: SparsePoly, xs: Sequence[str]) -> bool:
    xs = tuple(xs)
    for a, b in zip(xs, xs[1:]):
        if p.rename({a: b, b: a}) != p:
            return False
    return True


def basis_rank_check(F: AdmissibleSeq, n: int, D: int) -> bool:
    """The P^F_lambda with |lambda| <= D, l <= n are linearly independent:
    their leading monomials x^lambda are distinct and the peeling solver
    recovers each one as a unit vector."""
    xs = xvars(n)
    for lam in enumerate_strict(D, n):
        got = expand_in_basis(nimmo_p(F, lam, xs), F, xs)
        if got != {lam: mpq(1)}:
            return False
    return True
