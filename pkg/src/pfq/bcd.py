"""Type B, C and D Q-functions as symmetric Laurent polynomials, the signed
permutation oracle at t = -1, and their generating functions."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product

from gmpy2 import mpq

from .arith import SparsePoly, TruncSeries, series_invert
from .errors import NotReciprocal, TooManyVariables
from .factored import FactoredFn
from .kernels import xvars
from .partitions import StrictPartition, as_partition, enumerate_strict
from .pfaffian import SkewMatrix, pfaffian
from .pfunc import _parts, nimmo_p
from .report import Report
from .sequences import AdmissibleSeq, make_sequence

TYPES = ("B", "C", "D")
WEYL_MAX_VARS = 3


def sequence(X: str) -> AdmissibleSeq:
    if X not in TYPES:
        raise ValueError(f"type must be one of {TYPES}, got {X!r}")
    return make_sequence("type" + X)


def uvars(n: int) -> tuple[str, ...]:
    return xvars(n, "u")


def _x(name: str) -> SparsePoly:
    return SparsePoly.var(name)


def _inv(name: str) -> SparsePoly:
    return SparsePoly.var(name) ** -1


def u_to_laurent(p: SparsePoly, n: int) -> SparsePoly:
    """Substitute u_i = x_i + 1/x_i."""
    xs, us = xvars(n), uvars(n)
    return p.subs({u: _x(x) + _inv(x) for u, x in zip(us, xs)})


def laurent_to_u(p: SparsePoly, n: int) -> SparsePoly:
    """Write a Laurent polynomial invariant under each x_i -> 1/x_i in the
    u_i = x_i + 1/x_i, peeling off the top power of one variable at a time."""
    xs, us = xvars(n), uvars(n)
    return _to_u(p, list(zip(xs, us)))


def _to_u(p: SparsePoly, pairs) -> SparsePoly:
    if not pairs:
        if p.used_vars():
            raise NotReciprocal(f"leftover variables {p.used_vars()}")
        return SparsePoly.const(p.constant_term()) if p else SparsePoly.zero()
    (x, u), rest = pairs[0], pairs[1:]
    parts = p.coeffs_in(x)
    out = SparsePoly.zero()
    U = _x(u)
    while parts:
        d = max(parts)
        if d < 0 or -d not in parts or parts[-d] != parts[d]:
            raise NotReciprocal(f"not invariant under {x} -> 1/{x}")
        c = parts[d]
        out = out + U ** d * _to_u(c, rest)
        # subtract c (x + 1/x)^d
        t = _x(x) + _inv(x)
        for e, cc in (t ** d).coeffs_in(x).items():
            left = parts.get(e, SparsePoly.zero()) - c * cc
            if left:
                parts[e] = left
            else:
                parts.pop(e, None)
    return out


@dataclass(frozen=True)
class BCDQFunction:
    """Q^X_lambda in u-variables and as a Laurent polynomial in x."""

    type: str
    lam: StrictPartition
    n: int
    value_u: SparsePoly
    value_laurent: SparsePoly

    def to_json(self) -> dict:
        return {"type": self.type, "partition": list(self.lam.parts), "n": self.n,
                "u": self.value_u.to_json(), "laurent": self.value_laurent.to_json()}


def bcd_q(X: str, lam, n: int) -> BCDQFunction:
    """Q^X_lambda = 2^l P^{F^X}_lambda(x + 1/x)."""
    lam = as_partition(lam)
    if lam.length > n:
        raise ValueError(f"length of {lam} exceeds {n}")
    value_u = nimmo_p(sequence(X), lam.parts, uvars(n)) * (2 ** lam.length)
    return BCDQFunction(X, lam, n, value_u, u_to_laurent(value_u, n))


def bcd_p(X: str, lam, n: int) -> SparsePoly:
    """P^X_lambda as a Laurent polynomial."""
    return u_to_laurent(nimmo_p(sequence(X), _parts(lam), uvars(n)), n)


# signed permutation oracle

def _ratio(num: SparsePoly, den: SparsePoly) -> tuple[SparsePoly, SparsePoly]:
    """Clear negative exponents of a Laurent quotient."""
    mins = {}
    for p in (num, den):
        for v, e in p.min_exponents().items():
            mins[v] = min(mins.get(v, 0), e)
    shift = {v: -e for v, e in mins.items() if e < 0}
    if not shift:
        return num.as_laurent(False), den.as_laurent(False)
    return num.shift(shift).compact().as_laurent(False), den.shift(shift).compact().as_laurent(False)


def _signed_perms(n: int, even: bool):
    for perm in permutations(range(n)):
        for signs in product((1, -1), repeat=n):
            if even and signs.count(-1) % 2:
                continue
            yield perm, signs


def _stabilizer_order(m: int, even: bool) -> int:
    out = 1
    for k in range(2, m + 1):
        out *= k
    out *= 2 ** m
    if even and m:
        out //= 2
    return out


def _term(X: str, lam: tuple[int, ...], image) -> tuple[SparsePoly, list]:
    """One summand after the signed permutation: returns the leading monomial
    and a list of (num, den) Laurent pairs. ``image[k]`` is the Laurent monomial
    replacing x_{k+1}, i.e. x_j or 1/x_j."""
    n = len(image)
    l = len(lam)
    factors = []
    mono = SparsePoly.one()
    for i in range(l):
        mono = mono * image[i] ** lam[i]
        xi = image[i]
        if X == "B":
            factors.append((xi + 1, xi - 1))
        elif X == "C":
            factors.append((xi * xi + 1, xi * xi - 1))
        for j in range(i + 1, n):
            xj = image[j]
            factors.append((xi + xj, xi - xj))
            factors.append((xi * xj + 1, xi * xj - 1))
    return mono, factors


def weyl_oracle(X: str, lam, n: int, flip_last: bool = False) -> SparsePoly:
    """The Hall-Littlewood coset sum at t = -1 over the signed permutations
    (even sign changes for type D), as a Laurent polynomial in x.

    The full group sum is divided by the order of the stabilizer of the
    leading monomial, which fixes every summand. With ``flip_last`` the last
    part is negated (type D, l(lambda) = n)."""
    if n > WEYL_MAX_VARS:
        raise TooManyVariables(f"signed permutation sum limited to {WEYL_MAX_VARS} variables")
    if X not in TYPES:
        raise ValueError(f"type must be one of {TYPES}, got {X!r}")
    return _weyl(X, _parts(lam), n, flip_last)


@lru_cache(maxsize=None)
def _weyl(X: str, lam: tuple[int, ...], n: int, flip_last: bool) -> SparsePoly:
    xs = xvars(n)
    if len(lam) > n:
        return SparsePoly.zero(xs)
    even = X == "D"
    total = FactoredFn(SparsePoly.zero(xs))
    shifts = []
    parts = []
    for perm, signs in _signed_perms(n, even):
        image = [_x(xs[perm[k]]) if signs[k] > 0 else _inv(xs[perm[k]]) for k in range(n)]
        if flip_last:
            image[n - 1] = image[n - 1] ** -1
        mono, factors = _term(X, lam, image)
        num, dens = SparsePoly.one(), []
        for a, b in factors:
            a, b = _ratio(a, b)
            num = num * a
            dens.append(b)
        shifts.append(mono)
        parts.append((num, dens))
    # a common monomial makes every summand polynomial
    lift = {x: 0 for x in xs}
    for mono in shifts:
        for v, e in mono.min_exponents().items():
            lift[v] = max(lift[v], -e)
    for mono, (num, dens) in zip(shifts, parts):
        m = mono.shift(lift).compact().as_laurent(False)
        total = total + FactoredFn(num * m, dens)
    poly = total.reduce().to_poly()
    out = poly.shift({v: -e for v, e in lift.items() if e})
    out = out * mpq(1, _stabilizer_order(n - len(lam), even))
    return out.with_vars(xs) if not out.laurent else out


def weyl_check(X: str, lam, n: int) -> bool:
    """The oracle against P^X_lambda; type D at l(lambda) = n uses the sum
    with the last part negated."""
    lam = _parts(lam)
    lhs = weyl_oracle(X, lam, n)
    if X == "D" and len(lam) == n and n:
        lhs = lhs + weyl_oracle(X, lam, n, flip_last=True)
    return lhs == bcd_p(X, lam, n)


def weyl_suite(max_weight: int = 5, nmax: int = 3) -> Report:
    rep = Report("signed permutation oracle")
    for X in TYPES:
        for n in range(1, nmax + 1):
            for lam in enumerate_strict(max_weight, n):
                rep.check(f"{X} {lam} n={n}", weyl_check(X, lam, n))
    return rep


# tables

F_TABLE = {
    "B": ((1,), (2, 1), (0, 2, 1), (-2, -1, 2, 1)),
    "C": ((1,), (0, 1), (0, 0, 1), (0, -1, 0, 1)),
    "D": ((1,), (0, 1), (-2, 0, 1), (0, -3, 0, 1)),
}


def f_table_check() -> Report:
    """Low-degree f^X_d(u) against the defining Laurent expressions and the table."""
    rep = Report("f^X tables")
    x = _x("x")
    for X in TYPES:
        F = sequence(X)
        for d, coeffs in enumerate(F_TABLE[X]):
            f = F.f(d)
            want = sum((SparsePoly.var("u") ** k * c for k, c in enumerate(coeffs)), SparsePoly.zero())
            rep.check(f"{X} f_{d} table", f == want)
            if d == 0:
                continue
            lhs = f.subs({"u": x + x ** -1})
            if X == "B":
                # (x^d - x^-d)(x + 1)/(x - 1), after clearing x^{1/2}
                ok = lhs * (x - 1) == (x ** d - x ** -d) * (x + 1)
            elif X == "C":
                ok = lhs * (x * x - 1) == (x ** d - x ** -d) * (x * x + 1)
            else:
                ok = lhs == x ** d + x ** -d
            rep.check(f"{X} f_{d} defining form", ok)
    return rep


# generating functions

def phi_psi(X: str, N: int, var: str = "z") -> tuple[TruncSeries, TruncSeries]:
    z = lambda cs: TruncSeries(var, N, cs)
    inv = series_invert(z([1, 0, 1]))
    if X == "B":
        return z([1, 2, 1]) * inv, z([0, 2]) * inv
    if X == "C":
        return z([1]), z([])
    if X == "D":
        return z([1, 0, -1]) * inv, z([0, 0, -2]) * inv
    raise ValueError(f"type must be one of {TYPES}, got {X!r}")


def _laurent_series(p: SparsePoly, var: str, N: int) -> TruncSeries:
    return TruncSeries.from_poly(p, var, N)


def pi_tilde_series(n: int, N: int, var: str = "z") -> TruncSeries:
    """prod_i (1 + x_i z)(1 + z/x_i) / ((1 - x_i z)(1 - z/x_i)) to order N."""
    out = TruncSeries.constant(1, var, N)
    for x in xvars(n):
        for y in (_x(x), _inv(x)):
            out = out * TruncSeries(var, N, [1, y]) * _geom(y, N, var)
    return out


def _geom(y, N: int, var: str) -> TruncSeries:
    # 1/(1 - y z) = sum y^k z^k
    return TruncSeries(var, N, [y ** k for k in range(N + 1)])


def gf_one_row_check(X: str, n: int, N: int) -> bool:
    """sum_r Q^X_(r) z^r = phi(z) Pi~_z(x) - (-1)^n psi(z)."""
    phi, psi = phi_psi(X, N)
    rhs = phi * pi_tilde_series(n, N) - psi * ((-1) ** n)
    lhs = TruncSeries("z", N, [bcd_q(X, (r,), n).value_laurent if r else SparsePoly.one()
                              for r in range(N + 1)])
    return lhs == rhs


def _q2(X: str, r: int, s: int, n: int) -> SparsePoly:
    """Q^X_(r,s) with the two-row conventions (Q_(r,0) = Q_(r), antisymmetry)."""
    if r == s:
        return SparsePoly.zero()
    if r < s:
        return -_q2(X, s, r, n)
    if s == 0:
        return bcd_q(X, (r,), n).value_laurent if r else SparsePoly.one()
    if n < 2:
        return SparsePoly.zero()
    return bcd_q(X, (r, s), n).value_laurent


def gf_two_row_check(X: str, n: int, N: int) -> bool:
    """The two-row generating function, after multiplying by (z + w)(1 + zw),
    compared at total degree <= N in z, w."""
    phi, psi = phi_psi(X, N)
    pi = pi_tilde_series(n, N)
    zw = ("z", "w")

    def bi(s: TruncSeries, v: str) -> SparsePoly:
        return s.to_poly().rename({"z": v}) if v != "z" else s.to_poly()

    def cap(p: SparsePoly) -> SparsePoly:
        return p.truncate(zw, N)

    Z, W = _x("z"), _x("w")
    phz, phw = bi(phi, "z"), bi(phi, "w")
    psz, psw = bi(psi, "z"), bi(psi, "w")
    piz, piw = bi(pi, "z"), bi(pi, "w")
    sign = (-1) ** n
    rhs = cap((Z - W) * (1 - Z * W) * cap(cap(phz * phw) * cap(piz * piw - 1)))
    rest = cap(sign * (cap(phz * psw * piz) - cap(phw * psz * piw)) + psz - psw)
    rhs = cap(rhs + cap((Z + W) * (1 + Z * W) * rest))
    lhs = SparsePoly.zero()
    for r in range(N + 1):
        for s in range(N + 1 - r):
            q = _q2(X, r, s, n)
            if q:
                lhs = lhs + q * Z ** r * W ** s
    lhs = cap((Z + W) * (1 + Z * W) * lhs)
    return lhs == rhs


def gf0_check(X: str, N: int) -> bool:
    """1 + 2 sum_{r>=1} f^X_r(x + 1/x) z^r = phi(z) Pi~_z(x) + psi(z), one x."""
    phi, psi = phi_psi(X, N)
    F = sequence(X)
    x = _x("x1")
    lhs = TruncSeries("z", N, [SparsePoly.one()] +
                      [F.f(r).subs({"u": x + x ** -1}) * 2 for r in range(1, N + 1)])
    return lhs == phi * pi_tilde_series(1, N) + psi


def phi_minus_psi_check(N: int) -> bool:
    return all((lambda pq: pq[0] - pq[1] == TruncSeries.constant(1, "z", N))(phi_psi(X, N)) for X in TYPES)


def bcd_gf_checks(X: str, n: int, N: int) -> Report:
    rep = Report(f"type {X} generating functions n={n} N={N}")
    rep.check("one-row", gf_one_row_check(X, n, N))
    rep.check("two-row", gf_two_row_check(X, n, N))
    rep.check("single-variable f^X", gf0_check(X, N))
    return rep


def schur_pf_check(X: str, lam, n: int) -> bool:
    """Q^X_lambda is the Pfaffian of the two-row values Q^X_(lambda_i, lambda_j)."""
    lam = _parts(lam)
    alpha = lam if len(lam) % 2 == 0 else lam + (0,)
    r = len(alpha)
    up = {(i, j): _q2(X, alpha[i], alpha[j], n) for i in range(r) for j in range(i + 1, r)}
    return pfaffian(SkewMatrix(r, up)) == bcd_q(X, lam, n).value_laurent


def symmetry_check(q: BCDQFunction) -> bool:
    """Invariance under each x_i -> 1/x_i and each transposition, and the u-form round trip."""
    p = q.value_laurent
    xs = xvars(q.n)
    for x in xs:
        if p.subs({x: _inv(x)}) != p:
            return False
    for a, b in zip(xs, xs[1:]):
        if p.subs({a: _x(b), b: _x(a)}) != p:
            return False
    return laurent_to_u(p, q.n) == q.value_u
