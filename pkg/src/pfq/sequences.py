"""Admissible polynomial sequences f_0 = 1, deg f_d = d, and their duals.

Every sequence is a polynomial family in the variable ``u``. Factorial
parameters may be rationals or symbols; symbolic parameters become
variables ``a0, a1, ...`` of the coefficient ring.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from gmpy2 import mpq

from .arith import Rational, SparsePoly, TruncSeries, _is_zero, rat
from .errors import NotAdmissible, OrderTooLow

U = "u"

KINDS = ("monomial", "factorial", "typeB", "typeC", "typeD", "custom")


def _param(p):
    """A factorial parameter: a rational, or a variable name."""
    if isinstance(p, SparsePoly):
        return p
    if isinstance(p, str):
        try:
            return rat(p)
        except ValueError:
            return SparsePoly.var(p)
    return rat(p)


@dataclass(frozen=True)
class AdmissibleSeq:
    """An admissible sequence.

    ``params`` holds factorial parameters a_0, a_1, ... (with ``cycle`` set,
    a_i = params[i mod cycle]; with ``symbolic`` set, a_i is the variable
    ``a<i>`` for every i). ``custom`` holds explicit f_1, f_2, ... for the
    custom kind.
    """

    kind: str = "monomial"
    params: tuple = ()
    cycle: bool = False
    symbolic: bool = False
    custom: tuple = field(default=(), compare=True)
    label: str = ""

    def __post_init__(self):
        if self.kind not in KINDS:
            raise NotAdmissible(f"unknown sequence kind {self.kind!r}")

    # parameters

    def a(self, i: int):
        """Factorial parameter a_i as a rational or SparsePoly."""
        if self.kind != "factorial":
            raise ValueError("only factorial sequences have parameters")
        if self.symbolic:
            return SparsePoly.var(f"a{i}")
        if self.cycle:
            return _param(self.params[i % len(self.params)])
        if i >= len(self.params):
            raise NotAdmissible(f"factorial parameter a_{i} not supplied")
        return _param(self.params[i])

    def with_params(self, params: Sequence) -> AdmissibleSeq:
        """Factorial sequence with the given explicit parameter list."""
        return AdmissibleSeq("factorial", tuple(params), label=self.label)

    # the polynomials

    def f(self, d: int) -> SparsePoly:
        """f_d(u)."""
        return _f(self, d)

    def f_in(self, d: int, var: str) -> SparsePoly:
        """f_d with u renamed to ``var``."""
        p = _f(self, d)
        return p.rename({U: var}) if U in p.vars else p

    def f_coeffs(self, d: int) -> dict[int, object]:
        """Coefficients of u^i in f_d, as rationals or polynomials in the parameters."""
        return _f_coeffs(self, d)

    def leading(self, d: int) -> Rational:
        c = self.f_coeffs(d)[d]
        if isinstance(c, SparsePoly):
            if not c.is_constant() or not c:
                raise NotAdmissible(f"leading coefficient of f_{d} is not a nonzero rational")
            return c.constant_term()
        return c

    @property
    def constant_term_free(self) -> bool:
        if self.kind in ("monomial", "typeC"):
            return True
        if self.kind in ("typeB", "typeD"):
            return False
        if self.kind == "factorial":
            a0 = self.a(0)
            return _is_zero(a0)
        return all(_is_zero(_const(p)) for p in self.custom)

    def check(self, bound: int) -> None:
        """Raise NotAdmissible unless f_0 = 1 and deg f_d = d for d <= bound."""
        if self.f(0) != 1:
            raise NotAdmissible("f_0 must be 1")
        for d in range(1, bound + 1):
            if self.f(d).degree(U) != d:
                raise NotAdmissible(f"deg f_{d} != {d}")
            self.leading(d)

    def parameter_vars(self) -> tuple[str, ...]:
        return tuple(v for v in self.f(0).vars if v != U)

    def spec(self) -> str:
        if self.label:
            return self.label
        if self.kind == "factorial":
            if self.symbolic:
                return "factorial:symbolic"
            body = ",".join(str(p) for p in self.params)
            return f"factorial:cyclic:{body}" if self.cycle else f"factorial:{body}"
        return self.kind

    def __str__(self):
        return self.spec()


def _const(p) -> object:
    return p.subs({U: 0}) if isinstance(p, SparsePoly) else p


@lru_cache(maxsize=None)
def _f(seq: AdmissibleSeq, d: int) -> SparsePoly:
    u = SparsePoly.var(U)
    if d < 0:
        raise ValueError("negative degree")
    if d == 0:
        return SparsePoly.one((U,))
    k = seq.kind
    if k == "monomial":
        return u ** d
    if k == "factorial":
        out = SparsePoly.one((U,))
        for i in range(d):
            out = out * (u - seq.a(i))
        return out
    if k == "typeB":
        return (u + 2) * _sym_sum(d - 1)
    if k == "typeC":
        return u * _sym_sum(d - 1)
    if k == "typeD":
        return _chebyshev(d)
    if k == "custom":
        if d > len(seq.custom):
            raise NotAdmissible(f"custom sequence only defines f_1..f_{len(seq.custom)}")
        p = seq.custom[d - 1]
        return p if isinstance(p, SparsePoly) else SparsePoly.const(p, (U,))
    raise NotAdmissible(k)


@lru_cache(maxsize=None)
def _chebyshev(k: int) -> SparsePoly:
    """p_k(u) with p_k(x + 1/x) = x^k + x^-k: p_0 = 2, p_1 = u, p_k = u p_{k-1} - p_{k-2}."""
    u = SparsePoly.var(U)
    if k == 0:
        return SparsePoly.const(2, (U,))
    if k == 1:
        return u
    return u * _chebyshev(k - 1) - _chebyshev(k - 2)


@lru_cache(maxsize=None)
def _sym_sum(m: int) -> SparsePoly:
    """s_m(u) with s_m(x + 1/x) = x^m + x^(m-2) + ... + x^-m, built from the p_k."""
    out = SparsePoly.zero((U,))
    for j in range(m // 2 + 1):
        k = m - 2 * j
        out = out + (_chebyshev(k) * mpq(1, 2) if k == 0 else _chebyshev(k))
    return out


@lru_cache(maxsize=None)
def _f_coeffs(seq: AdmissibleSeq, d: int) -> dict[int, object]:
    out = {}
    for e, c in seq.f(d).coeffs_in(U).items():
        c = c.with_vars(tuple(v for v in c.vars if v != U))
        out[e] = c.constant_term() if c.is_constant() else c
    return out


def make_sequence(kind: str, params: Sequence = (), bound: int = 8, **kw) -> AdmissibleSeq:
    """Build a sequence and verify admissibility up to ``bound``."""
    if kind == "custom":
        seq = AdmissibleSeq("custom", custom=tuple(params), **kw)
        bound = min(bound, len(params))
    else:
        seq = AdmissibleSeq(kind, tuple(params), **kw)
    if kind == "factorial" and not seq.symbolic and not seq.cycle:
        bound = min(bound, len(seq.params))
    seq.check(bound)
    return seq


def parse_sequence(text: str, bound: int = 8) -> AdmissibleSeq:
    """Parse ``monomial``, ``typeB|C|D``, ``factorial:symbolic``,
    ``factorial:cyclic:a0,a1,a2`` or ``factorial:<p0>,<p1>,...``."""
    t = text.strip()
    if t in ("monomial", "typeB", "typeC", "typeD"):
        return make_sequence(t, bound=bound)
    if t.startswith("factorial:"):
        body = t[len("factorial:"):]
        if body == "symbolic":
            return make_sequence("factorial", symbolic=True, bound=bound)
        cycle = body.startswith("cyclic:")
        if cycle:
            body = body[len("cyclic:"):]
        params = tuple(p.strip() for p in body.split(",") if p.strip())
        if not params:
            raise NotAdmissible("factorial sequence needs parameters")
        return make_sequence("factorial", params, cycle=cycle, bound=bound)
    raise NotAdmissible(f"unknown sequence spec {text!r}")


def standard_sequences() -> list[AdmissibleSeq]:
    """The five sequences exercised by the verification suites."""
    return [
        make_sequence("monomial"),
        make_sequence("factorial", ("a0", "a1", "a2"), cycle=True),
        make_sequence("typeB"),
        make_sequence("typeC"),
        make_sequence("typeD"),
    ]


def symbolic_factorial() -> AdmissibleSeq:
    return make_sequence("factorial", symbolic=True)


# pairing and duals

def pairing(f: SparsePoly, g: TruncSeries, var: str = U):
    """<f, g> = a_0 b_0 + sum_{i>=1} a_i b_i / 2."""
    deg = f.degree(var)
    if deg > g.order:
        raise OrderTooLow(f"series order {g.order} below degree {deg}")
    total = mpq(0)
    for e, c in f.coeffs_in(var).items():
        c = c.with_vars(tuple(v for v in c.vars if v != var))
        c = c.constant_term() if c.is_constant() else c
        b = g.coeffs[e]
        if _is_zero(b):
            continue
        term = c * b
        total = term + total if e == 0 else term * mpq(1, 2) + total
    if isinstance(total, SparsePoly) and total.is_constant():
        return total.constant_term()
    return total


@dataclass(frozen=True)
class DualSeq:
    order: int
    series: tuple[TruncSeries, ...]

    def fhat(self, d: int) -> TruncSeries:
        if d > self.order:
            raise OrderTooLow(f"dual known up to {self.order}")
        return self.series[d]


@lru_cache(maxsize=None)
def dual_solve(F: AdmissibleSeq, N: int, var: str = "v") -> DualSeq:
    """The dual sequence up to order N via the transposed inverse of the
    coefficient matrix of f_0..f_N."""
    A = [[F.f_coeffs(k).get(i, 0) for i in range(N + 1)] for k in range(N + 1)]
    inv_diag = [1 / F.leading(k) if k else mpq(1) for k in range(N + 1)]
    # X = A^{-1}, lower triangular
    X = [[mpq(0)] * (N + 1) for _ in range(N + 1)]
    for k in range(N + 1):
        X[k][k] = inv_diag[k]
        for j in range(k + 1, N + 1):
            acc = mpq(0)
            for i in range(k, j):
                if not _is_zero(A[j][i]) and not _is_zero(X[i][k]):
                    acc = A[j][i] * X[i][k] + acc
            X[j][k] = _simplify(-acc * inv_diag[j])
    series = []
    for k in range(N + 1):
        cs = [mpq(0)] * (N + 1)
        for j in range(k, N + 1):
            b = X[j][k]
            cs[j] = b if j == 0 else b * 2
        series.append(TruncSeries(var, N, [_simplify(c) for c in cs]))
    return DualSeq(N, tuple(series))


def _simplify(c):
    if isinstance(c, SparsePoly) and c.is_constant():
        return c.constant_term()
    return c


def to_f_basis(p: SparsePoly, F: AdmissibleSeq, var: str = U) -> list:
    """Coefficients c_k with p = sum c_k f_k(var), by back-substitution."""
    if not isinstance(p, SparsePoly):
        return [rat(p)]
    parts = {e: c for e, c in p.coeffs_in(var).items()}
    if any(e < 0 for e in parts):
        raise ValueError(f"negative power of {var}")
    rest = tuple(v for v in p.vars if v != var)
    C = {e: c.with_vars(rest) for e, c in parts.items()}
    top = max(C) if C else 0
    out: list = [mpq(0)] * (top + 1)
    for d in range(top, -1, -1):
        c = C.get(d)
        if c is None or _is_zero(c):
            continue
        c = c * (1 / F.leading(d)) if d else c
        out[d] = _simplify(c)
        for i, fc in F.f_coeffs(d).items():
            if i < d and not _is_zero(fc):
                C[i] = C.get(i, SparsePoly.zero(rest)) - c * fc
    return out


def from_f_basis(coeffs: Sequence, F: AdmissibleSeq, var: str = U) -> SparsePoly:
    out = SparsePoly.zero((var,))
    for k, c in enumerate(coeffs):
        if not _is_zero(c):
            out = out + F.f_in(k, var) * c
    return out


# duals: checks and the factorial closed form

def biorthogonality_check(F: AdmissibleSeq, N: int) -> bool:
    """pairing(f_k, fhat_l) = delta_{kl} for k, l <= N."""
    dual = dual_solve(F, N)
    for k in range(N + 1):
        fk = F.f(k)
        for l in range(N + 1):
            if pairing(fk, dual.fhat(l)) != (1 if k == l else 0):
                return False
    return True


def _geom(a, N: int, var: str) -> TruncSeries:
    """1 / (1 - a v)."""
    return TruncSeries(var, N, [a ** k if k else 1 for k in range(N + 1)])


def factorial_dual_closed(F: AdmissibleSeq, d: int, N: int, var: str = "v") -> TruncSeries:
    """(1 + a_0 v)/(1 - a_0 v) for d = 0, else 2 v^d / prod_{i<=d} (1 - a_i v)."""
    if d == 0:
        a0 = F.a(0)
        return TruncSeries(var, N, [1, a0]) * _geom(a0, N, var)
    out = TruncSeries(var, N, [0] * d + [2])
    for i in range(d + 1):
        out = out * _geom(F.a(i), N, var)
    return out


def factorial_dual_check(F: AdmissibleSeq, N: int) -> bool:
    dual = dual_solve(F, N)
    return all(factorial_dual_closed(F, d, N) == dual.fhat(d) for d in range(N + 1))


def factorial_dual_identities(r: int, N: int, var: str = "v") -> tuple[bool, bool]:
    """The two partial-fraction identities behind the closed form, with
    symbolic a, as series to order N:

    (1 + a_r v)/(1 - a_r v) = (1 + a_0 v)/(1 - a_0 v)
        + sum_{k=1}^r 2 v^k prod_{j<k} (a_r - a_j) / prod_{i<=k} (1 - a_i v)

    1/(1 - a_r v) = sum_{k=1}^r v^{k-1} prod_{j=1}^{k-1} (a_r - a_j) / prod_{i=1}^k (1 - a_i v)
    """
    a = [SparsePoly.var(f"a{i}") for i in range(r + 1)]
    one = TruncSeries.constant(1, var, N)

    def frac(c):
        return TruncSeries(var, N, [1, c]) * _geom(c, N, var)

    rhs1 = frac(a[0])
    rhs2 = TruncSeries(var, N)
    for k in range(1, r + 1):
        prod1 = one
        for j in range(k):
            prod1 = prod1 * (a[r] - a[j])
        for i in range(k + 1):
            prod1 = prod1 * _geom(a[i], N, var)
        rhs1 = rhs1 + prod1.shift(k) * 2
        prod2 = one
        for j in range(1, k):
            prod2 = prod2 * (a[r] - a[j])
        for i in range(1, k + 1):
            prod2 = prod2 * _geom(a[i], N, var)
        rhs2 = rhs2 + prod2.shift(k - 1)
    return frac(a[r]) == rhs1, _geom(a[r], N, var) == rhs2
