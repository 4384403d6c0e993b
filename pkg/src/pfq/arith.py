"""Exact coefficient rings: rationals, sparse (Laurent) polynomials, rational
functions and truncated power series.

A monomial is packed into one Python int. The top slot holds the total degree
and each following slot one variable exponent, every slot biased by ``OFF`` so
negative exponents fit. Integer comparison of packed keys is then graded-lex
order, and multiplying monomials is ``ka + kb - base``.
"""

from __future__ import annotations

import heapq
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from gmpy2 import mpq, mpz

from .errors import NonUnitConstantTerm, NotDivisible

Rational = type(mpq(0))

BITS = 16
OFF = 1 << (BITS - 1)
MASK = (1 << BITS) - 1

_SCALARS = (int, Rational, type(mpz(0)), Fraction)


def rat(x) -> Rational:
    """Coerce ints, Fractions, mpq values and ``"p/q"`` strings to mpq."""
    if isinstance(x, Rational):
        return x
    if isinstance(x, str):
        num, _, den = x.partition("/")
        return mpq(int(num), int(den) if den else 1)
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    return mpq(x)


def rat_str(c) -> str:
    c = rat(c)
    return f"{c.numerator}/{c.denominator}"


_VAR_RE = re.compile(r"^(\D*)(\d*)(.*)$")


def var_key(name: str):
    """Natural sort key: ``x2`` sorts before ``x10``."""
    head, num, tail = _VAR_RE.match(name).groups()
    return (head, int(num) if num else -1, tail)


def sort_vars(names: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted(set(names), key=var_key))


@lru_cache(maxsize=None)
def _base(nv: int) -> int:
    return _pack((0,) * nv)


def _pack(exps) -> int:
    k = sum(exps) + OFF
    for e in exps:
        k = (k << BITS) | (e + OFF)
    return k


def _unpack(k: int, nv: int) -> tuple[int, ...]:
    out = [0] * nv
    for i in range(nv - 1, -1, -1):
        out[i] = (k & MASK) - OFF
        k >>= BITS
    return tuple(out)


def _nonneg(k: int, nv: int) -> bool:
    # with OFF the high bit of each slot, e >= 0 iff that bit is set
    b = _base(nv)
    return k & b == b


def _scalar_ok(x) -> bool:
    return isinstance(x, _SCALARS) and not isinstance(x, bool)


class SparsePoly:
    """Sparse multivariate polynomial over Q, optionally Laurent.

    Variables are kept in natural sort order; operands over different
    variable lists are aligned on the union of names.
    """

    __slots__ = ("vars", "_t", "laurent")

    def __init__(self, vars: Iterable[str] = (), terms: Mapping | None = None,
                 laurent: bool = False):
        given = tuple(vars)
        vs = sort_vars(given)
        if len(vs) != len(given):
            raise ValueError(f"repeated variable names in {given}")
        perm = [given.index(v) for v in vs]
        t: dict[int, Rational] = {}
        nv = len(vs)
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nv:
                raise ValueError(f"exponent vector {exps} does not match {given}")
            if not laurent and any(e < 0 for e in exps):
                raise ValueError("negative exponent in a non-Laurent polynomial")
            c = rat(c)
            if c:
                k = _pack(tuple(exps[p] for p in perm))
                t[k] = t.get(k, 0) + c
        self.vars = vs
        self._t = {k: c for k, c in t.items() if c}
        self.laurent = bool(laurent)

    @classmethod
    def _raw(cls, vars: tuple[str, ...], t: dict, laurent: bool) -> SparsePoly:
        p = object.__new__(cls)
        p.vars = vars
        p._t = t
        p.laurent = laurent
        return p

    # constructors

    @classmethod
    def zero(cls, vars: Iterable[str] = ()) -> SparsePoly:
        return cls._raw(sort_vars(vars), {}, False)

    @classmethod
    def const(cls, c, vars: Iterable[str] = ()) -> SparsePoly:
        vs = sort_vars(vars)
        c = rat(c)
        return cls._raw(vs, {_base(len(vs)): c} if c else {}, False)

    @classmethod
    def one(cls, vars: Iterable[str] = ()) -> SparsePoly:
        return cls.const(1, vars)

    @classmethod
    def var(cls, name: str, vars: Iterable[str] = (), power: int = 1) -> SparsePoly:
        vs = sort_vars(list(vars) + [name])
        exps = tuple(power if v == name else 0 for v in vs)
        return cls._raw(vs, {_pack(exps): mpq(1)}, power < 0)

    @classmethod
    def monomial(cls, exps: Mapping[str, int], coeff=1, vars: Iterable[str] = ()) -> SparsePoly:
        vs = sort_vars(list(vars) + list(exps))
        e = tuple(exps.get(v, 0) for v in vs)
        c = rat(coeff)
        return cls._raw(vs, {_pack(e): c} if c else {}, any(x < 0 for x in e))

    # inspection

    @property
    def nterms(self) -> int:
        return len(self._t)

    def __bool__(self) -> bool:
        return bool(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def terms(self) -> dict[tuple[int, ...], Rational]:
        nv = len(self.vars)
        return {_unpack(k, nv): c for k, c in self._t.items()}

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Rational]]:
        """Terms in descending graded-lex order."""
        nv = len(self.vars)
        return [(_unpack(k, nv), self._t[k]) for k in sorted(self._t, reverse=True)]

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and _base(len(self.vars)) in self._t)

    def constant_term(self) -> Rational:
        return self._t.get(_base(len(self.vars)), mpq(0))

    def coeff(self, exps: Mapping[str, int]) -> Rational:
        e = tuple(exps.get(v, 0) for v in self.vars)
        return self._t.get(_pack(e), mpq(0))

    def used_vars(self) -> tuple[str, ...]:
        nv = len(self.vars)
        used = set()
        for k in self._t:
            for v, e in zip(self.vars, _unpack(k, nv)):
                if e:
                    used.add(v)
        return tuple(v for v in self.vars if v in used)

    def degree(self, var: str | None = None) -> int:
        """Total degree, or degree in one variable; -1 for the zero polynomial."""
        if not self._t:
            return -1
        if var is None:
            # the degree slot is the most significant one
            return (max(self._t) >> (BITS * len(self.vars))) - OFF
        if var not in self.vars:
            return 0
        i = self.vars.index(var)
        nv = len(self.vars)
        return max(_unpack(k, nv)[i] for k in self._t)

    def min_degree(self, var: str) -> int:
        if not self._t or var not in self.vars:
            return 0
        i = self.vars.index(var)
        nv = len(self.vars)
        return min(_unpack(k, nv)[i] for k in self._t)

    def degree_in(self, vars: Iterable[str]) -> int:
        """Largest total degree in the given subset of variables."""
        if not self._t:
            return -1
        idx = [i for i, v in enumerate(self.vars) if v in set(vars)]
        nv = len(self.vars)
        return max(sum(_unpack(k, nv)[i] for i in idx) for k in self._t)

    # alignment

    def with_vars(self, vars: Iterable[str]) -> SparsePoly:
        """Re-encode over a superset of the current variables."""
        vs = sort_vars(vars)
        if vs == self.vars:
            return self
        missing = set(self.vars) - set(vs)
        if missing:
            used = set(self.used_vars())
            if missing & used:
                raise ValueError(f"variables {sorted(missing & used)} are in use")
        old = len(self.vars)
        pos = {v: i for i, v in enumerate(self.vars)}
        src = [pos.get(v) for v in vs]
        t = {}
        for k, c in self._t.items():
            e = _unpack(k, old)
            t[_pack(tuple(0 if s is None else e[s] for s in src))] = c
        return SparsePoly._raw(vs, t, self.laurent)

    def compact(self) -> SparsePoly:
        """Drop variables that do not occur."""
        return self.with_vars(self.used_vars())

    def _coerce(self, other) -> SparsePoly | None:
        if isinstance(other, SparsePoly):
            return other
        if _scalar_ok(other):
            return SparsePoly.const(other, self.vars)
        return None

    @staticmethod
    def _align(a: SparsePoly, b: SparsePoly):
        if a.vars == b.vars:
            return a.vars, a._t, b._t
        vs = sort_vars(a.vars + b.vars)
        return vs, a.with_vars(vs)._t, b.with_vars(vs)._t

    # arithmetic

    def __neg__(self) -> SparsePoly:
        return SparsePoly._raw(self.vars, {k: -c for k, c in self._t.items()}, self.laurent)

    def __pos__(self) -> SparsePoly:
        return self

    def __add__(self, other) -> SparsePoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        vs, ta, tb = self._align(self, o)
        if len(ta) < len(tb):
            ta, tb = tb, ta
        t = dict(ta)
        for k, c in tb.items():
            v = t.get(k, 0) + c
            if v:
                t[k] = v
            else:
                t.pop(k, None)
        return SparsePoly._raw(vs, t, self.laurent or o.laurent)

    __radd__ = __add__

    def __sub__(self, other) -> SparsePoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> SparsePoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> SparsePoly:
        if _scalar_ok(other):
            c = rat(other)
            if not c:
                return SparsePoly._raw(self.vars, {}, self.laurent)
            return SparsePoly._raw(self.vars, {k: v * c for k, v in self._t.items()}, self.laurent)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        vs, ta, tb = self._align(self, other)
        return SparsePoly._raw(vs, _mul_terms(ta, tb, _base(len(vs))), self.laurent or other.laurent)

    __rmul__ = __mul__

    def __truediv__(self, other) -> SparsePoly:
        if _scalar_ok(other):
            return self * (1 / rat(other))
        if isinstance(other, SparsePoly):
            return exact_divide(self, other)
        return NotImplemented

    def __pow__(self, e: int) -> SparsePoly:
        if e < 0:
            if len(self._t) != 1:
                raise ValueError("negative power of a non-monomial")
            (k, c), = self._t.items()
            nv = len(self.vars)
            ex = tuple(x * e for x in _unpack(k, nv))
            return SparsePoly._raw(self.vars, {_pack(ex): 1 / c ** (-e)}, True)
        result = SparsePoly.one(self.vars)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.vars == o.vars:
            return self._t == o._t
        _, ta, tb = self._align(self, o)
        return ta == tb

    def __hash__(self):
        nv = len(self.vars)
        items = []
        for k, c in self._t.items():
            e = _unpack(k, nv)
            items.append((tuple((v, x) for v, x in zip(self.vars, e) if x), c))
        return hash(frozenset(items))

    # truncation and grading

    def _grading(self, vars: Iterable[str]):
        sel = set(vars)
        idx = [i for i, v in enumerate(self.vars) if v in sel]
        nv = len(self.vars)
        return {k: sum(_unpack(k, nv)[i] for i in idx) for k in self._t}

    def truncate(self, vars: Iterable[str], D: int) -> SparsePoly:
        """Drop terms whose total degree in ``vars`` exceeds D."""
        g = self._grading(vars)
        return SparsePoly._raw(self.vars, {k: c for k, c in self._t.items() if g[k] <= D},
                               self.laurent)

    def graded_parts(self, vars: Iterable[str]) -> dict[int, SparsePoly]:
        g = self._grading(vars)
        parts: dict[int, dict] = {}
        for k, c in self._t.items():
            parts.setdefault(g[k], {})[k] = c
        return {d: SparsePoly._raw(self.vars, t, self.laurent) for d, t in sorted(parts.items())}

    def mul_trunc(self, other: SparsePoly, vars: Iterable[str], D: int) -> SparsePoly:
        """Product with terms of degree > D in ``vars`` discarded during multiplication."""
        if _scalar_ok(other):
            return (self * other).truncate(vars, D)
        vars = tuple(vars)
        vs = sort_vars(self.vars + other.vars)
        a, b = self.with_vars(vs), other.with_vars(vs)
        ga, gb = a._grading(vars), b._grading(vars)
        bl = sorted(b._t.items(), key=lambda kv: gb[kv[0]])
        base = _base(len(vs))
        out: dict[int, Rational] = {}
        get = out.get
        for ka, ca in a._t.items():
            room = D - ga[ka]
            if room < 0:
                continue
            kk = ka - base
            for kb, cb in bl:
                if gb[kb] > room:
                    break
                k = kk + kb
                out[k] = get(k, 0) + ca * cb
        return SparsePoly._raw(vs, {k: c for k, c in out.items() if c}, a.laurent or b.laurent)

    # structure

    def coeffs_in(self, var: str) -> dict[int, SparsePoly]:
        """Split as sum of c_e * var^e; the c_e keep the full variable list."""
        if var not in self.vars:
            return {0: self} if self._t else {}
        i = self.vars.index(var)
        nv = len(self.vars)
        shift = BITS * (nv - 1 - i)
        deg_shift = BITS * nv
        out: dict[int, dict] = {}
        for k, c in self._t.items():
            e = ((k >> shift) & MASK) - OFF
            kk = k - (e << shift) - (e << deg_shift)
            out.setdefault(e, {})[kk] = c
        return {e: SparsePoly._raw(self.vars, t, self.laurent) for e, t in sorted(out.items())}

    def split_by(self, vars: Iterable[str]) -> dict[tuple[int, ...], SparsePoly]:
        """Group terms by their exponent in ``vars``; coefficients over the rest."""
        vars = tuple(v for v in sort_vars(vars) if v in self.vars)
        rest = tuple(v for v in self.vars if v not in vars)
        idx = [self.vars.index(v) for v in vars]
        ridx = [self.vars.index(v) for v in rest]
        nv = len(self.vars)
        out: dict[tuple, dict] = {}
        for k, c in self._t.items():
            e = _unpack(k, nv)
            out.setdefault(tuple(e[i] for i in idx), {})[_pack(tuple(e[i] for i in ridx))] = c
        return {e: SparsePoly._raw(rest, t, self.laurent) for e, t in out.items()}

    def leading(self) -> tuple[tuple[int, ...], Rational]:
        k = max(self._t)
        return _unpack(k, len(self.vars)), self._t[k]

    def map_coeffs(self, fn) -> SparsePoly:
        t = {}
        for k, c in self._t.items():
            v = rat(fn(c))
            if v:
                t[k] = v
        return SparsePoly._raw(self.vars, t, self.laurent)

    def shift(self, exps: Mapping[str, int]) -> SparsePoly:
        """Multiply by the monomial with the given exponents."""
        vs = sort_vars(self.vars + tuple(exps))
        p = self.with_vars(vs)
        delta = _pack(tuple(exps.get(v, 0) for v in vs)) - _base(len(vs))
        lau = p.laurent or any(e < 0 for e in exps.values())
        return SparsePoly._raw(vs, {k + delta: c for k, c in p._t.items()}, lau)

    def min_exponents(self) -> dict[str, int]:
        nv = len(self.vars)
        mins = [0] * nv
        first = True
        for k in self._t:
            e = _unpack(k, nv)
            if first:
                mins = list(e)
                first = False
            else:
                mins = [min(a, b) for a, b in zip(mins, e)]
        return dict(zip(self.vars, mins))

    def as_laurent(self, flag: bool = True) -> SparsePoly:
        if not flag and not _all_nonneg(self._t, len(self.vars)):
            raise ValueError("polynomial has negative exponents")
        return SparsePoly._raw(self.vars, self._t, flag)

    def rename(self, mapping: Mapping[str, str]) -> SparsePoly:
        """Rename variables; targets must not collide with remaining names."""
        names = [mapping.get(v, v) for v in self.vars]
        if len(set(names)) != len(names):
            raise ValueError("renaming merges variables; use subs instead")
        vs = sort_vars(names)
        if tuple(names) == vs:
            return SparsePoly._raw(vs, self._t, self.laurent)
        nv = len(vs)
        perm = [names.index(v) for v in vs]
        t = {}
        for k, c in self._t.items():
            e = _unpack(k, nv)
            t[_pack(tuple(e[p] for p in perm))] = c
        return SparsePoly._raw(vs, t, self.laurent)

    def subs(self, bindings: Mapping[str, object]) -> object:
        """Substitute variables by polynomials, scalars or truncated series."""
        return substitute(self, bindings)

    def __call__(self, **bindings):
        return substitute(self, bindings)

    # output

    def to_json(self) -> dict:
        return {"vars": list(self.vars),
                "terms": [[list(e), rat_str(c)] for e, c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, data: Mapping) -> SparsePoly:
        terms = {tuple(e): rat(c) for e, c in data["terms"]}
        lau = any(x < 0 for e in terms for x in e)
        return cls(data["vars"], terms, laurent=lau)

    def render(self) -> str:
        if not self._t:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(v if x == 1 else f"{v}^{x}" for v, x in zip(self.vars, e) if x)
            if not mono:
                s = str(c)
            elif c == 1:
                s = mono
            elif c == -1:
                s = "-" + mono
            else:
                s = f"{c}*{mono}"
            parts.append(s)
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"SparsePoly({self.render()})"


def _all_nonneg(t, nv: int) -> bool:
    return all(_nonneg(k, nv) for k in t)


def _mul_terms(ta: dict, tb: dict, base: int) -> dict:
    if not ta or not tb:
        return {}
    if len(ta) > len(tb):
        ta, tb = tb, ta
    if len(ta) == 1:
        (ka, ca), = ta.items()
        d = ka - base
        return {kb + d: ca * cb for kb, cb in tb.items()}
    out: dict[int, Rational] = {}
    get = out.get
    items_b = list(tb.items())
    for ka, ca in ta.items():
        d = ka - base
        for kb, cb in items_b:
            k = d + kb
            out[k] = get(k, 0) + ca * cb
    return {k: c for k, c in out.items() if c}


def exact_divide(num: SparsePoly, den: SparsePoly) -> SparsePoly:
    """Quotient q with q*den == num, or NotDivisible.

    Leading-term division in graded-lex order; since the order is a
    well-order on monomials of bounded degree, a failed division is detected
    as soon as a leading term is not divisible.
    """
    if _scalar_ok(den):
        den = SparsePoly.const(den, num.vars)
    if _scalar_ok(num):
        num = SparsePoly.const(num, den.vars)
    if not den._t:
        raise ZeroDivisionError("division by the zero polynomial")
    vs, tn, td = SparsePoly._align(num, den)
    laurent = num.laurent or den.laurent
    if not tn:
        return SparsePoly._raw(vs, {}, laurent)
    nv = len(vs)
    base = _base(nv)
    if laurent:
        pn = SparsePoly._raw(vs, tn, True)
        pd = SparsePoly._raw(vs, td, True)
        mn, md = pn.min_exponents(), pd.min_exponents()
        sn = _pack(tuple(-mn[v] for v in vs)) - base
        sd = _pack(tuple(-md[v] for v in vs)) - base
        tn = {k + sn: c for k, c in tn.items()}
        td = {k + sd: c for k, c in td.items()}
        q = _divide_terms(tn, td, nv)
        back = _pack(tuple(mn[v] - md[v] for v in vs)) - base
        return SparsePoly._raw(vs, {k + back: c for k, c in q.items()}, True)
    return SparsePoly._raw(vs, _divide_terms(tn, td, nv), False)


def _divide_terms(tn: dict, td: dict, nv: int) -> dict:
    base = _base(nv)
    lk = max(td)
    lc = td[lk]
    if len(td) == 1:
        q = {}
        for k, c in tn.items():
            qk = k - lk + base
            if not _nonneg(qk, nv):
                raise NotDivisible("monomial divisor does not divide a term")
            q[qk] = c / lc
        return q
    rest = [(k - base, c) for k, c in td.items() if k != lk]
    rem = dict(tn)
    heap = [-k for k in rem]
    heapq.heapify(heap)
    q: dict[int, Rational] = {}
    inv = 1 / lc
    while heap:
        k = -heapq.heappop(heap)
        c = rem.pop(k, 0)
        if not c:
            continue
        qk = k - lk + base
        if not _nonneg(qk, nv):
            raise NotDivisible("leading term of the remainder is not divisible")
        qc = c * inv
        q[qk] = qc
        for kd, cd in rest:
            kk = qk + kd
            if kk in rem:
                rem[kk] -= qc * cd
            else:
                rem[kk] = -qc * cd
                heapq.heappush(heap, -kk)
    return q


def substitute(p: SparsePoly, bindings: Mapping[str, object]):
    """Compose p with the given bindings; unbound variables are kept."""
    series = [b for b in bindings.values() if isinstance(b, TruncSeries)]
    nv = len(p.vars)
    if series:
        var, N = series[0].var, min(s.order for s in series)
        keep = tuple(v for v in p.vars if v not in bindings)

        def lift(v):
            b = bindings[v] if v in bindings else SparsePoly.var(v, keep)
            if isinstance(b, TruncSeries):
                return b.truncate(N)
            return TruncSeries.constant(b, var, N)

        result = TruncSeries.constant(0, var, N)
        one = TruncSeries.constant(1, var, N)
    else:
        keep_vars = [v for v in p.vars if v not in bindings]
        for b in bindings.values():
            if isinstance(b, SparsePoly):
                keep_vars.extend(b.vars)
        ring = sort_vars(keep_vars)

        def lift(v):
            b = bindings[v] if v in bindings else SparsePoly.var(v)
            if isinstance(b, SparsePoly):
                return b.with_vars(ring) if set(b.vars) <= set(ring) else b
            return SparsePoly.const(b, ring)

        result = SparsePoly.zero(ring)
        one = SparsePoly.one(ring)
    lifted = {v: lift(v) for v in p.vars}
    powers: dict[tuple[str, int], object] = {}

    def power(v, e):
        key = (v, e)
        if key not in powers:
            b = lifted[v]
            if e < 0:
                if isinstance(b, SparsePoly) and b.nterms == 1:
                    powers[key] = b ** e
                else:
                    raise ValueError(f"negative power of non-monomial binding for {v}")
            elif e == 0:
                powers[key] = one
            elif e == 1:
                powers[key] = b
            else:
                powers[key] = power(v, e - 1) * b
        return powers[key]

    for k, c in p._t.items():
        e = _unpack(k, nv)
        term = None
        for v, x in zip(p.vars, e):
            if x:
                term = power(v, x) if term is None else term * power(v, x)
        result = result + (one * c if term is None else term * c)
    return result


class RationalFn:
    """Unreduced quotient of two polynomials; equality by cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        if _scalar_ok(num):
            num = SparsePoly.const(num, den.vars if isinstance(den, SparsePoly) else ())
        if _scalar_ok(den):
            den = SparsePoly.const(den, num.vars)
        if not den:
            raise ZeroDivisionError("zero denominator")
        self.num = num
        self.den = den

    @staticmethod
    def _lift(x) -> RationalFn:
        if isinstance(x, RationalFn):
            return x
        if isinstance(x, SparsePoly):
            return RationalFn(x, SparsePoly.one(x.vars))
        if _scalar_ok(x):
            return RationalFn(SparsePoly.const(x), SparsePoly.one())
        raise TypeError(f"cannot treat {type(x).__name__} as a rational function")

    def __add__(self, other):
        o = self._lift(other)
        if self.den == o.den:
            return RationalFn(self.num + o.num, self.den)
        return RationalFn(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFn(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        return RationalFn(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        return RationalFn(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __eq__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    __hash__ = None

    def __bool__(self):
        return bool(self.num)

    def to_poly(self) -> SparsePoly:
        """The quotient as a polynomial; NotDivisible if it is not one."""
        return exact_divide(self.num, self.den)

    def subs(self, bindings):
        return RationalFn(substitute(self.num, bindings), substitute(self.den, bindings))

    def __repr__(self):
        return f"RationalFn(({self.num.render()}) / ({self.den.render()}))"


def _is_zero(c) -> bool:
    return not c


class TruncSeries:
    """Power series in one variable, truncated after degree ``order``.

    Coefficients are rationals or SparsePoly values over other variables.
    """

    __slots__ = ("var", "order", "coeffs")

    def __init__(self, var: str, order: int, coeffs: Iterable = ()):
        cs = list(coeffs)[: order + 1]
        cs += [mpq(0)] * (order + 1 - len(cs))
        self.var = var
        self.order = order
        self.coeffs = tuple(rat(c) if _scalar_ok(c) else c for c in cs)

    @classmethod
    def constant(cls, c, var: str, order: int) -> TruncSeries:
        return cls(var, order, [c])

    @classmethod
    def from_poly(cls, p: SparsePoly, var: str, order: int) -> TruncSeries:
        """Read a polynomial in ``var`` (coefficients over the other variables)."""
        if _scalar_ok(p):
            return cls.constant(p, var, order)
        parts = p.coeffs_in(var)
        if any(e < 0 for e in parts):
            raise ValueError(f"negative power of {var}")
        cs = [mpq(0)] * (order + 1)
        rest = tuple(v for v in p.vars if v != var)
        for e, c in parts.items():
            if e <= order:
                c = c.with_vars(rest)
                cs[e] = c.constant_term() if c.is_constant() else c
        return cls(var, order, cs)

    def to_poly(self, vars: Iterable[str] = ()) -> SparsePoly:
        z = SparsePoly.var(self.var, vars)
        out = SparsePoly.zero(tuple(vars) + (self.var,))
        zp = SparsePoly.one(out.vars)
        for c in self.coeffs:
            if not _is_zero(c):
                out = out + zp * c
            zp = zp * z
        return out

    def truncate(self, order: int) -> TruncSeries:
        return TruncSeries(self.var, order, self.coeffs[: order + 1])

    def _lift(self, other) -> TruncSeries | None:
        if isinstance(other, TruncSeries):
            if other.var != self.var:
                raise ValueError("series in different variables")
            return other
        if _scalar_ok(other) or isinstance(other, SparsePoly):
            return TruncSeries.constant(other, self.var, self.order)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        N = min(self.order, o.order)
        return TruncSeries(self.var, N, [a + b for a, b in zip(self.coeffs[: N + 1], o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(self.var, self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if _scalar_ok(other) or isinstance(other, SparsePoly):
            return TruncSeries(self.var, self.order, [c * other for c in self.coeffs])
        o = self._lift(other)
        if o is None:
            return NotImplemented
        N = min(self.order, o.order)
        a, b = self.coeffs, o.coeffs
        out = []
        for i in range(N + 1):
            s = mpq(0)
            for j in range(i + 1):
                if not _is_zero(a[j]) and not _is_zero(b[i - j]):
                    s = a[j] * b[i - j] + s
            out.append(s)
        return TruncSeries(self.var, N, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return series_invert(self) ** (-e)
        out = TruncSeries.constant(1, self.var, self.order)
        for _ in range(e):
            out = out * self
        return out

    def __truediv__(self, other):
        if _scalar_ok(other):
            return self * (1 / rat(other))
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * series_invert(o)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * series_invert(self)

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        N = min(self.order, o.order)
        return all(_is_zero(a - b) for a, b in zip(self.coeffs[: N + 1], o.coeffs[: N + 1]))

    __hash__ = None

    def __bool__(self):
        return any(not _is_zero(c) for c in self.coeffs)

    def valuation(self) -> int | None:
        """Index of the lowest nonzero coefficient, None for the zero series."""
        for i, c in enumerate(self.coeffs):
            if not _is_zero(c):
                return i
        return None

    def shift(self, k: int) -> TruncSeries:
        """Multiply by var^k (k >= 0)."""
        return TruncSeries(self.var, self.order, [mpq(0)] * k + list(self.coeffs))

    def map(self, fn) -> TruncSeries:
        return TruncSeries(self.var, self.order, [fn(c) for c in self.coeffs])

    def to_json(self) -> dict:
        cs = []
        for c in self.coeffs:
            cs.append(c.to_json() if isinstance(c, SparsePoly) else rat_str(c))
        return {"var": self.var, "order": self.order, "coeffs": cs}

    def __repr__(self):
        return f"TruncSeries({self.var}, {self.order}, {list(self.coeffs)!r})"


def series_invert(s: TruncSeries) -> TruncSeries:
    c0 = s.coeffs[0]
    if isinstance(c0, SparsePoly):
        if not c0.is_constant():
            raise NonUnitConstantTerm("constant term is not a rational number")
        c0 = c0.constant_term()
    if not c0:
        raise NonUnitConstantTerm("constant term is zero")
    inv0 = 1 / rat(c0)
    out = [inv0]
    for i in range(1, s.order + 1):
        acc = mpq(0)
        for j in range(1, i + 1):
            a = s.coeffs[j]
            if not _is_zero(a) and not _is_zero(out[i - j]):
                acc = a * out[i - j] + acc
        out.append(-acc * inv0)
    return TruncSeries(s.var, s.order, out)


def det(rows: list[list], one=1, zero=0):
    """Determinant by Laplace expansion along columns with subset memoization.

    Division free, so it works over any commutative ring in this module.
    """
    n = len(rows)
    if n == 0:
        return one
    memo: dict[int, object] = {}

    def minor(r: int, cols: int):
        # rows r..n-1 against the column set cols (bitmask)
        if r == n:
            return one
        key = cols
        if key in memo:
            return memo[key]
        total = None
        sign = 1
        for c in range(n):
            if cols >> c & 1:
                a = rows[r][c]
                if not _is_zero(a):
                    sub = minor(r + 1, cols & ~(1 << c))
                    if not _is_zero(sub):
                        t = a * sub
                        total = (t if sign > 0 else -t) if total is None else \
                            (total + t if sign > 0 else total - t)
                sign = -sign
        memo[key] = zero if total is None else total
        return memo[key]

    return minor(0, (1 << n) - 1)
