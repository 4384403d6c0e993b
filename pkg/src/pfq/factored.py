"""Rational functions whose denominators are kept as products of known factors.

Sums use the least common multiple of the factor multisets, so denominators
never grow beyond the maximal power of each factor that occurs. This keeps
Pfaffians of kernel matrices with many distinct linear denominators cheap.
"""

from __future__ import annotations

from typing import Iterable

from .arith import RationalFn, SparsePoly, _scalar_ok, exact_divide
from .errors import NotDivisible


def _normalize(f: SparsePoly):
    """Split f into (lc, monic f) so that equal factors up to scaling share a key."""
    f = f.compact()
    _, lc = f.leading()
    return lc, (f * (1 / lc) if lc != 1 else f)


class FactoredFn:
    """num / prod f^k, with the factors stored monic (grlex leading coefficient 1)."""

    __slots__ = ("num", "den")

    def __init__(self, num, factors: Iterable = ()):
        if _scalar_ok(num):
            num = SparsePoly.const(num)
        den: dict[SparsePoly, int] = {}
        for item in factors:
            f, k = item if isinstance(item, tuple) else (item, 1)
            if _scalar_ok(f):
                num = num * (1 / f) ** k
                continue
            if f.is_constant():
                num = num * (1 / f.constant_term()) ** k
                continue
            lc, g = _normalize(f)
            if lc != 1:
                num = num * (1 / lc) ** k
            den[g] = den.get(g, 0) + k
        self.num = num
        self.den = den

    @classmethod
    def _make(cls, num, den):
        out = cls.__new__(cls)
        out.num = num
        out.den = den
        return out

    @staticmethod
    def lift(x) -> FactoredFn:
        if isinstance(x, FactoredFn):
            return x
        if isinstance(x, SparsePoly):
            return FactoredFn._make(x, {})
        if isinstance(x, RationalFn):
            return FactoredFn(x.num, [x.den])
        if _scalar_ok(x):
            return FactoredFn._make(SparsePoly.const(x), {})
        raise TypeError(f"cannot treat {type(x).__name__} as a factored rational function")

    def denominator(self) -> SparsePoly:
        out = SparsePoly.one()
        for f, k in self.den.items():
            out = out * f ** k
        return out

    @staticmethod
    def _scale(num: SparsePoly, have: dict, want: dict) -> SparsePoly:
        for f, k in want.items():
            extra = k - have.get(f, 0)
            if extra:
                num = num * f ** extra
        return num

    def __add__(self, other):
        o = self.lift(other)
        if self.den == o.den:
            return self._make(self.num + o.num, self.den)
        lcm = dict(self.den)
        for f, k in o.den.items():
            if k > lcm.get(f, 0):
                lcm[f] = k
        num = self._scale(self.num, self.den, lcm) + self._scale(o.num, o.den, lcm)
        return self._make(num, lcm)

    __radd__ = __add__

    def __neg__(self):
        return self._make(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self.lift(other))

    def __rsub__(self, other):
        return self.lift(other) + (-self)

    def __mul__(self, other):
        o = self.lift(other)
        den = dict(self.den)
        for f, k in o.den.items():
            den[f] = den.get(f, 0) + k
        return self._make(self.num * o.num, den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a scalar, a polynomial (taken as one factor) or a
        FactoredFn whose numerator is a scalar multiple of a product of factors."""
        if _scalar_ok(other):
            return self._make(self.num * (1 / other), self.den)
        if isinstance(other, SparsePoly):
            return self * FactoredFn(1, [other])
        o = self.lift(other)
        return self * FactoredFn(self._den_poly(o.den), [o.num])

    @staticmethod
    def _den_poly(den: dict) -> SparsePoly:
        out = SparsePoly.one()
        for f, k in den.items():
            out = out * f ** k
        return out

    def __eq__(self, other):
        try:
            o = self.lift(other)
        except TypeError:
            return NotImplemented
        return not (self - o).num

    __hash__ = None

    def __bool__(self):
        return bool(self.num)

    def reduce(self) -> FactoredFn:
        """Cancel denominator factors that divide the numerator."""
        num, den = self.num, dict(self.den)
        if not num:
            return self._make(num, {})
        for f in list(den):
            while den[f]:
                try:
                    num = exact_divide(num, f)
                except NotDivisible:
                    break
                den[f] -= 1
            if not den[f]:
                del den[f]
        return self._make(num, den)

    def to_poly(self) -> SparsePoly:
        r = self.reduce()
        if r.den:
            raise NotDivisible("denominator does not cancel")
        return r.num

    def to_rational(self) -> RationalFn:
        return RationalFn(self.num, self.denominator())

    def __repr__(self):
        den = " * ".join(f"({f.render()})^{k}" for f, k in self.den.items()) or "1"
        return f"FactoredFn(({self.num.render()}) / {den})"
