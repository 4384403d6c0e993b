"""Skew-symmetric matrices, Pfaffians and the classical Pfaffian identities.

Indices are 0-based in the Python API except for ``IndexSet``-style
arguments of the identity helpers, which follow the usual 1-based
convention (``sigma_sum`` of {1, 3} is 4).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Callable, Iterable, Sequence

from .arith import RationalFn, SparsePoly, _is_zero, det, exact_divide, rat
from .errors import (IndexOutOfRange, OddDimension, ParityMismatch, TooLarge,
                     ZeroPivotPfaffian)


@dataclass(frozen=True)
class SkewMatrix:
    """Skew-symmetric matrix stored by its strict upper triangle."""

    dim: int
    upper: dict = field(default_factory=dict)

    def __post_init__(self):
        for (i, j) in self.upper:
            if not (0 <= i < j < self.dim):
                raise IndexOutOfRange(f"entry ({i}, {j}) outside a {self.dim}x{self.dim} upper triangle")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> SkewMatrix:
        m = len(rows)
        up = {}
        for i in range(m):
            if not _is_zero(rows[i][i]):
                raise ValueError("nonzero diagonal entry")
            for j in range(i + 1, m):
                if not _is_zero(rows[i][j] + rows[j][i]):
                    raise ValueError(f"entries ({i},{j}) and ({j},{i}) are not opposite")
                up[(i, j)] = rows[i][j]
        return cls(m, up)

    @classmethod
    def from_function(cls, dim: int, fn: Callable[[int, int], object]) -> SkewMatrix:
        return cls(dim, {(i, j): fn(i, j) for i in range(dim) for j in range(i + 1, dim)})

    def __getitem__(self, ij):
        i, j = ij
        if i == j:
            return 0
        if i < j:
            return self.upper.get((i, j), 0)
        return -self.upper.get((j, i), 0)

    def rows(self) -> list[list]:
        return [[self[i, j] for j in range(self.dim)] for i in range(self.dim)]

    def map(self, fn) -> SkewMatrix:
        return SkewMatrix(self.dim, {k: fn(v) for k, v in self.upper.items()})

    def permuted(self, perm: Sequence[int]) -> SkewMatrix:
        """The matrix (x_{perm(i), perm(j)})."""
        return SkewMatrix.from_function(self.dim, lambda i, j: self[perm[i], perm[j]])

    def to_json(self) -> dict:
        def enc(v):
            if isinstance(v, SparsePoly):
                return v.to_json()
            return f"{rat(v).numerator}/{rat(v).denominator}"
        return {"dim": self.dim,
                "upper": [[i + 1, j + 1, enc(v)] for (i, j), v in sorted(self.upper.items())]}


def block_skew(Z, W, B=None) -> SkewMatrix:
    """Assemble [[Z, W], [-W^T, B]] from a SkewMatrix Z, a list-of-rows W and
    an optional SkewMatrix B (zero block when omitted)."""
    m = Z.dim
    n = len(W[0]) if W else (B.dim if B is not None else 0)
    up = dict(Z.upper)
    for i in range(m):
        for j in range(n):
            up[(i, m + j)] = W[i][j]
    if B is not None:
        for (i, j), v in B.upper.items():
            up[(m + i, m + j)] = v
    return SkewMatrix(m + n, up)


def pfaffian(X: SkewMatrix, strict: bool = False, mul=None):
    """Pfaffian by first-row expansion, memoized on the set of surviving indices.

    ``mul`` replaces ring multiplication (used for degree-capped products).
    RationalFn entries are handled by denominator clearing and yield a
    RationalFn.
    """
    m = X.dim
    if m % 2:
        if strict:
            raise OddDimension(f"dimension {m} is odd")
        return 0
    if any(isinstance(v, RationalFn) for v in X.upper.values()):
        return pfaffian_rational(X, mul=mul)
    if m == 0:
        return 1
    up = X.upper
    memo: dict[int, object] = {}
    mult = mul or (lambda a, b: a * b)

    def pf(mask: int):
        if mask == 0:
            return 1
        if mask in memo:
            return memo[mask]
        i = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << i)
        total = None
        sign = 1
        r = rest
        while r:
            low = r & -r
            j = low.bit_length() - 1
            r ^= low
            a = up.get((i, j))
            if a is not None and not _is_zero(a):
                sub = pf(rest & ~low)
                if not _is_zero(sub):
                    t = mult(a, sub)
                    if total is None:
                        total = t if sign > 0 else -t
                    else:
                        total = total + t if sign > 0 else total - t
            sign = -sign
        memo[mask] = 0 if total is None else total
        return memo[mask]

    return pf((1 << m) - 1)


def row_denominators(X: SkewMatrix) -> list[list[SparsePoly]]:
    """Distinct denominators occurring in each row of a RationalFn matrix."""
    dens: list[list[SparsePoly]] = [[] for _ in range(X.dim)]
    for (i, j), v in X.upper.items():
        if isinstance(v, RationalFn) and not v.den.is_constant():
            for r in (i, j):
                if not any(v.den == d for d in dens[r]):
                    dens[r].append(v.den)
    return dens


def clear_denominators(X: SkewMatrix):
    """Scale row and column i by d_i so every entry becomes a polynomial.

    Returns the polynomial matrix and the list d; Pf of the result is
    Pf X times the product of the d_i.
    """
    dens = row_denominators(X)
    d = [_product(ds) for ds in dens]

    def others(r, den):
        # product of the row-r denominators other than den
        out = None
        skipped = False
        for e in dens[r]:
            if not skipped and e == den:
                skipped = True
                continue
            out = e if out is None else out * e
        return out

    up = {}
    for (i, j), v in X.upper.items():
        if isinstance(v, RationalFn):
            num, den = v.num, v.den
            if den.is_constant():
                e = num * (1 / den.constant_term())
                e = _times(_times(e, d[i]), d[j])
            else:
                e = _times(_times(num, others(i, den)), d[j])
        else:
            e = _times(_times(v, d[i]), d[j])
        up[(i, j)] = e
    return SkewMatrix(X.dim, up), d


def _product(ps):
    out = None
    for p in ps:
        out = p if out is None else out * p
    return out


def _times(a, b):
    return a if b is None else a * b


def pfaffian_rational(X: SkewMatrix, mul=None) -> RationalFn:
    Y, d = clear_denominators(X)
    num = pfaffian(Y, mul=mul)
    den = _product([e for e in d if e is not None])
    if not isinstance(num, SparsePoly):
        num = SparsePoly.const(num)
    return RationalFn(num, den if den is not None else SparsePoly.one(num.vars))


def pfaffian_expand(X: SkewMatrix, k: int):
    """Pfaffian by expansion along row k (0-based), sub-Pfaffians by ``pfaffian``."""
    m = X.dim
    if m % 2:
        return 0
    if m == 0:
        return 1
    total = 0
    kk = k + 1
    for i in range(m):
        if i == k:
            continue
        ii = i + 1
        keep = [r for r in range(m) if r not in (i, k)]
        sub = pfaffian(submatrix(X, [r + 1 for r in keep]))
        sign = (-1) ** (kk + ii - 1)
        entry = X[i, k] if i < k else X[k, i]
        total = total + sign * entry * sub
    return total


def _matchings(idx: tuple[int, ...]):
    if not idx:
        yield ()
        return
    a = idx[0]
    for t in range(1, len(idx)):
        b = idx[t]
        rest = idx[1:t] + idx[t + 1:]
        for m in _matchings(rest):
            yield ((a, b),) + m


def _perm_sign(seq: Sequence[int]) -> int:
    inv = sum(1 for p in range(len(seq)) for q in range(p + 1, len(seq)) if seq[p] > seq[q])
    return -1 if inv % 2 else 1


def pfaffian_def(X: SkewMatrix):
    """Pfaffian straight from the sum over F_{2m}, as an independent check."""
    m = X.dim
    if m % 2:
        raise OddDimension(f"dimension {m} is odd")
    if m > 10:
        raise TooLarge(f"enumeration over F_{m} is limited to dimension 10")
    total = 0
    for match in _matchings(tuple(range(m))):
        sigma = [v for pair in match for v in pair]
        term = _perm_sign(sigma)
        for a, b in match:
            term = term * X[a, b]
        total = total + term
    return total


def submatrix(X: SkewMatrix, I: Iterable[int]) -> SkewMatrix:
    """Principal submatrix X(I) for a 1-based index set I."""
    idx = sorted(set(I))
    if idx and (idx[0] < 1 or idx[-1] > X.dim):
        raise IndexOutOfRange(f"{idx} not within [1, {X.dim}]")
    return SkewMatrix.from_function(len(idx), lambda a, b: X[idx[a] - 1, idx[b] - 1])


def sigma_sum(I: Iterable[int]) -> int:
    return sum(I)


def det_bareiss(rows: Sequence[Sequence]) -> object:
    """Fraction-free Gaussian elimination for matrices over an integral domain
    with exact division (integers, rationals, polynomials)."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if _is_zero(a[k][k]):
            for r in range(k + 1, n):
                if not _is_zero(a[r][k]):
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                v = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = _div(v, prev)
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _div(a, b):
    if isinstance(a, SparsePoly) or isinstance(b, SparsePoly):
        if not isinstance(b, SparsePoly):
            return a * (1 / rat(b))
        return exact_divide(a if isinstance(a, SparsePoly) else SparsePoly.const(a), b)
    q = rat(a) / rat(b)
    return q


def laplace_pfaffian(Z: SkewMatrix, W: Sequence[Sequence]):
    """Right side of the Pfaffian Laplace expansion of [[Z, W], [-W^T, O]]."""
    m = Z.dim
    n = len(W[0]) if m and W else 0
    if (m - n) % 2:
        raise ParityMismatch(f"m={m} and n={n} differ in parity")
    if m < n:
        return 0
    if m == n:
        return (-1) ** comb(m, 2) * det(W) if m else 1
    total = 0
    for I in combinations(range(1, m + 1), m - n):
        rest = [r for r in range(1, m + 1) if r not in I]
        minor = det([list(W[r - 1]) for r in rest]) if n else 1
        term = pfaffian(submatrix(Z, I)) * minor
        total = total + (-1) ** (sigma_sum(I) + comb(m, 2)) * term
    return total


def sylvester_check(X: SkewMatrix, n: int, m: int) -> bool:
    """Check the Pfaffian Sylvester identity for the split dim = n + m.

    Both sides live in the fraction field; we compare them after clearing
    the common denominator Pf X([n])^(m/2).
    """
    if n % 2 or m % 2 or n + m != X.dim:
        raise ParityMismatch(f"need even n, m with n + m = {X.dim}")
    head = list(range(1, n + 1))
    p = pfaffian(submatrix(X, head))
    if _is_zero(p):
        raise ZeroPivotPfaffian("Pf X([n]) vanishes")
    Y = SkewMatrix.from_function(
        m, lambda i, j: pfaffian(submatrix(X, head + [n + i + 1, n + j + 1])))
    lhs = pfaffian(Y)
    rhs = pfaffian(X) * p ** (m // 2 - 1) if m else p ** 0
    if m == 0:
        return True
    return _is_zero(lhs - rhs)


def _matmul_t(S, T):
    """S times the transpose of T."""
    return [[sum((S[i][k] * T[j][k] for k in range(len(S[i]))), 0) for j in range(len(T))]
            for i in range(len(S))]


def _neg(X: SkewMatrix) -> SkewMatrix:
    return X.map(lambda v: -v)


def cauchy_binet_pf(A: SkewMatrix, B: SkewMatrix, S, T, variant: int = 1):
    """Both sides of the Pfaffian Cauchy-Binet formula (variant 1 or 2)."""
    m, n = A.dim, B.dim
    if (m - n) % 2:
        raise ParityMismatch(f"m={m} and n={n} differ in parity")
    l = len(S[0]) if S and S[0] is not None and len(S[0]) else (len(T[0]) if T else 0)
    left = 0
    for size in range(m % 2, l + 1, 2):
        for I in combinations(range(l), size):
            SI = [[S[i][k] for k in I] for i in range(m)]
            TI = [[T[i][k] for k in I] for i in range(n)]
            pa = pfaffian(block_skew(A, SI) if m else _zero_block(SI, size))
            pb = pfaffian(block_skew(B, TI) if n else _zero_block(TI, size))
            term = pa * pb
            if variant == 1:
                term = (-1) ** comb(size, 2) * term
            left = left + term
    ST = _matmul_t(S, T) if m and n else [[] for _ in range(m)]
    if variant == 1:
        right = pfaffian(block_skew(A, ST, B) if m else B)
    else:
        nb = _neg(B)
        right = (-1) ** comb(n, 2) * pfaffian(block_skew(A, ST, nb) if m else nb)
    return left, right


def _zero_block(W, size):
    # [[O_0, W], [-W^T, O]] with an empty top block is the zero matrix of order size
    return SkewMatrix(size, {})
