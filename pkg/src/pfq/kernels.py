"""Schur-type kernels A, Delta, Pi, B and their x + 1/x analogues, with the
Pfaffian evaluations they satisfy."""

from __future__ import annotations

from math import comb
from typing import Sequence

from .arith import SparsePoly
from .factored import FactoredFn
from .pfaffian import SkewMatrix, block_skew, pfaffian
from .report import Report


def xvars(n: int, name: str = "x") -> tuple[str, ...]:
    return tuple(f"{name}{i}" for i in range(1, n + 1))


def _v(name: str) -> SparsePoly:
    return SparsePoly.var(name)


def _rf(num, *dens) -> FactoredFn:
    return FactoredFn(num, dens)


def _one() -> FactoredFn:
    return FactoredFn(1)


def _product(factors) -> FactoredFn:
    out = _one()
    for f in factors:
        out = out * f
    return out


# classical kernels

def a_entry(xi: str, xj: str) -> FactoredFn:
    return _rf(_v(xj) - _v(xi), _v(xj) + _v(xi))


def kernel_A(xs: Sequence[str]) -> SkewMatrix:
    return SkewMatrix.from_function(len(xs), lambda i, j: a_entry(xs[i], xs[j]))


def delta(xs: Sequence[str]) -> FactoredFn:
    return _product(a_entry(xs[i], xs[j]) for i in range(len(xs)) for j in range(i + 1, len(xs)))


def delta_divisor(xs: Sequence[str]) -> SparsePoly:
    """prod_{i<j} (x_i + x_j)(x_j - x_i): the polynomial that Delta-division
    amounts to once rows are scaled by prod_{k != i} (x_i + x_k)."""
    out = SparsePoly.one(tuple(xs))
    for i in range(len(xs)):
        for j in range(i + 1, len(xs)):
            out = out * ((_v(xs[i]) + _v(xs[j])) * (_v(xs[j]) - _v(xs[i])))
    return out


def b_entry(x: str, y: str) -> FactoredFn:
    p = _v(x) * _v(y)
    return _rf(1 + p, 1 - p)


def kernel_B(xs: Sequence[str], ys: Sequence[str]) -> list[list[FactoredFn]]:
    return [[b_entry(x, y) for y in ys] for x in xs]


def pi_kernel(xs: Sequence[str], ys: Sequence[str]) -> FactoredFn:
    return _product(b_entry(x, y) for x in xs for y in ys)


def _ones(n: int) -> list[list]:
    return [[_one()] for _ in range(n)]


def _neg(X: SkewMatrix) -> SkewMatrix:
    return X.map(lambda v: -v)


def _cols(*cols) -> list[list]:
    return [list(r) for r in zip(*cols)]


def schur_pf_checks(n: int, p: int = 0) -> Report:
    """Schur's Pfaffian evaluation and its variations for n x-variables and
    p y-variables (entries compared as rational functions)."""
    rep = Report(f"schur-pfaffian n={n} p={p}")
    xs, ys = xvars(n), xvars(p, "y")
    A = kernel_A(xs)
    D = delta(xs)
    if n % 2 == 0:
        rep.check("Pf A = Delta", pfaffian(A) == D)
    else:
        rep.check("Pf [[A, 1], [-1, 0]] = Delta", pfaffian(block_skew(A, _ones(n))) == D)
    if (n + p) % 2 == 0 and p:
        X = block_skew(A, kernel_B(xs, ys), _neg(kernel_A(ys)))
        rhs = (-1) ** comb(p, 2) * D * delta(ys) * pi_kernel(xs, ys)
        rep.check("Pf [[A(x), B], [-B^T, -A(y)]]", pfaffian(X) == rhs)
    bz = [b_entry(x, "z") for x in xs]
    bw = [b_entry(x, "w") for x in xs]
    pz, pw = pi_kernel(xs, ["z"]), pi_kernel(xs, ["w"])
    zw = _rf(_v("z") - _v("w"), _v("z") + _v("w"))
    if n % 2 == 0:
        X = block_skew(A, _cols(bz, bw))
        rhs = D * zw * (pz * pw - 1)
        rep.check("Pf with B_z, B_w (n even)", pfaffian(X) == rhs)
    else:
        X = block_skew(A, _cols(bz, bw, [_one()] * n))
        rhs = D * (zw * (pz * pw - 1) - pz + pw)
        rep.check("Pf with B_z, B_w, 1 (n odd)", pfaffian(X) == rhs)
    return rep


# x + 1/x kernels

def a_tilde_entry(xi: str, xj: str) -> FactoredFn:
    """(X_j - X_i) / (X_j + X_i) with X = x + 1/x, cleared of 1/x."""
    a, b = _v(xi), _v(xj)
    return _rf((b - a) * (a * b - 1), b + a, 1 + a * b)


def kernel_A_tilde(xs: Sequence[str]) -> SkewMatrix:
    return SkewMatrix.from_function(len(xs), lambda i, j: a_tilde_entry(xs[i], xs[j]))


def delta_tilde(xs: Sequence[str]) -> FactoredFn:
    return _product(a_tilde_entry(xs[i], xs[j])
                    for i in range(len(xs)) for j in range(i + 1, len(xs)))


def b_tilde_entry(x: str, y: str) -> FactoredFn:
    """(1 - xy)(1 - y/x) / ((1 + xy)(1 + y/x)), cleared of 1/x."""
    X, Y = _v(x), _v(y)
    return _rf((1 - X * Y) * (X - Y), 1 + X * Y, X + Y)


def kernel_B_tilde(xs, ys) -> list[list[FactoredFn]]:
    return [[b_tilde_entry(x, y) for y in ys] for x in xs]


def pi_tilde(xs: Sequence[str], ys: Sequence[str]) -> FactoredFn:
    return _product(b_tilde_entry(x, y) for x in xs for y in ys)


def zw_tilde() -> FactoredFn:
    z, w = _v("z"), _v("w")
    return _rf((z - w) * (1 - z * w), z + w, 1 + z * w)


def tilde_kernel_checks(n: int, p: int = 0) -> Report:
    """The x + 1/x versions of the Schur Pfaffian evaluations."""
    rep = Report(f"tilde-kernels n={n} p={p}")
    xs, ys = xvars(n), xvars(p, "y")
    A = kernel_A_tilde(xs)
    D = delta_tilde(xs)
    if n % 2 == 0:
        rep.check("Pf A~ = Delta~", pfaffian(A) == D)
    else:
        rep.check("Pf [[A~, 1], [-1, 0]] = Delta~", pfaffian(block_skew(A, _ones(n))) == D)
    if (n + p) % 2 == 0 and p:
        # B~ is the A-kernel between x + 1/x and y + 1/y, so the y block enters
        # with a plus sign and no extra sign appears on the right
        X = block_skew(A, kernel_B_tilde(xs, ys), kernel_A_tilde(ys))
        rhs = D * delta_tilde(ys) * pi_tilde(xs, ys)
        rep.check("Pf [[A~(x), B~], [-B~^T, A~(y)]]", pfaffian(X) == rhs)
    bz = [b_tilde_entry(x, "z") for x in xs]
    bw = [b_tilde_entry(x, "w") for x in xs]
    pz, pw = pi_tilde(xs, ["z"]), pi_tilde(xs, ["w"])
    k = zw_tilde()
    if n % 2 == 0:
        X = block_skew(A, _cols(bz, bw))
        rep.check("Pf with B~_z, B~_w (n even)", pfaffian(X) == D * k * (pz * pw - 1))
    else:
        X = block_skew(A, _cols(bz, bw, [_one()] * n))
        rep.check("Pf with B~_z, B~_w, 1 (n odd)",
                  pfaffian(X) == D * (k * (pz * pw - 1) - pz + pw))
    return rep
