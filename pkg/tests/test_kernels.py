import pytest

from pfq.arith import SparsePoly
from pfq.factored import FactoredFn
from pfq.kernels import (a_tilde_entry, b_tilde_entry, delta, kernel_A, pi_tilde, schur_pf_checks,
                         tilde_kernel_checks, xvars, zw_tilde)
from pfq.pfaffian import SkewMatrix, block_skew, pfaffian


def v(name):
    return SparsePoly.var(name)


def test_pf_of_a_is_delta_for_two():
    A = kernel_A(xvars(2))
    assert pfaffian(A) == FactoredFn(v("x2") - v("x1"), [v("x1") + v("x2")])
    assert pfaffian(A) == delta(xvars(2))


@pytest.mark.parametrize("n,p", [(n, p) for n in range(1, 5) for p in range(0, 3) if n + p <= 6])
def test_classical_kernel_identities(n, p):
    rep = schur_pf_checks(n, p)
    assert rep.checks and rep.ok, rep.failures


@pytest.mark.parametrize("n,p", [(n, p) for n in range(1, 4) for p in range(0, 3)])
def test_tilde_kernel_identities(n, p):
    rep = tilde_kernel_checks(n, p)
    assert rep.checks and rep.ok, rep.failures


def _big(x):
    return FactoredFn(v(x) * v(x) + 1, [v(x)])


def test_a_tilde_is_the_quotient_of_shifted_variables():
    # A~_12 (X_2 + X_1) = X_2 - X_1 with X = x + 1/x
    X1, X2 = _big("x1"), _big("x2")
    assert a_tilde_entry("x1", "x2") * (X2 + X1) == X2 - X1


def test_a_tilde_sign_of_simplified_form():
    # (x_j - x_i)(1 - x_i x_j) / ((x_j + x_i)(1 + x_i x_j)) is minus the kernel
    flipped = FactoredFn((v("x2") - v("x1")) * (1 - v("x1") * v("x2")),
                         [v("x2") + v("x1"), 1 + v("x1") * v("x2")])
    assert flipped == -a_tilde_entry("x1", "x2")


def test_flipped_simplification_breaks_the_two_column_identity():
    xs = xvars(2)
    flipped = -a_tilde_entry(*xs)
    A = SkewMatrix(2, {(0, 1): flipped})
    D = flipped
    cols = [[b_tilde_entry(x, "z"), b_tilde_entry(x, "w")] for x in xs]
    rhs = D * zw_tilde() * (pi_tilde(xs, ["z"]) * pi_tilde(xs, ["w"]) - 1)
    assert pfaffian(block_skew(A, cols)) != rhs
