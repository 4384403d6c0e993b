import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pfq.arith import SparsePoly
from pfq.kernels import xvars
from pfq.partitions import enumerate_strict
from pfq.pfaffian import SkewMatrix, pfaffian
from pfq.pfunc import nimmo_p, one_row, two_row
from pfq.sequences import make_sequence, parse_sequence, standard_sequences, symbolic_factorial
from pfq.skew import (branching_check, factorial_r_check, factorial_r_closed_form,
                      factorial_single_var_r, m_matrix, p_independence_check, r_coeff, r_det,
                      rel_e_check, skew_p, skew_single_var)

X1 = SparsePoly.var("x1")
A0 = SparsePoly.var("a0")


def test_trivial_skews():
    F = symbolic_factorial()
    assert skew_p(F, (3, 1), (3, 1), 0, 2) == 1
    assert skew_p(F, (2, 1), (), 0, 2) == nimmo_p(F, (2, 1), 2)
    assert skew_p(F, (2,), (3,), 0, 2) == 0


@pytest.mark.parametrize("F", [parse_sequence("monomial"), symbolic_factorial(), parse_sequence("typeB")], ids=str)
@pytest.mark.parametrize("n,p", [(1, 1), (2, 1), (1, 2), (2, 2)])
def test_branching(F, n, p):
    for lam in enumerate_strict(4, n + p):
        assert branching_check(F, lam, n, p), lam


def _unreversed_skew(F, lam, mu, xs):
    # same Pfaffian as skew_p but with the M columns in the natural order
    r, s = len(lam), len(mu)
    up = {(i, j): two_row(F, lam[i], lam[j], xs) for i in range(r) for j in range(i + 1, r)}
    for i in range(r):
        for j in range(s):
            up[(i, r + j)] = r_coeff(F, lam[i], mu[j], xs)
    return pfaffian(SkewMatrix(r + s, up))


def test_m_columns_run_in_reversed_order():
    F = parse_sequence("monomial")
    xs = xvars(2)
    lam, mu = (4, 2), (2, 1)
    good = skew_p(F, lam, mu, 0, xs)
    assert good and branching_check(F, lam, 2, 2)
    # natural column order flips the sign when l(mu) = 2
    assert _unreversed_skew(F, lam, mu, xs) == -good
    M = m_matrix(F, lam, mu, xs)
    assert M[0][0] == r_coeff(F, 4, 1, xs)


def test_r_coefficient_carries_factor_two():
    # P_(2)(x, y) = x^2 + 2xy + y^2, so R_{2/1} = 2x
    F = parse_sequence("monomial")
    assert r_coeff(F, 2, 1, ("x1",)) == 2 * X1
    assert r_coeff(F, 2, 0, ("x1",)) == X1 ** 2
    # factorial: R_{3/1} is twice P_(2)(x | 0, a_2), not P_(2) itself
    G = symbolic_factorial()
    shifted = one_row(make_sequence("factorial", (0, "a2")), 2, ("x1",))
    assert r_coeff(G, 3, 1, ("x1",)) == 2 * shifted
    assert factorial_r_closed_form(G, 3, 1, ("x1",)) == 2 * shifted


@pytest.mark.parametrize("n", [1, 2, 3])
def test_factorial_r_closed_forms(n):
    rep = factorial_r_check(symbolic_factorial(), 4, n)
    assert rep.ok, rep.failures


def test_single_variable_r():
    G = symbolic_factorial()
    a1, a2 = SparsePoly.var("a1"), SparsePoly.var("a2")
    assert factorial_single_var_r(G, 3, 0) == (X1 + A0) * (X1 - a1) * (X1 - a2)
    assert factorial_single_var_r(G, 3, 1) == 2 * X1 * (X1 - a2)


def test_padded_column_holds_one_row_value():
    G = symbolic_factorial()
    assert skew_p(G, (1,), (), 0, ("x1",)) == X1 - A0
    assert skew_single_var(G, (1,), (), 0) == X1 - A0
    # the plain R column gives the other sign of a_0
    assert r_det(G, (1,), (), ("x1",)) == X1 + A0


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([symbolic_factorial()] + [F for F in standard_sequences() if F.constant_term_free]),
       st.integers(0, 5), st.data())
def test_single_variable_determinants(F, w, data):
    lams = enumerate_strict(w, w)
    lam = data.draw(st.sampled_from(lams))
    mu = data.draw(st.sampled_from(enumerate_strict(lam.weight, lam.length)))
    p = data.draw(st.integers(0, 1))
    assert skew_single_var(F, lam, mu, p) == skew_p(F, lam, mu, p, ("x1",))


def test_p_parity_only():
    F = symbolic_factorial()
    assert skew_p(F, (3, 1), (1,), 2, 2) == skew_p(F, (3, 1), (1,), 0, 2)


@pytest.mark.parametrize("F", [F for F in standard_sequences() if F.constant_term_free], ids=str)
def test_constant_term_free_skew_ignores_p(F):
    assert p_independence_check(F, 4, 2)


@pytest.mark.parametrize("r", range(1, 6))
def test_elementary_splitting(r):
    assert rel_e_check(r)
