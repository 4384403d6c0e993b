import pytest
from gmpy2 import mpq
from hypothesis import given, settings
from hypothesis import strategies as st

from pfq.arith import SparsePoly
from pfq.errors import OrderTooLow
from pfq.kernels import xvars
from pfq.partitions import StrictPartition, enumerate_strict
from pfq.pfunc import (ROUTES, basis_change_check, basis_rank_check, cauchy_check, change_basis,
                       dual_p, gf_checks, ns_interpolation_check, p_function, stability_check,
                       staircase_check, symmetric, triple_route_check)
from pfq.sequences import parse_sequence, standard_sequences, symbolic_factorial

SPECS = {"monomial": "monomial", "typeB": "typeB", "typeC": "typeC", "typeD": "typeD",
         "factorial": "factorial:symbolic"}
SEQS = standard_sequences()


def x(i):
    return SparsePoly.var(f"x{i}")


def as_poly(v):
    return v if isinstance(v, SparsePoly) else SparsePoly.const(v)


@pytest.mark.parametrize("route", ROUTES)
def test_frozen_values(oracle, route):
    for entry in oracle["P"]:
        F = parse_sequence(SPECS[entry["seq"]])
        lam, n = tuple(entry["partition"]), entry["n"]
        if route == "hl" and len(lam) > n:
            continue
        got = as_poly(p_function(F, lam, n, route))
        assert got == SparsePoly.from_json(entry["value"]), (entry["seq"], lam, n)


def test_classical_small_values():
    F = parse_sequence("monomial")
    assert p_function(F, (2,), 2) == (x(1) + x(2)) ** 2
    assert p_function(F, (2, 1), 2) == x(1) * x(2) * (x(1) + x(2))
    assert p_function(F, (1,), 3) == x(1) + x(2) + x(3)


def test_too_long_partition_vanishes():
    for route in ("nimmo", "schur"):
        assert as_poly(p_function(SEQS[0], (3, 2, 1), 2, route)).is_zero()


def test_unknown_route():
    with pytest.raises(ValueError):
        p_function(SEQS[0], (1,), 1, "nope")


@pytest.mark.parametrize("F", SEQS, ids=str)
@pytest.mark.parametrize("n", [1, 2, 3])
def test_three_routes_agree(F, n):
    rep = triple_route_check(F, 4, n)
    assert rep.ok, rep.failures


partitions = st.sets(st.integers(1, 4), max_size=3).map(lambda s: tuple(sorted(s, reverse=True)))


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(SEQS), partitions, st.integers(1, 3))
def test_symmetric_in_the_variables(F, lam, n):
    p = as_poly(p_function(F, lam, n))
    assert symmetric(p, xvars(n))


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(SEQS), partitions, st.integers(1, 3))
def test_leading_monomial(F, lam, n):
    # the top-degree part starts at x^lambda with coefficient prod lc(f)
    p = as_poly(p_function(F, lam, n))
    if len(lam) > n:
        assert p.is_zero()
        return
    exps = tuple(lam) + (0,) * (n - len(lam))
    lc = mpq(1)
    for k in lam:
        lc *= F.leading(k)
    assert p.coeff(dict(zip(xvars(n), exps))) == lc
    assert p.degree() == sum(lam)


def test_monomial_dual_is_q_function():
    F = SEQS[0]
    for lam in enumerate_strict(4, 2):
        q = dual_p(F, lam, 2, lam.weight)
        assert q.truncate(xvars(2), lam.weight) == p_function(F, lam, 2) * 2 ** lam.length


def test_dual_order_guard():
    with pytest.raises(OrderTooLow):
        dual_p(SEQS[0], (3, 1), 2, 3)


@pytest.mark.parametrize("F", [SEQS[0], symbolic_factorial()], ids=str)
def test_cauchy_identity(F):
    assert cauchy_check(F, 2, 4)


@pytest.mark.parametrize("F", SEQS, ids=str)
def test_generating_functions(F):
    for n in (1, 2):
        rep = gf_checks(F, n, 4)
        assert rep.ok, rep.failures


@pytest.mark.parametrize("F", SEQS, ids=str)
def test_stability(F):
    for n in (1, 2):
        for lam in enumerate_strict(3, n):
            rep = stability_check(F, lam, n)
            assert rep.ok, rep.failures


def test_one_zero_variable_shifts_one_row_by_constant_term():
    F = parse_sequence("typeD")
    # f_2(0) = -2, so setting x_2 = 0 in two variables adds (-1)^1 * (-2)
    full = p_function(F, (2,), 2).subs({"x2": 0})
    assert full == p_function(F, (2,), 1) + 2


def test_basis_change_examples():
    mono, typeC = SEQS[0], SEQS[3]
    coeffs = change_basis(typeC, mono, (2,), 2)
    assert coeffs == {StrictPartition((2,)): 1}
    for lam in enumerate_strict(3, 2):
        rep = basis_change_check(SEQS[2], SEQS[1], lam, 2)
        assert rep.ok, rep.failures


@pytest.mark.parametrize("F", SEQS, ids=str)
def test_basis_structure(F):
    assert basis_rank_check(F, 2, 4)
    assert staircase_check(F, (1,), 2)
    assert staircase_check(F, (1, 1), 3)
    assert ns_interpolation_check(F, (2, 1), 2, 1)
