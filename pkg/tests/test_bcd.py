import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pfq.arith import SparsePoly
from pfq.bcd import (F_TABLE, TYPES, bcd_gf_checks, bcd_p, bcd_q, f_table_check, laurent_to_u,
                     phi_minus_psi_check, phi_psi, schur_pf_check, symmetry_check, u_to_laurent,
                     uvars, weyl_check, weyl_oracle)
from pfq.errors import NotReciprocal, TooManyVariables
from pfq.partitions import enumerate_strict

x1, x2 = SparsePoly.var("x1"), SparsePoly.var("x2")
u1 = SparsePoly.var("u1")


def test_small_values():
    assert bcd_q("C", (1,), 1).value_laurent == 2 * x1 + 2 * x1 ** -1
    assert bcd_q("D", (2,), 1).value_u == 2 * u1 ** 2 - 4
    assert bcd_q("B", (1,), 1).value_u == 2 * u1 + 4
    assert bcd_q("C", (), 2).value_u == 1


def test_length_guard():
    with pytest.raises(ValueError):
        bcd_q("B", (2, 1), 1)
    with pytest.raises(ValueError):
        bcd_q("E", (1,), 1)


def test_frozen_values_in_shifted_variables(oracle):
    # P^X in u-variables is the frozen P-function of the matching sequence
    for e in oracle["P"]:
        if not e["seq"].startswith("type") or len(e["partition"]) > e["n"]:
            continue
        X, lam, n = e["seq"][-1], tuple(e["partition"]), e["n"]
        want = SparsePoly.from_json(e["value"]).rename({f"x{i}": f"u{i}" for i in range(1, n + 1)})
        assert bcd_q(X, lam, n).value_u == want * 2 ** len(lam)
        assert bcd_p(X, lam, n) == u_to_laurent(want, n)


def test_table():
    rep = f_table_check()
    assert rep.ok, rep.failures
    assert F_TABLE["D"][2] == (-2, 0, 1)


@pytest.mark.parametrize("X", TYPES)
@pytest.mark.parametrize("n", [1, 2, 3])
def test_signed_permutation_oracle(X, n):
    for lam in enumerate_strict(3, n):
        assert weyl_check(X, lam, n), lam


def test_oracle_variable_cap():
    with pytest.raises(TooManyVariables):
        weyl_oracle("B", (1,), 4)


@pytest.mark.parametrize("X", TYPES)
def test_generating_functions(X):
    for n in (1, 2):
        rep = bcd_gf_checks(X, n, 4)
        assert rep.ok, rep.failures


def test_phi_psi():
    assert phi_minus_psi_check(6)
    phi, psi = phi_psi("C", 4)
    assert phi.coeffs[0] == 1 and not psi


@pytest.mark.parametrize("X", TYPES)
def test_schur_type_pfaffian(X):
    for n in (2, 3):
        for lam in enumerate_strict(4, n):
            assert schur_pf_check(X, lam, n), lam


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(TYPES), st.integers(1, 3), st.data())
def test_laurent_symmetry(X, n, data):
    lam = data.draw(st.sampled_from(enumerate_strict(4, n)))
    assert symmetry_check(bcd_q(X, lam, n))


@settings(max_examples=30)
@given(st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), st.integers(-3, 3), max_size=5))
def test_u_laurent_roundtrip(d):
    p = SparsePoly(uvars(2), d)
    assert laurent_to_u(u_to_laurent(p, 2), 2) == p


def test_non_reciprocal_rejected():
    with pytest.raises(NotReciprocal):
        laurent_to_u(x1 + 2 * x1 ** -1, 1)
