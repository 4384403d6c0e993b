import pytest
from gmpy2 import mpq
from hypothesis import given
from hypothesis import strategies as st

from pfq.arith import SparsePoly, TruncSeries
from pfq.errors import NotAdmissible
from pfq.sequences import (biorthogonality_check, dual_solve, factorial_dual_check,
                           factorial_dual_closed, factorial_dual_identities, from_f_basis, pairing,
                           parse_sequence, standard_sequences, symbolic_factorial, to_f_basis)

u = SparsePoly.var("u")


def test_frozen_type_tables(oracle):
    for kind, fs in oracle["f"].items():
        F = parse_sequence(kind)
        for d, f in enumerate(fs):
            assert F.f(d) == SparsePoly.from_json(f), (kind, d)


def test_small_values():
    assert parse_sequence("typeB").f(1) == u + 2
    assert parse_sequence("typeC").f(2) == u ** 2
    assert parse_sequence("typeD").f(2) == u ** 2 - 2
    F = parse_sequence("factorial:1,2,3")
    assert F.f(2) == (u - 1) * (u - 2)


def test_cyclic_parameters_wrap():
    F = parse_sequence("factorial:cyclic:a0,a1,a2")
    assert F.a(4) == SparsePoly.var("a1")
    assert F.spec() == "factorial:cyclic:a0,a1,a2"


def test_constant_term_free():
    flags = {F.spec(): F.constant_term_free for F in standard_sequences()}
    assert flags["monomial"] and flags["typeC"]
    assert not flags["typeB"] and not flags["typeD"]
    assert parse_sequence("factorial:0,5").constant_term_free
    assert not parse_sequence("factorial:1,5").constant_term_free


@pytest.mark.parametrize("text", ["nonsense", "factorial:", "factorial:cyclic:"])
def test_bad_specs(text):
    with pytest.raises(NotAdmissible):
        parse_sequence(text)


def test_explicit_factorial_runs_out_of_parameters():
    F = parse_sequence("factorial:1,2")
    with pytest.raises(NotAdmissible):
        F.f(3)


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=6), st.sampled_from(["typeB", "typeC", "typeD", "factorial:2,-1,3,1,0,4"]))
def test_basis_roundtrip(cs, spec):
    F = parse_sequence(spec)
    p = sum((c * u ** k for k, c in enumerate(cs)), SparsePoly.zero(("u",)))
    assert from_f_basis(to_f_basis(p, F), F) == p


@pytest.mark.parametrize("F", standard_sequences() + [symbolic_factorial()], ids=str)
def test_biorthogonal_duals(F):
    assert biorthogonality_check(F, 6)


def test_monomial_dual_is_twice_the_power():
    dual = dual_solve(parse_sequence("monomial"), 5)
    assert dual.fhat(0) == TruncSeries.constant(1, "v", 5)
    assert dual.fhat(3) == TruncSeries("v", 5, [0, 0, 0, 2])


def test_pairing_weights():
    g = TruncSeries("u", 3, [5, 7, 0, 4])
    assert pairing(1 + u + u ** 3, g) == 5 + mpq(7, 2) + 2


def test_factorial_dual_closed_form():
    F = symbolic_factorial()
    assert factorial_dual_check(F, 6)
    a0 = SparsePoly.var("a0")
    zero = factorial_dual_closed(F, 0, 3)
    assert zero.coeffs[1] == 2 * a0 and zero.coeffs[2] == 2 * a0 ** 2


@pytest.mark.parametrize("r", range(1, 7))
def test_partial_fraction_identities(r):
    assert factorial_dual_identities(r, 6) == (True, True)
