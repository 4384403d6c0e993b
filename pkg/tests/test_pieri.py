import pytest
from gmpy2 import mpq
from hypothesis import given, settings
from hypothesis import strategies as st

from pfq.arith import SparsePoly, TruncSeries
from pfq.partitions import StrictPartition, enumerate_strict
from pfq.pieri import (EXAMPLE_LAMBDA, EXAMPLE_MU, factorial_b_check, b_table, coefficient_signs,
                       ctf_padding_check, fac_pieri_product, morris_rule, pieri_case, pieri_check,
                       pieri_det, pieri_direct, example_product)
from pfq.sequences import make_sequence, parse_sequence, standard_sequences, symbolic_factorial

SPECS = {"monomial": "monomial", "typeC": "typeC", "factorial": "factorial:symbolic"}
A = [SparsePoly.var(f"a{i}") for i in range(4)]


def _n_parity(n):
    return "even" if n % 2 == 0 else "odd"


def test_frozen_direct_expansions(oracle):
    for e in oracle["pieri"]:
        F = parse_sequence(SPECS[e["seq"]])
        got = {lam.parts: c for lam, c in pieri_direct(F, tuple(e["mu"]), e["r"], e["n"]).items() if c}
        want = {tuple(lam): SparsePoly.from_json(c) for lam, c in e["coefficients"]}
        assert got.keys() == want.keys(), e
        assert all(want[k] == got[k] for k in want), e


def test_frozen_values_through_the_determinant(oracle):
    for e in oracle["pieri"]:
        F = parse_sequence(SPECS[e["seq"]])
        want = {tuple(lam): SparsePoly.from_json(c) for lam, c in e["coefficients"]}
        r, mu = e["r"], tuple(e["mu"])
        for lam in enumerate_strict(sum(mu) + r, e["n"]):
            c = pieri_det(F, lam, mu, _n_parity(e["n"]), r).coeffs[r]
            assert want.get(lam.parts, SparsePoly.zero()) == c, (e["seq"], mu, r, e["n"], lam)


def test_factorial_mu2_r2_four_variables():
    F = symbolic_factorial()
    direct = pieri_direct(F, (2,), 2, 4)
    for lam in enumerate_strict(4, 4):
        c = pieri_det(F, lam, (2,), "even", 2).coeffs[2]
        assert direct.get(lam, 0) == c, lam
    assert direct[StrictPartition((4,))] == 2
    # two separate strips
    assert direct[StrictPartition((3, 1))] == 4


def test_a0_term_tracks_parity_of_n_plus_length():
    # mu = (2), r = 1: the fixed-row coefficient picks up a_0 only when n + l(mu) is odd
    F = symbolic_factorial()
    lam = StrictPartition((2,))
    assert pieri_direct(F, (2,), 1, 2)[lam] == 2 * A[0] + 2 * A[2]
    assert pieri_direct(F, (2,), 1, 3)[lam] == 2 * A[2]
    assert pieri_det(F, (2,), (2,), "even", 1).coeffs[1] == 2 * A[0] + 2 * A[2]
    assert pieri_det(F, (2,), (2,), "odd", 1).coeffs[1] == 2 * A[2]


def test_case_table():
    assert pieri_case((3, 1), (2, 1), "even") == ((3, 1), (2, 1))
    assert pieri_case((3, 1), (2, 1), "odd") == ((3, 1, 0), (2, 1, 0))
    assert pieri_case((3, 1), (2,), "odd") == ((3, 1), (2, 0))
    assert pieri_case((3,), (2, 1), "even") == ((3, 0), (2, 1))
    assert pieri_case((3,), (2, 1), "odd") is None
    assert pieri_case((4, 2, 1), (2,), "even") is None
    with pytest.raises(ValueError):
        pieri_case((1,), (), "sideways")


def test_parity_accepts_integers():
    F = symbolic_factorial()
    assert pieri_det(F, (3, 1), (2,), 0, 3) == pieri_det(F, (3, 1), (2,), "even", 3)


@pytest.mark.parametrize("F", standard_sequences(), ids=str)
@pytest.mark.parametrize("mu", [(), (1,), (2, 1)])
def test_determinant_matches_direct(F, mu):
    for r in (1, 2):
        for n in (len(mu) + 1, len(mu) + 2):
            rep = pieri_check(F, mu, r, n)
            assert rep.ok, rep.failures


def test_example_parity_branches():
    F = symbolic_factorial()
    even = pieri_det(F, EXAMPLE_LAMBDA, EXAMPLE_MU, "even", 8)
    odd = pieri_det(F, EXAMPLE_LAMBDA, EXAMPLE_MU, "odd", 8)
    assert even == example_product("long", 8)
    assert odd == example_product("short", 8)
    assert even != odd
    # lowest term is 4 z^5
    assert even.valuation() == odd.valuation() == 5
    assert even.coeffs[5] == 4


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 6), st.data())
def test_product_formula_matches_determinant(w, data):
    F = symbolic_factorial()
    lam = data.draw(st.sampled_from(enumerate_strict(w, w)))
    mu = data.draw(st.sampled_from(enumerate_strict(lam.weight, lam.length)))
    par = data.draw(st.sampled_from(["even", "odd"]))
    N = lam.weight - mu.weight
    assert fac_pieri_product(lam, mu, par, N, F) == pieri_det(F, lam, mu, par, N)


def test_block_gives_zero():
    assert not fac_pieri_product((4, 3), (2,), "even", 5)
    assert not pieri_det(symbolic_factorial(), (4, 3), (2,), "even", 5)


def test_not_contained_gives_zero():
    assert not fac_pieri_product((3,), (4,), "even", 3)


def test_factorial_b_closed_form():
    rep = factorial_b_check(4, 6, 4)
    assert rep.ok, rep.failures


def test_b_table_diagonal():
    F = symbolic_factorial()
    t = b_table(F, 2, 3)
    a2 = A[2]
    assert t(2, 2) == TruncSeries("z", 3, [1, 2 * a2, 2 * a2 ** 2, 2 * a2 ** 3])
    assert not t(1, 2)


def test_classical_rule():
    assert morris_rule((1,), 1) == {StrictPartition((2,)): 2}
    assert morris_rule((2, 1), 2) == {StrictPartition((4, 1)): 2, StrictPartition((3, 2)): 2}
    # disconnected skew shape: two strips give 4
    assert morris_rule((2,), 2)[StrictPartition((3, 1))] == 4


@pytest.mark.parametrize("mu", [(1,), (2,), (2, 1), (3, 1)])
def test_classical_rule_is_the_zero_specialization(mu):
    F = make_sequence("factorial", ("0",), cycle=True)
    for r in (1, 2, 3):
        rule = morris_rule(mu, r)
        for lam in enumerate_strict(sum(mu) + r, len(mu) + r):
            if lam.weight != sum(mu) + r:
                continue
            for par in ("even", "odd"):
                assert fac_pieri_product(lam, mu, par, r, F).coeffs[r] == rule.get(lam, 0)


def test_classical_rule_matches_direct_expansion():
    F = parse_sequence("monomial")
    got = {lam: c for lam, c in pieri_direct(F, (2, 1), 2, 5).items() if c}
    assert got == morris_rule((2, 1), 2)


@pytest.mark.parametrize("F", [F for F in standard_sequences() if F.constant_term_free], ids=str)
def test_constant_term_free_padding(F):
    rep = ctf_padding_check(F, 4, 4)
    assert rep.ok, rep.failures


def test_coefficient_signs():
    assert coefficient_signs(mpq(3)) == (1, 0)
    assert coefficient_signs(0) == (0, 0)
    assert coefficient_signs(A[0] - 2 * A[1] + 5) == (2, 1)
