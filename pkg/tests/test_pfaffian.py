import random
import pytest
from gmpy2 import mpq
from hypothesis import given, settings
from hypothesis import strategies as st

from pfq.arith import SparsePoly, det
from pfq.errors import IndexOutOfRange, OddDimension, ParityMismatch
from pfq.pfaffian import (SkewMatrix, block_skew, cauchy_binet_pf, det_bareiss, laplace_pfaffian,
                          pfaffian, pfaffian_def, pfaffian_expand, submatrix, sylvester_check)


def skew(dim, vals):
    it = iter(vals)
    return SkewMatrix.from_function(dim, lambda i, j: mpq(next(it)))


@st.composite
def skew_matrices(draw, dims=(0, 2, 4, 6)):
    dim = draw(st.sampled_from(dims))
    vals = draw(st.lists(st.integers(-5, 5), min_size=dim * (dim - 1) // 2,
                         max_size=dim * (dim - 1) // 2))
    return skew(dim, vals)


def sym(i, j):
    return SparsePoly.var(f"x{i}{j}")


def test_four_by_four_symbolic():
    X = SkewMatrix.from_function(4, lambda i, j: sym(i + 1, j + 1))
    expected = sym(1, 2) * sym(3, 4) - sym(1, 3) * sym(2, 4) + sym(1, 4) * sym(2, 3)
    assert pfaffian(X) == expected
    assert pfaffian_def(X) == expected


def test_empty_and_odd():
    assert pfaffian(SkewMatrix(0)) == 1
    assert pfaffian(SkewMatrix(3)) == 0
    with pytest.raises(OddDimension):
        pfaffian(SkewMatrix(3), strict=True)


def test_from_rows_validates():
    with pytest.raises(ValueError):
        SkewMatrix.from_rows([[0, 1], [1, 0]])
    with pytest.raises(IndexOutOfRange):
        SkewMatrix(2, {(1, 0): 1})


@given(skew_matrices())
def test_matches_definition(X):
    assert pfaffian(X) == pfaffian_def(X)


@given(skew_matrices())
def test_square_is_determinant(X):
    assert pfaffian(X) ** 2 == det_bareiss(X.rows()) == det(X.rows())


@given(skew_matrices(dims=(2, 4, 6)), st.randoms(use_true_random=False))
def test_permutation_sign(X, rnd):
    perm = list(range(X.dim))
    rnd.shuffle(perm)
    inv = sum(1 for a in range(len(perm)) for b in range(a + 1, len(perm)) if perm[a] > perm[b])
    assert pfaffian(X.permuted(perm)) == (-1) ** inv * pfaffian(X)


@given(skew_matrices(dims=(2, 4, 6)))
def test_row_expansion(X):
    assert all(pfaffian_expand(X, k) == pfaffian(X) for k in range(X.dim))


@given(skew_matrices(dims=(2, 4, 6)), st.integers(-3, 3))
def test_congruence_by_elementary_matrix(X, c):
    # B X B^T with B unimodular keeps the Pfaffian
    n = X.dim
    B = [[mpq(int(i == j)) for j in range(n)] for i in range(n)]
    B[n - 1][0] = mpq(c)
    rows = X.rows()
    Y = [[sum(B[i][p] * rows[p][q] * B[j][q] for p in range(n) for q in range(n))
          for j in range(n)] for i in range(n)]
    assert pfaffian(SkewMatrix.from_rows(Y)) == pfaffian(X)


def test_submatrix_is_one_based():
    X = SkewMatrix.from_function(4, lambda i, j: mpq(10 * (i + 1) + j + 1))
    assert submatrix(X, [2, 4])[0, 1] == 24


@settings(max_examples=40)
@given(st.integers(1, 5), st.integers(0, 5), st.randoms(use_true_random=False))
def test_laplace_expansion(m, n, rnd):
    if (m - n) % 2:
        n += 1
    Z = SkewMatrix.from_function(m, lambda i, j: mpq(rnd.randint(-4, 4)))
    W = [[mpq(rnd.randint(-4, 4)) for _ in range(n)] for _ in range(m)]
    assert pfaffian(block_skew(Z, W)) == laplace_pfaffian(Z, W)


def test_laplace_parity_mismatch():
    with pytest.raises(ParityMismatch):
        laplace_pfaffian(SkewMatrix(2), [[1], [1]])


@pytest.mark.parametrize("n,m", [(2, 2), (2, 4), (4, 2)])
def test_sylvester(n, m):
    rng = random.Random(n * 10 + m)
    for _ in range(5):
        X = SkewMatrix.from_function(n + m, lambda i, j: mpq(rng.randint(-5, 5)))
        if pfaffian(submatrix(X, range(1, n + 1))) == 0:
            continue
        assert sylvester_check(X, n, m)


def test_sylvester_symbolic():
    X = SkewMatrix.from_function(6, lambda i, j: sym(i + 1, j + 1))
    assert sylvester_check(X, 2, 4)


@settings(max_examples=40)
@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3), st.sampled_from([1, 2]),
       st.randoms(use_true_random=False))
def test_cauchy_binet(m, n, l, variant, rnd):
    if (m - n) % 2:
        n = n + 1 if n < 3 else n - 1

    def mat(r, c):
        return [[mpq(rnd.randint(-3, 3)) for _ in range(c)] for _ in range(r)]

    A = SkewMatrix.from_function(m, lambda i, j: mpq(rnd.randint(-3, 3)))
    B = SkewMatrix.from_function(n, lambda i, j: mpq(rnd.randint(-3, 3)))
    left, right = cauchy_binet_pf(A, B, mat(m, l), mat(n, l), variant)
    assert left == right


def test_definition_enumerates_every_matching():
    # 15 perfect matchings of six points, each a distinct monomial
    X = SkewMatrix.from_function(6, lambda i, j: SparsePoly.var(f"e{i}{j}"))
    assert pfaffian_def(X).nterms == 15
