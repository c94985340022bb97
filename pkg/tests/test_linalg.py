from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from reductive_workbench import linalg
from reductive_workbench.linalg import (
    charpoly,
    factor_poly,
    identity,
    kernel,
    mat_inverse,
    matmul,
    matvec,
    minpoly,
    poly_eval_matrix,
    rat,
    rref,
    signature,
)

from oracles import gauss_rank

small_fractions = st.fractions(
    min_value=-4, max_value=4, max_denominator=6
)


def small_matrix(rows, cols):
    return st.lists(
        st.lists(small_fractions, min_size=cols, max_size=cols),
        min_size=rows,
        max_size=rows,
    )


def test_rat_coercions():
    assert rat(3) == Fraction(3)
    assert rat("2/3") == Fraction(2, 3)
    assert rat(Fraction(5, 7)) == Fraction(5, 7)
    with pytest.raises(TypeError):
        rat(0.5)


@given(small_matrix(3, 4))
def test_rref_idempotent_and_rank(rows):
    mat = linalg.matrix(rows)
    red, pivots = rref(mat, 4)
    again, pivots2 = rref(red, 4)
    assert red == again
    assert pivots == pivots2
    assert len(red) == gauss_rank(rows, 4)


@given(small_matrix(3, 4))
def test_rref_canonical_under_row_mixing(rows):
    mat = linalg.matrix(rows)
    red, _ = rref(mat, 4)
    # same span, different presentation: add the first row into the others
    if len(mat) >= 2:
        mixed = [mat[0]] + [linalg.vadd(r, mat[0]) for r in mat[1:]]
        red2, _ = rref(linalg.matrix(mixed), 4)
        assert red == red2


@given(small_matrix(3, 5))
def test_kernel_annihilates_and_has_complementary_dim(rows):
    mat = linalg.matrix(rows)
    ker = kernel(mat, 5)
    for v in ker:
        assert all(x == 0 for x in matvec(mat, v))
    assert len(ker) == 5 - gauss_rank(rows, 5)


def test_mat_inverse_roundtrip():
    A = linalg.matrix([[1, 2], ["1/3", 1]])
    Ainv = mat_inverse(A)
    assert matmul(A, Ainv) == identity(2)
    with pytest.raises(ValueError):
        mat_inverse(linalg.matrix([[1, 2], [2, 4]]))


@pytest.mark.parametrize(
    "gram, expected",
    [
        ([[1, 0], [0, 1]], (2, 0, 0)),
        ([[-1, 0], [0, -1]], (0, 2, 0)),
        ([[0, 1], [1, 0]], (1, 1, 0)),  # hyperbolic plane
        ([[0, 0], [0, 0]], (0, 0, 2)),
        ([[1, 0, 0], [0, -2, 0], [0, 0, 0]], (1, 1, 1)),
        ([[2, 1], [1, 2]], (2, 0, 0)),
    ],
)
def test_signature_known_cases(gram, expected):
    assert signature(linalg.matrix(gram)) == expected


def test_charpoly_and_minpoly_known():
    J = linalg.matrix([[0, -1], [1, 0]])  # rotation generator: x^2 + 1
    assert charpoly(J) == (rat(1), rat(0), rat(1))
    assert minpoly(J) == (rat(1), rat(0), rat(1))
    N = linalg.matrix([[0, 1], [0, 0]])  # nilpotent: x^2
    assert charpoly(N) == (rat(0), rat(0), rat(1))
    D = linalg.matrix([[2, 0], [0, 2]])  # scalar: min poly degree 1
    assert minpoly(D) == (rat(-2), rat(1))
    assert charpoly(D) == (rat(4), rat(-4), rat(1))


def test_poly_eval_matrix_cayley_hamilton():
    A = linalg.matrix([[1, 2], [3, "1/2"]])
    p = charpoly(A)
    assert poly_eval_matrix(p, A) == ((rat(0), rat(0)), (rat(0), rat(0)))


def test_factor_poly_splits_and_orders():
    # (x - 1)(x + 2) = x^2 + x - 2
    fs = factor_poly((rat(-2), rat(1), rat(1)))
    assert fs == (((rat(-1), rat(1)), 1), ((rat(2), rat(1)), 1))
    # x^2 + 1 irreducible over Q
    fs = factor_poly((rat(1), rat(0), rat(1)))
    assert fs == (((rat(1), rat(0), rat(1)), 1),)
    # (x - 1)^2
    fs = factor_poly((rat(1), rat(-2), rat(1)))
    assert fs == (((rat(-1), rat(1)), 2),)


@settings(max_examples=30)
@given(small_matrix(3, 3))
def test_minpoly_annihilates(rows):
    A = linalg.matrix(rows)
    mp = minpoly(A)
    Z = poly_eval_matrix(mp, A)
    assert all(x == 0 for row in Z for x in row)
