from __future__ import annotations

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from operad_calculus.errors import ParseError
from operad_calculus.exact import (
    RatMatrix,
    as_object_array,
    flatten,
    format_rational,
    kernel_dim,
    matrix_rank,
    nullspace,
    parse_rational,
    rref,
    unflatten,
)


@pytest.mark.parametrize(
    "text, value",
    [("3", Fraction(3)), ("-2/4", Fraction(-1, 2)), ("−5/3", Fraction(-5, 3)), (" 7 / 14 ", Fraction(1, 2)), (4, Fraction(4))],
)
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["1/0", "abc", "1.5", "", "1//2", True, None])
def test_parse_rational_rejects(text):
    with pytest.raises(ParseError):
        parse_rational(text)


def test_format_rational_round_trip():
    for v in (Fraction(0), Fraction(5), Fraction(-3, 7)):
        assert parse_rational(format_rational(v)) == v
    assert format_rational(Fraction(6, 3)) == "2"
    assert format_rational(Fraction(-1, 2)) == "-1/2"


def test_object_arrays_are_exact():
    arr = as_object_array([[Fraction(4, 2), Fraction(1, 3)]])
    assert type(arr[0, 0]) is int and arr[0, 1] == Fraction(1, 3)
    with pytest.raises(TypeError):
        as_object_array([0.5])


def test_flatten_unflatten():
    arr = as_object_array([[1, 2], [3, 4]])
    assert flatten(arr) == [1, 2, 3, 4]
    assert (unflatten(flatten(arr), (2, 2)) == arr).all()
    with pytest.raises(ValueError):
        unflatten([1, 2, 3], (2, 2))


def test_small_ranks():
    assert matrix_rank(RatMatrix.from_rows([[1]])) == 1
    assert matrix_rank(RatMatrix.zero(2, 3)) == 0
    assert matrix_rank(RatMatrix.from_rows([[1, 2], [2, 4]])) == 1
    assert matrix_rank(RatMatrix.from_rows([[Fraction(1, 2), 1], [1, Fraction(1, 3)]])) == 2


def test_matmul_and_transpose():
    a = RatMatrix.from_rows([[1, 2], [3, 4]])
    b = RatMatrix.from_rows([[0, 1], [1, 0]])
    assert (a @ b).to_rows() == [[2, 1], [4, 3]]
    assert a.transpose().to_rows() == [[1, 3], [2, 4]]
    assert (-a).to_rows() == [[-1, -2], [-3, -4]]


rationals = st.fractions(min_value=-4, max_value=4, max_denominator=3)


@st.composite
def matrices(draw):
    rows = draw(st.integers(1, 5))
    cols = draw(st.integers(1, 5))
    return [[draw(rationals) for _ in range(cols)] for _ in range(rows)]


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_matches_sympy(rows):
    assert matrix_rank(RatMatrix.from_rows(rows)) == sympy.Matrix(rows).rank()


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_nullspace_is_kernel(rows):
    m = RatMatrix.from_rows(rows)
    vectors, free = nullspace(m)
    assert len(vectors) == kernel_dim(m) == m.cols - matrix_rank(m)
    assert len(free) == len(vectors)
    for v in vectors:
        assert all(sum(Fraction(a) * b for a, b in zip(row, v)) == 0 for row in rows)


@settings(max_examples=40, deadline=None)
@given(matrices())
def test_rref_pivots(rows):
    reduced, pivots = rref(RatMatrix.from_rows(rows))
    assert len(pivots) == sympy.Matrix(rows).rank()
    for r, c in enumerate(pivots):
        assert reduced[r][c] == 1
