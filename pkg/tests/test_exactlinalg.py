"""Exact integer linear algebra."""

from fractions import Fraction
from math import prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rootsig.exactlinalg import (
    IntMatrix,
    determinant,
    largest_divisor,
    rank,
    smith_normal_form,
)


def _fraction_det(rows):
    m = [[Fraction(v) for v in r] for r in rows]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            for k in range(c, n):
                m[r][k] -= f * m[c][k]
    return det


def test_intmatrix_roundtrip():
    m = IntMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
    assert m.rows == 2 and m.cols == 3
    assert m.row(1) == (4, 5, 6)
    assert m.column(2) == (3, 6)
    assert IntMatrix.from_columns([[1, 4], [2, 5], [3, 6]]) == m
    assert m.to_rows() == [[1, 2, 3], [4, 5, 6]]


def test_determinant_small():
    assert determinant(IntMatrix.from_rows([[2]])) == 2
    assert determinant(IntMatrix.from_rows([[1, 2], [3, 4]])) == -2
    assert determinant(IntMatrix.from_rows([[1, 2], [2, 4]])) == 0
    assert determinant(IntMatrix.from_rows([[0, 1], [1, 0]])) == -1


def test_determinant_rejects_rectangular():
    with pytest.raises(Exception):
        determinant(IntMatrix.from_rows([[1, 2, 3], [4, 5, 6]]))


@settings(max_examples=150, deadline=None)
@given(
    st.integers(1, 5).flatmap(
        lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n)
    )
)
def test_determinant_matches_fraction_elimination(rows):
    assert determinant(IntMatrix.from_rows(rows)) == _fraction_det(rows)


def test_rank():
    assert rank(IntMatrix.from_rows([[1, 2], [2, 4]])) == 1
    assert rank(IntMatrix.from_rows([[1, 0, 1], [0, 1, 1], [1, 1, 2]])) == 2
    assert rank(IntMatrix.from_rows([[0, 0], [0, 0]])) == 0


def test_smith_normal_form_pinned():
    # divisors of [[1,0,1],[0,1,1],[0,-1,-3]] are 1,1,2
    sf = smith_normal_form([[1, 0, 1], [0, 1, 1], [0, -1, -3]])
    assert sf.divisors == (1, 1, 2)
    assert sf.rank == 3


def test_smith_normal_form_divisibility_and_det():
    sf = smith_normal_form([[2, 4], [6, 8]])
    assert sf.divisors == (2, 4)
    assert prod(sf.divisors) == abs(determinant(IntMatrix.from_rows([[2, 4], [6, 8]])))


def test_smith_normal_form_rectangular():
    sf = smith_normal_form([[1, 1, 0], [0, 2, 2]])
    assert sf.rank == 2
    assert len(sf.divisors) == 2
    assert all(sf.divisors[i] % sf.divisors[i - 1] == 0 for i in range(1, len(sf.divisors)))


@settings(max_examples=120, deadline=None)
@given(
    st.integers(1, 4).flatmap(
        lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=n, max_size=n)
    )
)
def test_smith_divisor_product_is_abs_det(rows):
    m = IntMatrix.from_rows(rows)
    sf = smith_normal_form(rows)
    d = determinant(m)
    if d == 0:
        assert sf.rank < m.rows
    else:
        assert prod(sf.divisors) == abs(d)
        assert all(sf.divisors[i] % sf.divisors[i - 1] == 0 for i in range(1, len(sf.divisors)))


def test_largest_divisor():
    assert largest_divisor([[1, 0], [0, 1]]) == 1
    assert largest_divisor([[2, 0], [0, 3]]) == 6
    assert largest_divisor([[0, 0], [0, 0]]) == 1
