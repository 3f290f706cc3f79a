from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from bracketlab.linsolve import linear_solve, rref


def test_unique_solution():
    part, basis = linear_solve([[1, 2], [3, 4]], [5, 6])
    assert part == [-4, Fraction(9, 2)] and basis == []


def test_underdetermined_has_null_basis():
    part, basis = linear_solve([[1, 1, 0]], [2])
    assert part == [2, 0, 0]
    assert len(basis) == 2
    for v in basis:
        assert v[0] + v[1] == 0


def test_inconsistent():
    assert linear_solve([[1, 1], [2, 2]], [1, 3]) is None


def test_shape_errors():
    with pytest.raises(ValueError):
        linear_solve([[1, 2]], [1, 2])
    with pytest.raises(ValueError):
        linear_solve([[1, 2], [1]], [1, 2])


def test_rref_pivots():
    _, piv = rref([{0: Fraction(2), 1: Fraction(4)}, {0: Fraction(1), 1: Fraction(2)}], 2)
    assert piv[0] == 0


matrices = st.integers(1, 4).flatmap(
    lambda n: st.integers(1, 4).flatmap(
        lambda m: st.tuples(
            st.lists(st.lists(st.integers(-3, 3), min_size=m, max_size=m), min_size=n, max_size=n),
            st.lists(st.integers(-3, 3), min_size=n, max_size=n),
        )
    )
)


@settings(max_examples=80, deadline=None)
@given(matrices)
def test_agrees_with_sympy(Ab):
    A, b = Ab
    res = linear_solve(A, b)
    M = sympy.Matrix(A)
    aug = M.row_join(sympy.Matrix(b))
    assert (res is not None) == (M.rank() == aug.rank())
    if res is None:
        return
    part, basis = res
    assert len(basis) == M.shape[1] - M.rank()
    for i, row in enumerate(A):
        assert sum(Fraction(a) * x for a, x in zip(row, part)) == b[i]
        for v in basis:
            assert sum(Fraction(a) * x for a, x in zip(row, v)) == 0
