import pickle
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from bracketlab.errors import NvarsMismatch
from bracketlab.parse import parse_poly as P
from bracketlab.poly import NEG_INF, Poly, arith, homogeneous_components, partial_derivative

from conftest import from_sympy, polys, to_sympy


def test_difference_of_squares():
    assert arith("mul", P("x1 + x2"), P("x1 - x2", 2)) == P("x1^2 - x2^2")


def test_additive_inverse_has_degree_neg_inf():
    p = P("3*x1*x2 + x2 - 7")
    z = arith("add", p, p.scale(-1))
    assert z.is_zero() and z.degree is NEG_INF


def test_cube_matches_repeated_multiplication():
    p = P("x1 + 1")
    assert arith("pow", p, 3) == p * p * p == P("x1^3 + 3*x1^2 + 3*x1 + 1")


def test_nvars_mismatch():
    with pytest.raises(NvarsMismatch):
        arith("add", P("x1", 1), P("x1", 2))
    with pytest.raises(NvarsMismatch):
        P("x1", 1) * P("x2", 2)


def test_partial_derivatives():
    assert partial_derivative(P("x1^2*x2"), 1) == P("2*x1*x2", 2)
    assert partial_derivative(P("x2^3"), 1).is_zero()
    # inner polynomial of the Nagata automorphism: d/dz (y^2 + z x) = x with x, y, z = x1, x2, x3
    assert partial_derivative(P("x2^2 + x3*x1"), 3) == P("x1", 3)
    with pytest.raises(IndexError):
        partial_derivative(P("x1", 2), 3)


def test_homogeneous_components_examples():
    assert homogeneous_components(P("x1^2 + x2")) == [(1, P("x2", 2)), (2, P("x1^2", 2))]
    assert homogeneous_components(Poly.zero(2)) == []
    assert homogeneous_components(P("(x1+1)^2")) == [(0, Poly.one(1)), (1, P("2*x1")), (2, P("x1^2"))]


def test_neg_inf_sentinel():
    assert NEG_INF < -10 ** 9 and NEG_INF < 0 and not NEG_INF > 0
    assert NEG_INF + 5 is NEG_INF and 5 + NEG_INF is NEG_INF
    assert str(NEG_INF) == "-inf"
    assert pickle.loads(pickle.dumps(NEG_INF)) is NEG_INF
    assert Poly.zero(3).degree is NEG_INF


def test_canonical_text():
    assert P("x2 + 3/2*x1^2*x2 - 7 - x3").to_text() == "3/2*x1^2*x2 + x2 - x3 - 7"
    assert Poly.zero(2).to_text() == "0"
    assert P("-x1 + 3/2*x2").to_text() == "-x1 + 3/2*x2"


def test_queries():
    p = P("2*x1^2*x2 + x1*x2 - 3")
    assert p.degree == 3 and not p.is_homogeneous() and p.constant_term() == -3
    assert p.leading_term() == ((2, 1), Fraction(2))
    assert p.component(2) == P("x1*x2", 2)
    assert p.variables() == {0, 1}
    assert p.degree_in(0) == 2 and p.degree_in(1) == 1
    assert p.evaluate([1, 2]) == 4 + 2 - 3
    assert p.monic().leading_coefficient() == 1


def test_compose():
    assert P("x1*x2").compose([P("x1 + x2", 2), P("x1 - x2", 2)]) == P("x1^2 - x2^2")


@settings(max_examples=60, deadline=None)
@given(polys(3), polys(3), polys(3))
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == Poly.zero(3)


@settings(max_examples=60, deadline=None)
@given(polys(3), polys(3))
def test_product_matches_sympy(a, b):
    assert a * b == from_sympy(to_sympy(a) * to_sympy(b), 3)
    assert a.diff(2) == from_sympy(sympy.diff(to_sympy(a), sympy.Symbol("x2")), 3)


@settings(max_examples=60, deadline=None)
@given(polys(2), polys(2))
def test_degree_additive(a, b):
    if not a.is_zero() and not b.is_zero():
        assert (a * b).degree == a.degree + b.degree


@settings(max_examples=60, deadline=None)
@given(polys(3, max_deg=4, max_terms=6))
def test_components_sum_back(a):
    total = Poly.zero(3)
    for deg, comp in homogeneous_components(a):
        assert comp.is_homogeneous() and comp.degree == deg
        total = total + comp
    assert total == a


@given(polys(2), st.integers(0, 4))
@settings(max_examples=30, deadline=None)
def test_power_matches_repeated_product(a, k):
    expected = Poly.one(2)
    for _ in range(k):
        expected = expected * a
    assert a ** k == expected
