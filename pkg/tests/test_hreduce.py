from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from bracketlab.errors import HIsProperPower, NotCommuting
from bracketlab.hreduce import express_in_H, h_reduce
from bracketlab.parse import parse_poly as P
from bracketlab.poly import Poly

from conftest import homogeneous_polys, small_fraction


def test_reduce_examples():
    assert h_reduce(P("x1", 2), P("5*x1^3", 2)) == (5, 3)
    assert h_reduce(P("x1*x2"), P("9*(x1*x2)^2")) == (9, 2)
    assert h_reduce(P("x1", 2), Poly.zero(2)) == (0, 0)


def test_reduce_errors():
    with pytest.raises(NotCommuting):
        h_reduce(P("x1", 2), P("x2", 2))
    with pytest.raises(HIsProperPower):
        h_reduce(P("(x1 + x2)^2"), P("(x1 + x2)^4"))
    with pytest.raises(HIsProperPower):
        h_reduce(P("3*x1^2", 2), P("x1^4", 2))
    with pytest.raises(ValueError):
        h_reduce(P("x1 + x2^2"), P("x1"))


def test_express_examples():
    assert express_in_H(P("x1", 2), P("1 + 3*x1 + x1^2", 2)) == (1, 3, 1)
    assert express_in_H(P("x1*x2"), P("2*(x1*x2)^3 - x1*x2")) == (0, -1, 0, 2)
    assert express_in_H(P("x1", 2), Poly.zero(2)) == ()


def test_express_rejects_non_commuting():
    with pytest.raises(NotCommuting):
        express_in_H(P("x1*x2"), P("x1*x2 + x1"))


@settings(max_examples=40, deadline=None)
@given(homogeneous_polys(3, 2), st.lists(small_fraction, min_size=1, max_size=4))
def test_express_round_trip(H, coeffs):
    from bracketlab.divisibility import is_power_up_to_scalar
    assume(is_power_up_to_scalar(H) is None)
    P_ = Poly.zero(3)
    for l, a in enumerate(coeffs):
        P_ = P_ + (H ** l).scale(a)
    trimmed = list(coeffs)
    while trimmed and not trimmed[-1]:
        trimmed.pop()
    assert list(express_in_H(H, P_)) == trimmed
    if coeffs[-1]:
        assert h_reduce(H, (H ** (len(coeffs) - 1)).scale(coeffs[-1])) == (Fraction(coeffs[-1]), len(coeffs) - 1)
