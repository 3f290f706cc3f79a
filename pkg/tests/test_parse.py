import pytest
from hypothesis import given, settings

from bracketlab.errors import ParseError
from bracketlab.parse import infer_nvars, parse_poly
from bracketlab.poly import Poly

from conftest import polys


def test_grammar():
    assert parse_poly("x1^2*x2 - 3/4*x2 + 1") == Poly(2, {(2, 1): 1, (0, 1): "-3/4", (0, 0): 1})
    assert parse_poly("-(x1 + x2)^2", 2) == Poly(2, {(2, 0): -1, (1, 1): -2, (0, 2): -1})
    assert parse_poly("2*3*x1") == parse_poly("6*x1")
    assert parse_poly(" x1 ^ 2 ") == parse_poly("x1^2")


def test_nvars_inference_and_padding():
    assert infer_nvars("x1 + x3") == 3
    assert parse_poly("x1", 4).nvars == 4
    with pytest.raises(ParseError):
        parse_poly("x3", 2)


@pytest.mark.parametrize("text", ["x1 +", "x1 ** 2", "(x1", "x0", "3 x1", "x1^-1", "y", ""])
def test_errors_carry_position(text):
    with pytest.raises(ParseError) as exc:
        parse_poly(text, 2)
    assert "column" in str(exc.value) or text == ""


@settings(max_examples=80, deadline=None)
@given(polys(4, max_deg=4, max_terms=6))
def test_print_parse_round_trip(p):
    text = p.to_text()
    again = parse_poly(text, 4)
    assert again == p
    assert again.to_text() == text
