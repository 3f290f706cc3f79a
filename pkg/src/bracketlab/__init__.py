"""Exact computations with Poisson brackets of polynomials whose top forms are powers of one h."""

from .bracket import BracketElement, bracket_degree, poisson_bracket, su_bound
from .errors import (BracketLabError, HIsProperPower, Inconsistent, InvalidSpec, NonDivisible,
                     NotApplicable, NotCommuting, NvarsMismatch, ParseError, TooLarge)
from .family import FamilySpec
from .parse import parse_poly
from .poly import NEG_INF, Poly

__version__ = "0.1.0"

__all__ = [
    "BracketElement", "BracketLabError", "FamilySpec", "HIsProperPower", "Inconsistent",
    "InvalidSpec", "NEG_INF", "NonDivisible", "NotApplicable", "NotCommuting", "NvarsMismatch",
    "ParseError", "Poly", "TooLarge", "bracket_degree", "parse_poly", "poisson_bracket", "su_bound",
]
