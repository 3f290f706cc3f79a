import sys
from fractions import Fraction

import sympy
from hypothesis import strategies as st

from bracketlab.poly import Poly

SYMS = sympy.symbols("x1:10")


def to_sympy(P: Poly):
    """Build a sympy expression straight from the term dictionary."""
    gens = SYMS[: P.nvars]
    expr = sympy.Integer(0)
    for mono, c in P.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for g, e in zip(gens, mono):
            term *= g ** e
        expr += term
    return expr


def from_sympy(expr, nvars: int) -> Poly:
    p = sympy.Poly(sympy.expand(expr), *SYMS[:nvars])
    return Poly(nvars, {m: Fraction(int(c.p), int(c.q)) for m, c in p.terms()})


small_fraction = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


def polys(nvars: int, max_deg: int = 3, max_terms: int = 4):
    mono = st.tuples(*[st.integers(0, max_deg) for _ in range(nvars)]).filter(lambda m: sum(m) <= max_deg)
    return st.dictionaries(mono, small_fraction, max_size=max_terms).map(lambda d: Poly(nvars, d))


def homogeneous_polys(nvars: int, deg: int, max_terms: int = 3):
    def monos(n, d):
        if n == 1:
            return [(d,)]
        return [(a,) + r for a in range(d, -1, -1) for r in monos(n - 1, d - a)]

    pool = monos(nvars, deg)
    return st.dictionaries(st.sampled_from(pool), small_fraction.filter(bool), min_size=1,
                           max_size=max_terms).map(lambda d: Poly(nvars, d)).filter(lambda p: not p.is_zero())


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULT_LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
