"""Poisson brackets as elements of the free module on the symbols [x_i, x_j]."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotApplicable, NvarsMismatch
from .poly import NEG_INF, Poly

Pair = tuple[int, int]


class BracketElement:
    """Formal sum of ``coeff * [x_i, x_j]`` over pairs ``i < j`` (1-based).

    Each basis symbol has degree 2, so the degree of the element is two more
    than the largest coefficient degree.
    """

    __slots__ = ("nvars", "_coeffs")

    def __init__(self, nvars: int, coeffs: dict[Pair, Poly] | None = None):
        self.nvars = nvars
        clean = {}
        for (i, j), p in (coeffs or {}).items():
            if not 1 <= i < j <= nvars:
                raise ValueError(f"basis pair ({i}, {j}) must satisfy 1 <= i < j <= {nvars}")
            if p.nvars != nvars:
                raise NvarsMismatch("coefficient nvars mismatch")
            if not p.is_zero():
                clean[(i, j)] = p
        self._coeffs = dict(sorted(clean.items()))

    @property
    def coeffs(self) -> dict[Pair, Poly]:
        return dict(self._coeffs)

    def coefficient(self, i: int, j: int) -> Poly:
        if i > j:
            return -self.coefficient(j, i)
        return self._coeffs.get((i, j), Poly.zero(self.nvars))

    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def degree(self):
        if not self._coeffs:
            return NEG_INF
        return 2 + max(p.degree for p in self._coeffs.values())

    def jacobian(self) -> Poly:
        """For two variables the single coefficient is the Jacobian determinant."""
        if self.nvars != 2:
            raise NotApplicable("the Jacobian accessor needs exactly two variables")
        return self.coefficient(1, 2)

    def component(self, deg: int) -> BracketElement:
        """Part of bracket degree ``deg`` (coefficients of degree ``deg - 2``)."""
        return BracketElement(self.nvars, {k: p.component(deg - 2) for k, p in self._coeffs.items()})

    def _combine(self, other: BracketElement, sign: int) -> BracketElement:
        if other.nvars != self.nvars:
            raise NvarsMismatch("nvars mismatch")
        out = dict(self._coeffs)
        for k, p in other._coeffs.items():
            out[k] = out[k] + p * sign if k in out else p * sign
        return BracketElement(self.nvars, out)

    def __add__(self, other: BracketElement) -> BracketElement:
        return self._combine(other, 1)

    def __sub__(self, other: BracketElement) -> BracketElement:
        return self._combine(other, -1)

    def __neg__(self) -> BracketElement:
        return BracketElement(self.nvars, {k: -p for k, p in self._coeffs.items()})

    def __mul__(self, factor) -> BracketElement:
        return BracketElement(self.nvars, {k: p * factor for k, p in self._coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, BracketElement):
            return NotImplemented
        return self.nvars == other.nvars and self._coeffs == other._coeffs

    def __repr__(self) -> str:
        body = " + ".join(f"({p})[x{i},x{j}]" for (i, j), p in self._coeffs.items()) or "0"
        return f"BracketElement({body})"

    def to_json(self) -> list[dict]:
        return [{"i": i, "j": j, "poly": p.to_text()} for (i, j), p in self._coeffs.items()]


def poisson_bracket(F: Poly, G: Poly) -> BracketElement:
    if F.nvars != G.nvars:
        raise NvarsMismatch(f"nvars mismatch: {F.nvars} vs {G.nvars}")
    n = F.nvars
    if n < 2:
        raise ValueError("the Poisson bracket needs at least two variables")
    dF = [F.diff(i) for i in range(1, n + 1)]
    dG = [G.diff(i) for i in range(1, n + 1)]
    coeffs = {}
    for i in range(n):
        for j in range(i + 1, n):
            c = dF[i] * dG[j] - dF[j] * dG[i]
            if not c.is_zero():
                coeffs[(i + 1, j + 1)] = c
    return BracketElement(n, coeffs)


def bracket_degree(F: Poly, G: Poly):
    """``2 + max deg`` of the bracket coefficients, or ``NEG_INF`` if it vanishes."""
    return poisson_bracket(F, G).degree


@dataclass(frozen=True)
class SUBoundData:
    gcd_degs: int
    deficiency: Fraction
    weighted_degree: int
    bound: Fraction
    bracket_degree: int
    composed_degree: object
    holds: bool


def weighted_degree(P: Poly, wx: int, wy: int) -> int:
    if P.nvars != 2:
        raise NvarsMismatch("P must be a polynomial in two formal variables")
    if P.is_zero():
        raise NotApplicable("weighted degree of the zero polynomial")
    return max(wx * a + wy * b for a, b in P.terms)


def deficiency(deg_f: int, deg_g: int, deg_bracket: int) -> Fraction:
    """``1 - (gcd(df, dg) - (deg(fg) - deg[f,g])) / (df * dg)`` with ``deg(fg) = df + dg``."""
    g = math.gcd(deg_f, deg_g)
    return 1 - Fraction(g - (deg_f + deg_g - deg_bracket), deg_f * deg_g)


def su_bound(f: Poly, g: Poly, P: Poly) -> SUBoundData:
    """Degree estimate ``deg P(f, g) >= D(f, g) * w(P)`` and the actual composed degree."""
    if f.is_constant() or g.is_constant():
        raise NotApplicable("f and g must be nonconstant")
    db = bracket_degree(f, g)
    if db is NEG_INF:
        raise NotApplicable("[f, g] = 0: f and g are algebraically dependent")
    df, dg = f.degree, g.degree
    D = deficiency(df, dg, db)
    w = weighted_degree(P, df, dg)
    bound = D * w
    composed = P.compose([f, g]).degree
    holds = composed is not NEG_INF and composed >= bound
    return SUBoundData(math.gcd(df, dg), D, w, bound, db, composed, holds)
