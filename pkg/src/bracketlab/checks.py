"""Verification of the structural consequences of a small bracket degree.

* ``check_divisibility``: h^(k+1) | F_s when deg[F, G] is small enough.
* ``check_dependence``: 4 F_(s-1) - Ft^2 = h * Fh with F_s = h^rt * Ft (d = 2 d1).
* ``binomial_identity``: the (-4)^l binom(k+1, l) relation among coefficients.
* ``min_bracket_degree_over_G``: an exact linear-algebra oracle for the least
  bracket degree reachable by any G with a fixed top form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .bracket import bracket_degree, poisson_bracket
from .divisibility import exact_divide, is_square_free, sqrf, divides
from .errors import NonDivisible, TooLarge
from .family import FamilySpec
from .formulas import a_index, multiplier
from .lattice import in_index_set, tie_shape
from .linsolve import solve_sparse
from .poly import NEG_INF, Poly


def _fmt(p: Poly | None) -> str | None:
    return None if p is None else p.to_text()


def _threshold_i(F: Poly, G: Poly, d: int) -> tuple[object, int]:
    """Bracket degree and the least i >= 1 with deg[F, G] < d + i."""
    deg = bracket_degree(F, G)
    if deg is NEG_INF:
        return deg, 1
    return deg, max(1, deg - d + 1)


def _top_forms_ok(spec: FamilySpec, F: Poly, G: Poly) -> bool:
    return (F.degree == spec.d and F.component(spec.d) == spec.F_comp(spec.d)
            and G.degree == spec.N and G.component(spec.N) == spec.G_top())


@dataclass
class DivisibilityReport:
    k: int
    bracket_degree: object
    i: int
    threshold: Fraction
    hypotheses: dict[str, bool]
    conclusion: bool
    cofactor: Poly | None
    sqrf_divides: bool

    @property
    def theorem_applies(self) -> bool:
        return all(self.hypotheses.values())

    @property
    def consistent(self) -> bool:
        return self.conclusion or not self.theorem_applies

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "bracket_degree": str(self.bracket_degree),
            "i": self.i,
            "threshold": str(self.threshold),
            "hypotheses": self.hypotheses,
            "theorem_applies": self.theorem_applies,
            "conclusion": self.conclusion,
            "cofactor": _fmt(self.cofactor),
            "sqrf_h_divides_Fs": self.sqrf_divides,
            "consistent": self.consistent,
        }


def check_divisibility(spec: FamilySpec, F: Poly, G: Poly, k: int = 0) -> DivisibilityReport:
    """Test whether h^(k+1) divides F_s and which hypotheses of that conclusion hold.

    The least admissible i is read off the bracket degree; it is compared with
    ((s - k)/(d - k)) N as an exact rational.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    d, N, s, t, h = spec.d, spec.N, spec.s, spec.t, spec.h
    deg, i = _threshold_i(F, G, d)
    threshold = Fraction((s - k) * N, d - k)
    hyp = {
        "top_forms_match": _top_forms_ok(spec, F, G),
        "N_not_multiple_of_d": N % d != 0,
        "i_below_threshold": i < threshold,
        "2kt_below_d": 2 * k * t < d,
        "h_square_free": t == 1 or is_square_free(h),
    }
    Fs = F.component(s)
    cof = exact_divide(h ** (k + 1), Fs)
    return DivisibilityReport(k, deg, i, threshold, hyp, cof is not None, cof, divides(sqrf(h), Fs))


@dataclass
class DependenceReport:
    d1: int
    k: int
    rtilde: int
    bracket_degree: object
    hypotheses: dict[str, bool]
    F_tilde: Poly
    F_hat: Poly | None
    relation_holds: bool
    expected_F_hat_degree: int

    @property
    def theorem_applies(self) -> bool:
        return all(self.hypotheses.values())

    def to_json(self) -> dict:
        return {
            "d1": self.d1,
            "k": self.k,
            "rtilde": self.rtilde,
            "bracket_degree": str(self.bracket_degree),
            "hypotheses": self.hypotheses,
            "theorem_applies": self.theorem_applies,
            "F_tilde": _fmt(self.F_tilde),
            "F_hat": _fmt(self.F_hat),
            "F_hat_degree": None if self.F_hat is None else str(self.F_hat.degree),
            "expected_F_hat_degree": self.expected_F_hat_degree,
            "relation_holds": self.relation_holds,
        }


def dependence_shape(d: int, N: int) -> tuple[int, int]:
    """(d1, k) with d = 2 d1, d1 >= 2 and N = d1 (2k + 1), k >= 1; ValueError otherwise."""
    if d % 2 or d < 4:
        raise ValueError(f"need d = 2*d1 with d1 >= 2 (got d={d})")
    d1 = d // 2
    return d1, tie_shape(N, d1)


def check_dependence(spec: FamilySpec, F: Poly, G: Poly) -> DependenceReport:
    """Extract Ft = F_s / h^rt and Fh = (4 F_(s-1) - Ft^2) / h.

    ``NonDivisible`` is raised when h^rt does not divide F_s, since then the
    relation cannot even be formed.  Ft is returned exactly as computed; its
    sign is not normalized (Ft and -Ft give the same relation).
    """
    d1, k = dependence_shape(spec.d, spec.N)
    t, s, h = spec.t, spec.s, spec.h
    rt = d1 // t
    deg = bracket_degree(F, G)
    hyp = {
        "top_forms_match": _top_forms_ok(spec, F, G),
        "h_square_free": is_square_free(h),
        "bracket_below_bound": deg < spec.d + spec.N - 2 * k - 2,
    }
    Fs = F.component(s)
    Ft = exact_divide(h ** rt, Fs)
    if Ft is None:
        raise NonDivisible(f"h^{rt} does not divide F_{s}")
    numerator = F.component(s - 1).scale(4) - Ft * Ft
    Fh = exact_divide(h, numerator)
    holds = Fh is not None and F.component(s - 1) == (Ft * Ft + h * Fh).scale(Fraction(1, 4))
    return DependenceReport(d1, k, rt, deg, hyp, Ft, Fh, holds, s - t - 1)


@dataclass
class BinomialRow:
    l: int
    alpha: tuple[int, ...]
    lhs: Fraction
    rhs: Fraction

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


@dataclass
class BinomialReport:
    d1: int
    k: int
    t: int
    a_N: Fraction
    base_alpha: tuple[int, ...]
    base_value: Fraction
    rows: list[BinomialRow] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return all(r.equal for r in self.rows)

    def to_json(self) -> dict:
        return {
            "d1": self.d1, "k": self.k, "t": self.t, "a_N": str(self.a_N),
            "base_alpha": list(self.base_alpha), "base_value": str(self.base_value),
            "rows": [{"l": r.l, "alpha": list(r.alpha), "lhs": str(r.lhs), "rhs": str(r.rhs),
                      "equal": r.equal} for r in self.rows],
            "holds": self.holds,
        }


def binomial_identity(d1: int, k: int, t: int = 1, a_N=1) -> BinomialReport:
    """Compare c_(alpha_l) with (-4)^l binom(k+1, l) c_(alpha_0) at level j = N - 2k - 2, l = 0..k+1.

    alpha_l = ((-2k - 3 + 2l) rt, 0, ..., 0, l, 2k + 2 - 2l) with rt = d1 / t;
    every alpha_l reads the same constant a_N.
    """
    if d1 < 2 or k < 1:
        raise ValueError("need d1 >= 2 and k >= 1")
    if t < 1 or d1 % t:
        raise ValueError(f"t = {t} must divide d1 = {d1}")
    a_N = Fraction(a_N)
    d, N = 2 * d1, d1 * (2 * k + 1)
    s, r, rt = d - 1, d // t, d1 // t
    j = N - 2 * k - 2

    def alpha(l: int) -> tuple[int, ...]:
        return ((-2 * k - 3 + 2 * l) * rt,) + (0,) * (s - 2) + (l, 2 * k + 2 - 2 * l)

    def value(a: tuple[int, ...]) -> Fraction:
        if not in_index_set(a, j, N, d, t) or a_index(a, d, t) != N:
            raise AssertionError(f"{a} is not an index reading a_N at level {j}")
        return multiplier(a, r) * a_N

    base = alpha(0)
    base_value = value(base)
    rows = [BinomialRow(l, alpha(l), value(alpha(l)), (-4) ** l * math.comb(k + 1, l) * base_value)
            for l in range(k + 2)]
    return BinomialReport(d1, k, t, a_N, base, base_value, rows)


# exact oracle


def _monomials(nvars: int, deg: int):
    if nvars == 1:
        yield (deg,)
        return
    for a in range(deg, -1, -1):
        for rest in _monomials(nvars - 1, deg - a):
            yield (a,) + rest


@dataclass
class OracleLevel:
    i: int
    feasible: bool
    unknowns: int
    equations: int
    witness: Poly | None = None

    def to_json(self) -> dict:
        return {"i": self.i, "bound": None, "feasible": self.feasible, "unknowns": self.unknowns,
                "equations": self.equations, "witness": _fmt(self.witness)}


@dataclass
class OracleResult:
    d: int
    N: int
    levels: list[OracleLevel]

    @property
    def best(self) -> OracleLevel:
        return min((lv for lv in self.levels if lv.feasible), key=lambda lv: lv.i)

    @property
    def min_i(self) -> int:
        return self.best.i

    @property
    def bound(self) -> int:
        """Least d + i for which some G reaches deg[F, G] < d + i."""
        return self.d + self.min_i

    @property
    def witness(self) -> Poly:
        return self.best.witness

    def feasible_at(self, i: int) -> bool:
        for lv in self.levels:
            if lv.i == i:
                return lv.feasible
        raise KeyError(f"level i = {i} was not examined")

    def to_json(self) -> dict:
        levels = []
        for lv in self.levels:
            j = lv.to_json()
            j["bound"] = self.d + lv.i
            levels.append(j)
        return {"d": self.d, "N": self.N, "min_i": self.min_i, "bound": self.bound,
                "witness": _fmt(self.witness), "levels": levels}


def min_bracket_degree_over_G(F: Poly, N: int, h: Poly, a_N=1, degree_floor: int = 1,
                              max_unknowns: int = 5000) -> OracleResult:
    """For i = N, N-1, ..., degree_floor decide whether some G = G_1 + ... + G_N with
    G_N = a_N h^(N/t) satisfies deg[F, G] < d + i.

    deg[F, G] < d + i means every bracket coefficient has no terms of degree
    >= d + i - 2.  Those terms only involve G_b with b >= i, so the unknowns are
    the coefficients of G_i, ..., G_(N-1).  The witness is the particular solution
    with free unknowns set to zero.
    """
    if F.nvars != h.nvars:
        raise ValueError("F and h must have the same number of variables")
    d, t = F.degree, h.degree
    if not h.is_homogeneous() or t is NEG_INF or t < 1:
        raise ValueError("h must be homogeneous and nonconstant")
    if d % t or N % t:
        raise ValueError(f"deg h = {t} must divide deg F = {d} and N = {N}")
    if N < 1 or not 1 <= degree_floor <= N:
        raise ValueError("need 1 <= degree_floor <= N")
    if F.component(d) != h ** (d // t):
        raise ValueError("the top form of F must be h^(deg F / deg h)")
    a_N = Fraction(a_N)
    if not a_N:
        raise ValueError("a_N must be nonzero")
    n = F.nvars
    cols = [(b, m) for b in range(degree_floor, N) for m in _monomials(n, b)]
    if len(cols) > max_unknowns:
        raise TooLarge(f"{len(cols)} unknowns exceed the cap of {max_unknowns}")
    top = (h ** (N // t)).scale(a_N)
    fixed = poisson_bracket(F, top)
    col_brackets = [poisson_bracket(F, Poly.monomial(m)) for _, m in cols]

    levels = []
    for i in range(N, degree_floor - 1, -1):
        cutoff = d + i - 2  # coefficient degrees that must vanish
        active = [c for c, (b, _) in enumerate(cols) if b >= i]
        index = {c: n_ for n_, c in enumerate(active)}
        rows: dict[tuple, dict[int, Fraction]] = {}
        for c in active:
            for pair, p in col_brackets[c].coeffs.items():
                for mono, v in p.terms.items():
                    if sum(mono) >= cutoff:
                        rows.setdefault((pair, mono), {})[index[c]] = v
        ncols = len(active)
        for pair, p in fixed.coeffs.items():
            for mono, v in p.terms.items():
                if sum(mono) >= cutoff:
                    rows.setdefault((pair, mono), {})[ncols] = -v
        sol = solve_sparse(list(rows.values()), ncols)
        if sol is None:
            levels.append(OracleLevel(i, False, ncols, len(rows)))
            continue
        particular, _ = sol
        G = top
        for c, val in zip(active, particular):
            if val:
                G = G + Poly.monomial(cols[c][1], val)
        levels.append(OracleLevel(i, True, ncols, len(rows), G))
    return OracleResult(d, N, levels)
