"""Seeded families used by the self-test and the test-suite.

Each builder depends only on its arguments; the same seed always produces the
same polynomials.
"""

from __future__ import annotations

from fractions import Fraction

from .divisibility import divides
from .family import FamilySpec
from .linsolve import rref
from .poly import Poly
from .randpoly import rand_homogeneous, rand_rational, rng_for

ACCEPTANCE_SHAPES = [(2, 1, 3), (4, 1, 6), (4, 2, 6), (6, 2, 10), (6, 3, 9)]


def _independent(forms: list[Poly]) -> bool:
    rows = [{m.index(1): c for m, c in f.terms.items()} for f in forms]
    _, piv = rref(rows, forms[0].nvars)
    return len([p for p in piv if p < forms[0].nvars]) == len(forms)


def random_square_free_h(rng, nvars: int, t: int) -> Poly:
    """Product of t pairwise non-proportional linear forms (square-free, not a power)."""
    forms: list[Poly] = []
    while len(forms) < t:
        f = rand_homogeneous(rng, nvars, 1, rng.randint(1, nvars), 5, 2)
        if all(_independent([f, g]) for g in forms):
            forms.append(f)
    h = Poly.one(nvars)
    for f in forms:
        h = h * f
    return h


def random_family(seed: int, d: int, t: int, N: int, nvars: int = 3, dense_a: float = 0.3) -> FamilySpec:
    """F_l = h^(e_l) * (random form) with random e_l, a_N plus some random lower a_j."""
    rng = rng_for(seed, "family", d, t, N, nvars)
    h = random_square_free_h(rng, nvars, t)
    comps = {}
    for l in range(1, d):
        if rng.random() < 0.15:
            continue
        e = rng.randint(0, l // t)
        comps[l] = rand_homogeneous(rng, nvars, l - e * t, 2) * h ** e
    a = {N: rand_rational(rng)}
    for j in range(t, N, t):
        if rng.random() < dense_a:
            a[j] = rand_rational(rng)
    return FamilySpec(nvars, d, N, h, comps, a)


def dependence_family(seed: int, t: int, nvars: int = 3) -> tuple[FamilySpec, Poly, Poly]:
    """d = 4, N = 6 family with F_3 = h^(2/t) Ft and F_2 = (Ft^2 + h Fh) / 4.

    Only a_6 is nonzero, which keeps every G_j (j >= 2) polynomial.
    Returns the spec together with the chosen Ft and Fh.
    """
    if t not in (1, 2):
        raise ValueError("t must be 1 or 2 for d = 4")
    rng = rng_for(seed, "dependence", t, nvars)
    h = random_square_free_h(rng, nvars, t)
    Ft = rand_homogeneous(rng, nvars, 1, 2)
    Fh = rand_homogeneous(rng, nvars, 2 - t, 2)
    F3 = h ** (2 // t) * Ft
    F2 = (Ft * Ft + h * Fh).scale(Fraction(1, 4))
    F1 = rand_homogeneous(rng, nvars, 1, 2)
    spec = FamilySpec(nvars, 4, 6, h, {1: F1, 2: F2, 3: F3}, {6: rand_rational(rng)})
    return spec, Ft, Fh


def perturb_component(spec: FamilySpec, l: int, seed: int) -> FamilySpec:
    """Add c * (monomial) to F_l so that h no longer divides 4 F_l - Ft^2 style relations.

    The monomial is chosen among those of degree ``l`` whose addition leaves a
    component that ``h`` does not divide.
    """
    rng = rng_for(seed, "perturb", l)
    n = spec.nvars
    base = spec.F_comp(l)
    monos = [m for m in _monos(n, l)]
    rng.shuffle(monos)
    for m in monos:
        cand = base + Poly.monomial(m, rand_rational(rng))
        if not divides(spec.h, cand - base):
            comps = dict(spec.F_components)
            comps[l] = cand
            return spec.replace(F_components=comps)
    raise ValueError("no perturbation outside the ideal of h")


def _monos(n: int, deg: int):
    if n == 1:
        yield (deg,)
        return
    for a in range(deg, -1, -1):
        for rest in _monos(n - 1, deg - a):
            yield (a,) + rest


def divisibility_family(seed: int, divisible: bool, nvars: int = 3) -> FamilySpec:
    """d = 4, N = 6, t = 1 with h linear and F_3 either h * (form not divisible by h) or not divisible by h."""
    rng = rng_for(seed, "divisibility", divisible, nvars)
    h = rand_homogeneous(rng, nvars, 1, rng.randint(1, nvars), 5, 2)
    if divisible:
        while True:
            Ft = rand_homogeneous(rng, nvars, 2, 3)
            if not divides(h, Ft):
                break
        F3 = h * Ft
    else:
        while True:
            F3 = rand_homogeneous(rng, nvars, 3, 3)
            if not divides(h, F3):
                break
    comps = {3: F3}
    for l in (1, 2):
        comps[l] = rand_homogeneous(rng, nvars, l, 2)
    return FamilySpec(nvars, 4, 6, h, comps, {6: rand_rational(rng)})
