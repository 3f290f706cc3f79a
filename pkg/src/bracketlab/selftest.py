"""Quick invariant sweep runnable without the test-suite (``bracketlab selftest``)."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from .bracket import bracket_degree, poisson_bracket
from .checks import binomial_identity, check_dependence, min_bracket_degree_over_G
from .errors import HIsProperPower
from .formulas import build_G, check_conditions, coefficient_table, smallest_buildable_threshold
from .hreduce import express_in_H, h_reduce
from .lattice import LatticeProblem, brute_force_min, closed_form_min, weight_e0_plus
from .parse import parse_poly
from .poly import NEG_INF, Poly
from .randpoly import rand_homogeneous, rand_poly, rand_rational, rng_for
from .scenarios import ACCEPTANCE_SHAPES, dependence_family, perturb_component, random_family


def _require(cond, detail="") -> None:
    if not cond:
        raise AssertionError(detail)


def _bracket_axioms(seed: int) -> str:
    for idx in range(30):
        rng = rng_for(seed, "axioms", idx)
        n = rng.randint(2, 4)
        f, g, k = (rand_poly(rng, n, rng.randint(0, 4), 4) for _ in range(3))
        c = rand_rational(rng)
        _require(poisson_bracket(f, g) == -poisson_bracket(g, f))
        _require(poisson_bracket(f + k.scale(c), g) == poisson_bracket(f, g) + poisson_bracket(k, g) * c)
        _require(poisson_bracket(f * k, g) == poisson_bracket(f, g) * k + poisson_bracket(k, g) * f)
        bd = bracket_degree(f, g)
        _require(bd is NEG_INF or bd <= f.degree + g.degree)
    return "30 triples"


def _hreduce(seed: int) -> str:
    done = 0
    for idx in range(40):
        rng = rng_for(seed, "hreduce", idx)
        n = rng.randint(2, 3)
        H = rand_homogeneous(rng, n, rng.randint(1, 3), 3)
        coeffs = tuple(rand_rational(rng, nonzero=False) for _ in range(rng.randint(1, 3)))
        P = Poly.zero(n)
        for l, a in enumerate(coeffs):
            P = P + (H ** l).scale(a)
        try:
            if coeffs[-1]:
                k = len(coeffs) - 1
                _require(h_reduce(H, (H ** k).scale(coeffs[-1])) == (coeffs[-1], k))
            got = express_in_H(H, P)
        except HIsProperPower:
            continue
        trimmed = list(coeffs)
        while trimmed and not trimmed[-1]:
            trimmed.pop()
        _require(list(got) == trimmed)
        done += 1
    return f"{done} round-trips"


def _converse(seed: int) -> str:
    count = 0
    for idx in range(3):
        for d, t, N in ACCEPTANCE_SHAPES:
            spec = random_family(seed * 100 + idx, d, t, N)
            i = smallest_buildable_threshold(spec)
            G = build_G(spec, i)
            _require(bracket_degree(spec.F(), G) < d + i)
            _require(check_conditions(coefficient_table(spec, i), i, spec.s, spec.r).ok)
            count += 1
    return f"{count} families"


def _lattice(seed: int) -> str:
    count = 0
    for d in range(2, 7):
        for N in range(d, 11):
            for j in range(1, N):
                for t in (1, 2, 3):
                    if d % t or N % t:
                        continue
                    for k in range(0, d):
                        if d <= 2 * k * t:
                            break
                        w = weight_e0_plus(d, k)
                        brute = brute_force_min(LatticeProblem(j, N, d, t, w))
                        closed = closed_form_min(j, N, d, t, k)
                        _require((brute.value, brute.argmins) == (closed.value, closed.argmins), (d, N, j, t, k))
                        count += 1
    return f"{count} lattice problems"


def _binomial(seed: int) -> str:
    n = 0
    for d1 in (2, 3, 4):
        for k in (1, 2, 3):
            for t in [x for x in range(1, d1 + 1) if d1 % x == 0]:
                _require(binomial_identity(d1, k, t, Fraction(3, 2)).holds)
                n += 1
    return f"{n} parameter triples"


def _dependence(seed: int) -> str:
    for t in (1, 2):
        spec, _, _ = dependence_family(seed, t)
        F = spec.F()
        rep = check_dependence(spec, F, build_G(spec, 2))
        _require(rep.relation_holds and rep.theorem_applies)
        bad = perturb_component(spec, 2, seed)
        oracle = min_bracket_degree_over_G(bad.F(), 6, bad.h, bad.a_(6), degree_floor=2)
        _require(not oracle.feasible_at(2))
    return "t = 1, 2"


def _parse_roundtrip(seed: int) -> str:
    for idx in range(30):
        rng = rng_for(seed, "parse", idx)
        n = rng.randint(1, 4)
        P = rand_poly(rng, n, 4, 5)
        _require(parse_poly(P.to_text(), n) == P)
    return "30 polynomials"


CHECKS: list[tuple[str, Callable[[int], str]]] = [
    ("bracket_axioms", _bracket_axioms),
    ("h_reduction", _hreduce),
    ("constructive_converse", _converse),
    ("lattice_closed_forms", _lattice),
    ("binomial_identity", _binomial),
    ("dependence", _dependence),
    ("parse_roundtrip", _parse_roundtrip),
]


def run_selftest(seed: int = 0) -> dict:
    results = []
    for name, fn in CHECKS:
        try:
            detail, ok = fn(seed), True
        except AssertionError as exc:
            detail, ok = f"assertion failed: {exc}", False
        results.append({"check": name, "ok": ok, "detail": detail})
    return {"seed": seed, "ok": all(r["ok"] for r in results), "checks": results}
