"""Seeded random polynomials and rationals.

Every generator takes an explicit ``random.Random`` so results depend only on
the seed that built it.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .poly import Poly


def rng_for(seed: int, *labels) -> random.Random:
    """Independent stream for ``(seed, *labels)``; stable across runs and processes."""
    key = ":".join(str(x) for x in (seed,) + labels)
    return random.Random(key)


def rand_rational(rng: random.Random, num: int = 9, den: int = 4, nonzero: bool = True) -> Fraction:
    while True:
        v = Fraction(rng.randint(-num, num), rng.randint(1, den))
        if v or not nonzero:
            return v


def monomials_of_degree(nvars: int, deg: int) -> list[tuple[int, ...]]:
    if nvars == 1:
        return [(deg,)]
    out = []
    for a in range(deg, -1, -1):
        out.extend((a,) + rest for rest in monomials_of_degree(nvars - 1, deg - a))
    return out


def rand_homogeneous(rng: random.Random, nvars: int, deg: int, terms: int = 3,
                     num: int = 9, den: int = 4) -> Poly:
    """Nonzero homogeneous polynomial with at most ``terms`` monomials."""
    monos = monomials_of_degree(nvars, deg)
    chosen = rng.sample(monos, min(terms, len(monos)))
    return Poly(nvars, {m: rand_rational(rng, num, den) for m in chosen})


def rand_poly(rng: random.Random, nvars: int, max_deg: int, terms: int = 4,
              num: int = 9, den: int = 4, constant: bool = True) -> Poly:
    """Sparse polynomial of degree at most ``max_deg``."""
    pool = [m for deg in range(0 if constant else 1, max_deg + 1) for m in monomials_of_degree(nvars, deg)]
    chosen = rng.sample(pool, min(terms, len(pool)))
    return Poly(nvars, {m: rand_rational(rng, num, den) for m in chosen})
