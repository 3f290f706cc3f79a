"""Closed-form coefficients c^(j)_alpha and assembly of the components G_j.

For a family F = F_1 + ... + F_s + h^r (r = d/t) and G_N = a_N h^(N/t), the
component of degree j is

    G_j = sum over alpha in Z^(t)_{j,N,d} of c^(j)_alpha * h^a0 * F_1^a1 ... F_s^as

where a0 may be negative.  Assembly never forms Laurent polynomials: each
F_l is split once as h^(e_l) * cofactor, the resulting h-exponents are shifted
to be non-negative, and the sum is divided by h the same number of times.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .divisibility import exact_divide
from .errors import NonDivisible
from .family import FamilySpec
from .lattice import IndexAlpha, in_index_set, index_set
from .poly import Poly


def _check_params(j: int, N: int, d: int, t: int) -> None:
    if d < 2:
        raise ValueError("d must be at least 2")
    if t < 1 or math.gcd(d, N) % t:
        raise ValueError(f"t = {t} must divide gcd(d, N) = {math.gcd(d, N)}")
    if not 1 <= j <= N:
        raise ValueError(f"need 1 <= j <= N (got j={j}, N={N})")


def enumerate_indices(j: int, N: int, d: int, t: int = 1) -> list[IndexAlpha]:
    """Members of Z^(t)_{j,N,d}, sorted lexicographically."""
    _check_params(j, N, d, t)
    return index_set(j, N, d, t)


def multiplier(alpha: Sequence[int], r: int) -> Fraction:
    """prod_{k=1}^{|alpha|} (a0 + r k) / prod_l prod_{i=1}^{a_l} (r i), |alpha| = a1 + ... + as."""
    a0, rest = alpha[0], alpha[1:]
    num = 1
    for k in range(1, sum(rest) + 1):
        num *= a0 + r * k
        if num == 0:
            return Fraction(0)
    den = 1
    for a in rest:
        for i in range(1, a + 1):
            den *= r * i
    return Fraction(num, den)


def a_index(alpha: Sequence[int], d: int, t: int) -> int:
    return t * alpha[0] + d * sum(alpha[1:])


def coeff_c(j: int, alpha: Sequence[int], spec: FamilySpec) -> Fraction:
    """The coefficient c^(j)_alpha for the given family."""
    alpha = tuple(alpha)
    if not in_index_set(alpha, j, spec.N, spec.d, spec.t):
        raise ValueError(f"{alpha} is not in Z^({spec.t})_{{{j},{spec.N},{spec.d}}}")
    a = spec.a_(a_index(alpha, spec.d, spec.t))
    if not a:
        return Fraction(0)
    return multiplier(alpha, spec.r) * a


class _Powers:
    """Memoized powers of a fixed polynomial."""

    def __init__(self, base: Poly):
        self._cache = {0: Poly.one(base.nvars), 1: base}

    def __call__(self, k: int) -> Poly:
        p = self._cache.get(k)
        if p is None:
            p = self._cache[k] = self._cache[1] ** k
        return p


def _power_tables(spec: FamilySpec) -> tuple[_Powers, dict[int, _Powers]]:
    cache = spec.__dict__.get("_bracketlab_powers")
    if cache is None:
        cache = (_Powers(spec.h), {l: _Powers(cof) for l, (_, cof) in spec.h_split.items()})
        spec.__dict__["_bracketlab_powers"] = cache
    return cache


def build_Gj(spec: FamilySpec, j: int) -> Poly:
    """The degree-j component of G, or ``NonDivisible`` if the h-powers do not cancel."""
    _check_params(j, spec.N, spec.d, spec.t)
    hpow, cofpow = _power_tables(spec)
    split = spec.h_split
    terms = []
    for alpha in index_set(j, spec.N, spec.d, spec.t):
        rest = alpha[1:]
        if any(a and (l not in split) for l, a in enumerate(rest, start=1)):
            continue  # some F_l is zero
        c = coeff_c(j, alpha, spec)
        if not c:
            continue
        hexp = alpha[0] + sum(split[l][0] * a for l, a in enumerate(rest, start=1) if a)
        terms.append((c, rest, hexp))
    if not terms:
        return Poly.zero(spec.nvars)
    shift = max(0, -min(e for _, _, e in terms))
    acc = Poly.zero(spec.nvars)
    for c, rest, hexp in terms:
        p = hpow(hexp + shift)
        for l, a in enumerate(rest, start=1):
            if a:
                p = p * cofpow[l](a)
        acc = acc + p.scale(c)
    for step in range(shift):
        q = exact_divide(spec.h, acc)
        if q is None:
            raise NonDivisible(
                f"G_{j}: h^{shift - step} does not divide the cleared numerator "
                "(the family violates the divisibility the construction needs)"
            )
        acc = q
    return acc


def build_components(spec: FamilySpec, i: int) -> dict[int, Poly]:
    """G_i, ..., G_N keyed by degree."""
    if not 1 <= i <= spec.N:
        raise ValueError(f"threshold i must satisfy 1 <= i <= N (got {i})")
    return {j: build_Gj(spec, j) for j in range(i, spec.N + 1)}


def build_G(spec: FamilySpec, i: int, lower: Mapping[int, Poly] | Sequence[Poly] | None = None) -> Poly:
    """G = (given lower components below degree i) + G_i + ... + G_N.

    ``lower`` is either a mapping degree -> component or the list G_1, ..., G_(i-1).
    Components of degree below ``i`` are not touched by the construction; they
    default to zero.
    """
    comps = build_components(spec, i)
    G = Poly.zero(spec.nvars)
    for p in comps.values():
        G = G + p
    if lower:
        items = lower.items() if isinstance(lower, Mapping) else enumerate(lower, start=1)
        for deg, p in items:
            if not 1 <= deg < i:
                raise ValueError(f"lower component of degree {deg} must lie below i = {i}")
            if not p.is_zero() and (not p.is_homogeneous() or p.degree != deg):
                raise ValueError(f"lower component {deg} must be homogeneous of degree {deg}")
            G = G + p
    return G


def smallest_buildable_threshold(spec: FamilySpec) -> int:
    """Least i such that every G_j, j >= i, assembles without a divisibility failure."""
    i = spec.N
    while i > 1:
        try:
            build_Gj(spec, i - 1)
        except NonDivisible:
            break
        i -= 1
    return i


@dataclass
class CoefficientTable:
    """Entries (j, alpha) -> c^(j)_alpha; absent entries are zero."""

    d: int
    N: int
    t: int
    entries: dict[tuple[int, IndexAlpha], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (j, alpha), v in self.entries.items():
            alpha = tuple(alpha)
            if not in_index_set(alpha, j, self.N, self.d, self.t):
                raise ValueError(f"entry ({j}, {alpha}) is outside Z^({self.t})_{{{j},{self.N},{self.d}}}")
            if v:
                clean[(j, alpha)] = Fraction(v)
        self.entries = dict(sorted(clean.items()))

    def get(self, j: int, alpha: IndexAlpha) -> Fraction:
        return self.entries.get((j, alpha), Fraction(0))

    def with_entry(self, j: int, alpha: Iterable[int], value) -> CoefficientTable:
        e = dict(self.entries)
        e[(j, tuple(alpha))] = Fraction(value)
        return CoefficientTable(self.d, self.N, self.t, e)

    def to_json(self) -> list[dict]:
        return [{"j": j, "alpha": list(a), "c": str(v)} for (j, a), v in self.entries.items()]


def coefficient_table(spec: FamilySpec, i: int) -> CoefficientTable:
    entries = {}
    for j in range(i, spec.N + 1):
        for alpha in index_set(j, spec.N, spec.d, spec.t):
            c = coeff_c(j, alpha, spec)
            if c:
                entries[(j, alpha)] = c
    return CoefficientTable(spec.d, spec.N, spec.t, entries)


@dataclass
class ConditionResult:
    holds: bool
    witness: dict | None = None
    checked: int = 0

    def to_json(self) -> dict:
        return {"holds": self.holds, "witness": self.witness, "checked": self.checked}


@dataclass
class ConditionReport:
    C1: ConditionResult
    C2: ConditionResult
    P1: ConditionResult

    @property
    def ok(self) -> bool:
        return self.C1.holds and self.C2.holds and self.P1.holds

    def to_json(self) -> dict:
        return {"C1": self.C1.to_json(), "C2": self.C2.to_json(), "P1": self.P1.to_json(), "ok": self.ok}


def _shift(alpha: IndexAlpha, pos: int, by: int) -> IndexAlpha:
    out = list(alpha)
    out[pos] += by
    return tuple(out)


def _check_c1(table: CoefficientTable, i: int, s: int) -> ConditionResult:
    """(a_k + 1) c^(w+s-l)_(a+e_k) == (a_l + 1) c^(w+s-k)_(a+e_l) for all windows w >= i.

    Any nonzero term involves a stored entry, so the check is anchored at the
    stored entries beta = alpha + e_k.
    """
    seen = set()
    count = 0
    for (u, beta) in table.entries:
        for k in range(1, s + 1):
            if beta[k] == 0:
                continue
            alpha = _shift(beta, k, -1)
            for l in range(1, s + 1):
                w = u - s + l
                if w < i or l == k:
                    continue
                key = (w, alpha, min(k, l), max(k, l))
                if key in seen:
                    continue
                seen.add(key)
                count += 1
                lhs = (alpha[k] + 1) * table.get(u, beta)
                rhs = (alpha[l] + 1) * table.get(w + s - k, _shift(alpha, l, 1))
                if lhs != rhs:
                    return ConditionResult(False, {
                        "window": w, "alpha": list(alpha), "k": k, "l": l,
                        "lhs": str(lhs), "rhs": str(rhs)}, count)
    return ConditionResult(True, None, count)


def _p1_instances(table: CoefficientTable, i: int, s: int, r: int):
    """Triples (u, alpha, l) with u >= i and alpha_l > 0 where a P1 side is stored."""
    out = set()
    for (u, beta) in table.entries:
        if u >= i:
            alpha = _shift(beta, 0, r)
            for l in range(1, s + 1):
                if alpha[l] > 0:
                    out.add((u, alpha, l))
        for l in range(1, s + 1):
            lev = u - 1 - s + l
            if lev >= i:
                out.add((lev, _shift(beta, l, 1), l))
    return sorted(out)


def _p1_fails(table: CoefficientTable, s: int, r: int, u: int, alpha: IndexAlpha, l: int):
    lhs = table.get(u, _shift(alpha, 0, -r))
    rhs = Fraction(alpha[0], r * alpha[l]) * table.get(u + 1 + s - l, _shift(alpha, l, -1))
    return None if lhs == rhs else (lhs, rhs)


def _check_p1(table: CoefficientTable, i: int, s: int, r: int) -> ConditionResult:
    """c^(u)_(a - r e_0) == a0 / (r a_l) * c^(u+1+s-l)_(a - e_l) at every level u >= i."""
    inst = _p1_instances(table, i, s, r)
    for n, (u, alpha, l) in enumerate(inst, start=1):
        bad = _p1_fails(table, s, r, u, alpha, l)
        if bad:
            return ConditionResult(False, {"level": u, "alpha": list(alpha), "l": l,
                                           "lhs": str(bad[0]), "rhs": str(bad[1])}, n)
    return ConditionResult(True, None, len(inst))


def _check_c2(table: CoefficientTable, i: int, s: int, r: int) -> ConditionResult:
    """For each window w >= i and 1 <= l, k <= s:
    c^(w+l-1)_(a - r e_0) == a0 / (r a_k) * c^(w+l+s-k)_(a - e_k).

    Window w with offset l is the recursion at level w + l - 1; a failure is
    reported against the earliest window covering its level.
    """
    inst = _p1_instances(table, i, s, r)
    for n, (u, alpha, k) in enumerate(inst, start=1):
        bad = _p1_fails(table, s, r, u, alpha, k)
        if bad:
            w = max(i, u - s + 1)
            return ConditionResult(False, {"window": w, "alpha": list(alpha), "l": u - w + 1, "k": k,
                                           "lhs": str(bad[0]), "rhs": str(bad[1])}, n)
    return ConditionResult(True, None, len(inst))


def check_conditions(table: CoefficientTable, i: int, s: int, r: int) -> ConditionReport:
    """Check the symmetry condition C1 and the recursions C2, P1 on a coefficient table."""
    if s < 1 or r < 1:
        raise ValueError("need s >= 1 and r >= 1")
    return ConditionReport(_check_c1(table, i, s), _check_c2(table, i, s, r), _check_p1(table, i, s, r))
