"""Parameter bundle for a pair F, G whose top forms are powers of a common h."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .divisibility import is_power_up_to_scalar, multiplicity
from .errors import InvalidSpec
from .poly import Poly


@dataclass(frozen=True, eq=False)
class FamilySpec:
    """F = F_1 + ... + F_s + h^(d/t) and G_N = a_N * h^(N/t).

    ``F_components`` maps ``l`` (1..s) to the degree-``l`` component of F; absent
    entries are zero.  ``a`` maps ``j`` to the free constant ``a_j`` (absent = 0).
    """

    nvars: int
    d: int
    N: int
    h: Poly
    F_components: dict[int, Poly] = field(default_factory=dict)
    a: dict[int, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        n, d, N, h = self.nvars, self.d, self.N, self.h
        if n < 2:
            raise InvalidSpec("nvars must be at least 2")
        if d < 2:
            raise InvalidSpec("d must be at least 2")
        if N < d:
            raise InvalidSpec(f"need N >= d (got N={N}, d={d})")
        if h.nvars != n:
            raise InvalidSpec("h has the wrong number of variables")
        if h.is_zero() or not h.is_homogeneous() or h.degree < 1:
            raise InvalidSpec("h must be a nonconstant homogeneous polynomial")
        t = h.degree
        if d % t:
            raise InvalidSpec(f"deg h = {t} must divide d = {d}")
        if N % t:
            raise InvalidSpec(f"deg h = {t} must divide N = {N}")
        root = is_power_up_to_scalar(h)
        if root is not None:
            raise InvalidSpec(f"h must not be a power of a lower-degree polynomial: h ~ ({root[0]})^{root[1]}")
        comps = {}
        for l, p in self.F_components.items():
            if not 1 <= l <= d - 1:
                raise InvalidSpec(f"F component index {l} outside 1..{d - 1}")
            if p.nvars != n:
                raise InvalidSpec(f"F_{l} has the wrong number of variables")
            if not p.is_zero():
                if not p.is_homogeneous() or p.degree != l:
                    raise InvalidSpec(f"F_{l} must be homogeneous of degree {l}")
                comps[l] = p
        consts = {}
        for j, v in self.a.items():
            v = Fraction(v)
            if not 1 <= j <= N:
                raise InvalidSpec(f"constant a_{j} outside 1..N")
            if v and j % t:
                raise InvalidSpec(f"a_{j} must be 0 because deg h = {t} does not divide {j}")
            if v:
                consts[j] = v
        if not consts.get(N):
            raise InvalidSpec("a_N must be nonzero")
        object.__setattr__(self, "F_components", dict(sorted(comps.items())))
        object.__setattr__(self, "a", dict(sorted(consts.items())))

    @property
    def t(self) -> int:
        return self.h.degree

    @property
    def s(self) -> int:
        return self.d - 1

    @property
    def r(self) -> int:
        return self.d // self.t

    @property
    def d1(self) -> int | None:
        return self.d // 2 if self.d % 2 == 0 else None

    @property
    def rtilde(self) -> int | None:
        d1 = self.d1
        if d1 is None or d1 % self.t:
            return None
        return d1 // self.t

    def F_comp(self, l: int) -> Poly:
        if l == self.d:
            return self.h ** self.r
        return self.F_components.get(l, Poly.zero(self.nvars))

    def a_(self, j: int) -> Fraction:
        return self.a.get(j, Fraction(0))

    def F(self) -> Poly:
        out = self.h ** self.r
        for p in self.F_components.values():
            out = out + p
        return out

    def G_top(self) -> Poly:
        return (self.h ** (self.N // self.t)).scale(self.a_(self.N))

    @cached_property
    def h_split(self) -> dict[int, tuple[int, Poly]]:
        """For each nonzero F_l: (multiplicity of h in F_l, cofactor)."""
        return {l: multiplicity(self.h, p) for l, p in self.F_components.items()}

    def replace(self, **changes) -> FamilySpec:
        kw = dict(nvars=self.nvars, d=self.d, N=self.N, h=self.h,
                  F_components=self.F_components, a=self.a)
        kw.update(changes)
        return FamilySpec(**kw)

    def describe(self) -> dict:
        return {
            "nvars": self.nvars,
            "d": self.d,
            "N": self.N,
            "t": self.t,
            "h": self.h.to_text(),
            "F": {str(l): p.to_text() for l, p in self.F_components.items()},
            "a": {str(j): str(v) for j, v in self.a.items()},
        }


def gcd_ok(d: int, N: int, t: int) -> bool:
    return math.gcd(d, N) % t == 0
