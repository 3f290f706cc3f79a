"""Sparse multivariate polynomials with exact rational coefficients.

A ``Poly`` maps exponent tuples to nonzero ``Fraction`` coefficients.  Values are
immutable; every operation returns a new polynomial in canonical form (no zero
terms, reduced rationals).  Monomials are ordered graded-lexicographically with
``x1 > x2 > ... > xn``; that order drives printing, leading terms and
normalization everywhere in the package.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

from .errors import NvarsMismatch

Monomial = tuple[int, ...]


class _NegInf:
    """Degree of the zero polynomial.

    Compares below every integer and absorbs addition, so ``2 + deg(0)`` stays
    ``NEG_INF``.  It is deliberately not a float.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "NEG_INF"

    def __str__(self) -> str:
        return "-inf"

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("NEG_INF")

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __sub__(self, other):
        return self

    def __reduce__(self):
        return (_NegInf, ())


NEG_INF = _NegInf()


def grlex_key(mono: Monomial) -> tuple[int, Monomial]:
    return (sum(mono), mono)


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"coefficient must be rational, got {type(c).__name__}")


class Poly:
    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Monomial, object] | None = None):
        if nvars < 1:
            raise ValueError("nvars must be positive")
        self.nvars = nvars
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for mono, c in terms.items():
                mono = tuple(mono)
                if len(mono) != nvars:
                    raise NvarsMismatch(f"monomial {mono} has length {len(mono)}, expected {nvars}")
                if any(e < 0 for e in mono):
                    raise ValueError(f"negative exponent in {mono}")
                c = _as_fraction(c)
                if c:
                    clean[mono] = clean.get(mono, 0) + c
                    if not clean[mono]:
                        del clean[mono]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict[Monomial, Fraction]) -> Poly:
        # caller guarantees canonical form
        p = object.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    # constructors

    @classmethod
    def zero(cls, nvars: int) -> Poly:
        return cls._raw(nvars, {})

    @classmethod
    def const(cls, nvars: int, c) -> Poly:
        c = _as_fraction(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def one(cls, nvars: int) -> Poly:
        return cls.const(nvars, 1)

    @classmethod
    def var(cls, nvars: int, i: int) -> Poly:
        """The variable ``x_i`` (1-based)."""
        if not 1 <= i <= nvars:
            raise IndexError(f"variable index {i} out of range 1..{nvars}")
        mono = tuple(1 if k == i - 1 else 0 for k in range(nvars))
        return cls._raw(nvars, {mono: Fraction(1)})

    @classmethod
    def monomial(cls, exps: Iterable[int], c=1) -> Poly:
        exps = tuple(exps)
        return cls(len(exps), {exps: c})

    # basic queries

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return MappingProxyType(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self.sorted_terms())

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms from highest to lowest in graded-lex order."""
        return sorted(self._terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def degree(self):
        if not self._terms:
            return NEG_INF
        return max(sum(m) for m in self._terms)

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.nvars, Fraction(0))

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def leading_term(self) -> tuple[Monomial, Fraction]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        mono = max(self._terms, key=grlex_key)
        return mono, self._terms[mono]

    def leading_coefficient(self) -> Fraction:
        return self.leading_term()[1]

    def variables(self) -> set[int]:
        """0-based indices of variables that occur."""
        out = set()
        for m in self._terms:
            out.update(k for k, e in enumerate(m) if e)
        return out

    def degree_in(self, k: int) -> int:
        """Degree in the 0-based variable ``k`` (-1 for the zero polynomial)."""
        return max((m[k] for m in self._terms), default=-1)

    # arithmetic

    def _check(self, other: Poly) -> None:
        if other.nvars != self.nvars:
            raise NvarsMismatch(f"nvars mismatch: {self.nvars} vs {other.nvars}")

    def _coerce(self, other) -> Poly | None:
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, Rational)):
            return Poly.const(self.nvars, other)
        return None

    def __add__(self, other) -> Poly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for m, c in small.items():
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                v += c
                if v:
                    out[m] = v
                else:
                    del out[m]
        return Poly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly._raw(self.nvars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> Poly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Poly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c) -> Poly:
        c = _as_fraction(c)
        if not c:
            return Poly.zero(self.nvars)
        return Poly._raw(self.nvars, {m: v * c for m, v in self._terms.items()})

    def __mul__(self, other) -> Poly:
        if isinstance(other, (int, Fraction, Rational)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        a, b = self._terms, other._terms
        if not a or not b:
            return Poly.zero(self.nvars)
        if len(a) < len(b):
            a, b = b, a
        out: dict[Monomial, Fraction] = {}
        get = out.get
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = tuple(x + y for x, y in zip(ma, mb))
                out[m] = get(m, 0) + ca * cb
        return Poly._raw(self.nvars, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Poly.one(self.nvars)
        if k == 0:
            return result
        if len(self._terms) == 1:
            (m, c), = self._terms.items()
            return Poly._raw(self.nvars, {tuple(e * k for e in m): c ** k})
        base = self
        while True:
            if k & 1:
                result = result * base
            k >>= 1
            if not k:
                return result
            base = base * base

    def mul_term(self, mono: Monomial, c: Fraction) -> Poly:
        return Poly._raw(
            self.nvars,
            {tuple(x + y for x, y in zip(m, mono)): v * c for m, v in self._terms.items()},
        )

    # structure

    def diff(self, i: int) -> Poly:
        """Partial derivative with respect to ``x_i`` (1-based)."""
        if not 1 <= i <= self.nvars:
            raise IndexError(f"variable index {i} out of range 1..{self.nvars}")
        k = i - 1
        out = {}
        for m, c in self._terms.items():
            e = m[k]
            if e:
                out[m[:k] + (e - 1,) + m[k + 1:]] = c * e
        return Poly._raw(self.nvars, out)

    def component(self, deg: int) -> Poly:
        return Poly._raw(self.nvars, {m: c for m, c in self._terms.items() if sum(m) == deg})

    def components(self) -> dict[int, Poly]:
        out: dict[int, dict] = {}
        for m, c in self._terms.items():
            out.setdefault(sum(m), {})[m] = c
        return {deg: Poly._raw(self.nvars, t) for deg, t in sorted(out.items())}

    def monic(self) -> Poly:
        """Scale so the graded-lex leading coefficient is 1 (zero stays zero)."""
        if not self._terms:
            return self
        lc = self.leading_coefficient()
        if lc == 1:
            return self
        return self.scale(1 / lc)

    def evaluate(self, point: Iterable) -> Fraction:
        point = [_as_fraction(v) for v in point]
        if len(point) != self.nvars:
            raise NvarsMismatch("point has wrong dimension")
        total = Fraction(0)
        for m, c in self._terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v *= x ** e
            total += v
        return total

    def compose(self, subs: list[Poly]) -> Poly:
        """Substitute ``subs[k]`` for ``x_{k+1}``."""
        if len(subs) != self.nvars:
            raise NvarsMismatch("need one substitution per variable")
        n = subs[0].nvars
        result = Poly.zero(n)
        cache: dict[tuple[int, int], Poly] = {}
        for m, c in self._terms.items():
            term = Poly.const(n, c)
            for k, e in enumerate(m):
                if e:
                    key = (k, e)
                    if key not in cache:
                        cache[key] = subs[k] ** e
                    term = term * cache[key]
            result = result + term
        return result

    # comparison / display

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == Poly.const(self.nvars, other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"Poly({self.nvars}, {self.to_text()!r})"

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self) -> str:
        """Canonical text, highest graded-lex term first, e.g. ``3/2*x1^2*x2 - x3 + 7``."""
        if not self._terms:
            return "0"
        parts = []
        for idx, (m, c) in enumerate(self.sorted_terms()):
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            factors = [f"x{k + 1}" if e == 1 else f"x{k + 1}^{e}" for k, e in enumerate(m) if e]
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if idx == 0:
                parts.append(body if sign == "+" else "-" + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)


def _same_nvars(operands: list[Poly]) -> None:
    n = operands[0].nvars
    for p in operands[1:]:
        if p.nvars != n:
            raise NvarsMismatch(f"nvars mismatch: {n} vs {p.nvars}")


def arith(op: str, *operands) -> Poly:
    """Dispatch ``add``, ``sub``, ``mul``, ``scale`` or ``pow``."""
    if op == "add":
        _same_nvars(list(operands))
        out = operands[0]
        for p in operands[1:]:
            out = out + p
        return out
    if op == "sub":
        a, b = operands
        return a - b
    if op == "mul":
        _same_nvars(list(operands))
        out = operands[0]
        for p in operands[1:]:
            out = out * p
        return out
    if op == "scale":
        p, c = operands
        return p.scale(c)
    if op == "pow":
        p, k = operands
        return p ** k
    raise ValueError(f"unknown op {op!r}")


def partial_derivative(P: Poly, i: int) -> Poly:
    return P.diff(i)


def homogeneous_components(P: Poly) -> list[tuple[int, Poly]]:
    """Nonzero graded parts of ``P`` in increasing degree."""
    return list(P.components().items())


def require_homogeneous(P: Poly, what: str = "polynomial") -> int:
    """Return the degree of a nonzero homogeneous ``P``; raise otherwise."""
    if P.is_zero():
        raise ValueError(f"{what} must be nonzero")
    if not P.is_homogeneous():
        raise ValueError(f"{what} must be homogeneous")
    return P.degree
