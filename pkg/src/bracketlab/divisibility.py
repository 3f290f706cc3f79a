"""Exact division, gcd, square-free parts and power roots over the rationals."""

from __future__ import annotations

import heapq
from fractions import Fraction

from .poly import Poly, grlex_key


def _heap_key(mono):
    return (-sum(mono), tuple(-e for e in mono))


def exact_divide(divisor: Poly, P: Poly) -> Poly | None:
    """Return ``Q`` with ``divisor * Q == P``, or ``None`` if no such polynomial exists."""
    if divisor.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if divisor.nvars != P.nvars:
        from .errors import NvarsMismatch
        raise NvarsMismatch("nvars mismatch")
    n = P.nvars
    if P.is_zero():
        return Poly.zero(n)
    if P.degree < divisor.degree:
        return None
    lead_m, lead_c = divisor.leading_term()
    dterms = list(divisor.terms.items())
    rem = dict(P.terms)
    heap = [_heap_key(m) for m in rem]
    heapq.heapify(heap)
    quotient: dict = {}
    while rem:
        key = heapq.heappop(heap)
        m = tuple(-e for e in key[1])
        c = rem.get(m)
        if c is None:
            continue
        q = tuple(a - b for a, b in zip(m, lead_m))
        if min(q) < 0:
            return None
        qc = c / lead_c
        quotient[q] = qc
        for dm, dc in dterms:
            mm = tuple(a + b for a, b in zip(dm, q))
            v = rem.get(mm)
            if v is None:
                rem[mm] = -qc * dc
                heapq.heappush(heap, _heap_key(mm))
            else:
                v -= qc * dc
                if v:
                    rem[mm] = v
                else:
                    del rem[mm]
    return Poly(n, quotient)


def divides(divisor: Poly, P: Poly) -> bool:
    return exact_divide(divisor, P) is not None


def multiplicity(h: Poly, P: Poly) -> tuple[int, Poly]:
    """Largest ``e`` with ``h**e | P`` and the cofactor ``P / h**e``.

    ``P`` must be nonzero and ``h`` nonconstant.
    """
    if P.is_zero():
        raise ValueError("multiplicity of zero is unbounded")
    if h.is_constant():
        raise ValueError("h must be nonconstant")
    e = 0
    while True:
        q = exact_divide(h, P)
        if q is None:
            return e, P
        P = q
        e += 1


# gcd: recursive content / primitive-part reduction with primitive PRS in a main variable


def _coeffs_in(P: Poly, k: int) -> dict[int, Poly]:
    buckets: dict[int, dict] = {}
    for m, c in P.terms.items():
        buckets.setdefault(m[k], {})[m[:k] + (0,) + m[k + 1:]] = c
    return {e: Poly._raw(P.nvars, t) for e, t in buckets.items()}


def _content(P: Poly, k: int) -> Poly:
    g = Poly.zero(P.nvars)
    for c in _coeffs_in(P, k).values():
        g = _gcd(g, c)
        if g.is_constant():
            return Poly.one(P.nvars)
    return g.monic()


def _primitive(P: Poly, k: int) -> Poly:
    c = _content(P, k)
    if c.is_constant():
        return P.monic()
    return exact_divide(c, P).monic()


def _prem(A: Poly, B: Poly, k: int) -> Poly:
    n = A.nvars
    db = B.degree_in(k)
    cb = _coeffs_in(B, k)
    lcb = cb[db]
    R = A
    while not R.is_zero():
        dr = R.degree_in(k)
        if dr < db:
            break
        lcr = _coeffs_in(R, k)[dr]
        shift = tuple(dr - db if j == k else 0 for j in range(n))
        R = R * lcb - (B * lcr).mul_term(shift, Fraction(1))
    return R


def _prs_gcd(A: Poly, B: Poly, k: int) -> Poly:
    n = A.nvars
    if A.degree_in(k) < B.degree_in(k):
        A, B = B, A
    while True:
        if B.degree_in(k) <= 0:
            return Poly.one(n)
        R = _prem(A, B, k)
        if R.is_zero():
            return B.monic()
        if R.degree_in(k) == 0:
            return Poly.one(n)
        A, B = B, _primitive(R, k)


def _gcd(P: Poly, Q: Poly) -> Poly:
    if P.is_zero():
        return Q.monic()
    if Q.is_zero():
        return P.monic()
    if P.is_constant() or Q.is_constant():
        return Poly.one(P.nvars)
    k = max(P.variables() | Q.variables())
    cp, cq = _content(P, k), _content(Q, k)
    c = _gcd(cp, cq)
    pp = exact_divide(cp, P)
    pq = exact_divide(cq, Q)
    if pp.is_constant() or pq.is_constant():
        return c
    return (c * _prs_gcd(pp, pq, k)).monic()


def gcd_multivariate(P: Poly, Q: Poly) -> Poly:
    """Greatest common divisor with graded-lex leading coefficient 1."""
    if P.nvars != Q.nvars:
        from .errors import NvarsMismatch
        raise NvarsMismatch("nvars mismatch")
    if P.is_zero() and Q.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    return _gcd(P, Q)


def sqrf(h: Poly) -> Poly:
    """Product of the distinct irreducible factors of ``h``, normalized monic."""
    if h.is_zero() or h.is_constant():
        raise ValueError("sqrf needs a nonconstant polynomial")
    g = h
    for i in range(1, h.nvars + 1):
        g = gcd_multivariate(g, h.diff(i))
        if g.is_constant():
            break
    return exact_divide(g, h).monic()


def is_square_free(h: Poly) -> bool:
    return sqrf(h) == h.monic()


# power roots


def _iroot(n: int, m: int) -> int | None:
    """Exact integer m-th root of n >= 0, or None."""
    if n < 2:
        return n
    x = 1 << -(-n.bit_length() // m)
    while True:
        y = ((m - 1) * x + n // x ** (m - 1)) // m
        if y >= x:
            break
        x = y
    return x if x ** m == n else None


def rational_root(c: Fraction, m: int) -> Fraction | None:
    c = Fraction(c)
    sign = 1
    if c < 0:
        if m % 2 == 0:
            return None
        sign, c = -1, -c
    num = _iroot(c.numerator, m)
    den = _iroot(c.denominator, m)
    if num is None or den is None:
        return None
    return sign * Fraction(num, den)


def _power_root(H: Poly, m: int) -> Poly | None:
    n = H.nvars
    lead_m, lead_c = H.leading_term()
    if any(e % m for e in lead_m):
        return None
    rc = rational_root(lead_c, m)
    if rc is None:
        return None
    t1 = tuple(e // m for e in lead_m)
    root = Poly(n, {t1: rc})
    denom_c = m * rc ** (m - 1)
    shift = tuple((m - 1) * e for e in t1)
    last = t1
    while True:
        diff = H - root ** m
        if diff.is_zero():
            return root
        dm, dc = diff.leading_term()
        q = tuple(a - b for a, b in zip(dm, shift))
        if min(q) < 0 or grlex_key(q) >= grlex_key(last):
            return None
        root = root + Poly(n, {q: dc / denom_c})
        last = q


def is_proper_power(H: Poly) -> tuple[Poly, int] | None:
    """Return ``(g, m)`` with ``g**m == H`` and ``m >= 2`` maximal, else ``None``.

    Only rational roots are found: ``2*x1^2`` is not a power here even though it
    is one over the complex numbers (see :func:`is_power_up_to_scalar`).
    """
    if H.is_zero() or H.is_constant():
        raise ValueError("is_proper_power needs a nonconstant polynomial")
    D = H.degree
    for m in range(D, 1, -1):
        if D % m:
            continue
        g = _power_root(H, m)
        if g is not None and g ** m == H:
            return g, m
    return None


def is_power_up_to_scalar(H: Poly) -> tuple[Poly, int] | None:
    """Decide whether ``H = c * g**m`` with ``m >= 2`` for some nonzero constant ``c``.

    This is the complex-field notion of being a power; a monic root of a monic
    polynomial always has rational coefficients, so the test is exact over Q.
    """
    return is_proper_power(H.monic())
