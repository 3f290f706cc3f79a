"""Recognizing polynomials that commute with a homogeneous H as polynomials in H."""

from __future__ import annotations

from fractions import Fraction

from .bracket import poisson_bracket
from .divisibility import is_power_up_to_scalar
from .errors import HIsProperPower, Inconsistent, NotCommuting
from .poly import Poly, require_homogeneous


def _check_H(H: Poly) -> int:
    deg = require_homogeneous(H, "H")
    if deg == 0:
        raise ValueError("H must be nonconstant")
    root = is_power_up_to_scalar(H)
    if root is not None:
        g, m = root
        raise HIsProperPower(f"H is a constant times ({g})^{m}")
    return deg


def _check_commuting(H: Poly, P: Poly) -> None:
    if not poisson_bracket(H, P).is_zero():
        raise NotCommuting("[H, P] != 0")


def _reduce_component(H: Poly, degH: int, P: Poly) -> tuple[Fraction, int]:
    degP = P.degree
    if degP % degH:
        raise Inconsistent(
            f"nonzero homogeneous piece of degree {degP} is not a multiple of deg H = {degH}"
        )
    k = degP // degH
    Hk = H ** k
    a = P.leading_coefficient() / Hk.leading_coefficient()
    if P != Hk.scale(a):
        raise Inconsistent(f"P is not a scalar multiple of H^{k}")
    return a, k


def h_reduce(H: Poly, P: Poly) -> tuple[Fraction, int]:
    """Return ``(a, k)`` with ``P == a * H**k`` for homogeneous ``P`` commuting with ``H``.

    ``H`` must be homogeneous, nonconstant and not a power (up to a scalar).
    The zero polynomial reduces to ``(0, 0)``.
    """
    degH = _check_H(H)
    if P.is_zero():
        return Fraction(0), 0
    require_homogeneous(P, "P")
    _check_commuting(H, P)
    return _reduce_component(H, degH, P)


def express_in_H(H: Poly, P: Poly) -> tuple[Fraction, ...]:
    """Coefficients ``(a_0, ..., a_k)`` with ``P == sum(a_l * H**l)``; ``()`` for ``P == 0``."""
    degH = _check_H(H)
    if P.is_zero():
        return ()
    _check_commuting(H, P)
    coeffs: dict[int, Fraction] = {}
    for deg, comp in P.components().items():
        if deg == 0:
            coeffs[0] = comp.constant_term()
            continue
        a, k = _reduce_component(H, degH, comp)
        coeffs[k] = a
    top = max(coeffs)
    return tuple(coeffs.get(l, Fraction(0)) for l in range(top + 1))
