"""Index sets Z_{j,N,d}, Z^(t)_{j,N,d}, the simplex Delta_{j,N,d} and minimization over them.

An index is a tuple ``(a0, a1, ..., as)`` with ``s = d - 1``; ``a0`` may be
negative.  Membership in Z^(t)_{j,N,d} means ``t*a0 + sum(l*a_l) == j`` and
``t*a0 + d*sum(a_l) <= N``.  Eliminating ``a0`` turns the second condition into
``sum((d - l) * a_l) <= N - j``, which bounds the enumeration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

IndexAlpha = tuple[int, ...]


def _simplex_points(d: int, budget: int) -> Iterator[tuple[int, ...]]:
    """All (a1..as) in N^s with sum((d - l) * a_l) <= budget."""
    s = d - 1

    def rec(l: int, left: int, prefix: tuple[int, ...]):
        if l > s:
            yield prefix
            return
        cost = d - l
        for v in range(left // cost + 1):
            yield from rec(l + 1, left - cost * v, prefix + (v,))

    if budget < 0:
        return
    yield from rec(1, budget, ())


def index_set(j: int, N: int, d: int, t: int = 1) -> list[IndexAlpha]:
    """Members of Z^(t)_{j,N,d}, lexicographically sorted."""
    out = []
    for rest in _simplex_points(d, N - j):
        num = j - sum(l * a for l, a in enumerate(rest, start=1))
        if num % t == 0:
            out.append((num // t,) + rest)
    out.sort()
    return out


def in_index_set(alpha: Sequence[int], j: int, N: int, d: int, t: int = 1) -> bool:
    if len(alpha) != d or any(a < 0 for a in alpha[1:]):
        return False
    deg = t * alpha[0] + sum(l * a for l, a in enumerate(alpha[1:], start=1))
    return deg == j and t * alpha[0] + d * sum(alpha[1:]) <= N


@dataclass(frozen=True)
class LatticeProblem:
    j: int
    N: int
    d: int
    t: int = 1
    weight: tuple = ()

    def __post_init__(self):
        if self.d < 2:
            raise ValueError("d must be at least 2")
        if not 1 <= self.j < self.N:
            raise ValueError(f"need 1 <= j < N (got j={self.j}, N={self.N})")
        if self.d > self.N:
            raise ValueError("need d <= N")
        if math.gcd(self.d, self.N) % self.t:
            raise ValueError(f"t = {self.t} must divide gcd(d, N)")
        w = tuple(Fraction(x) for x in self.weight) or (Fraction(0),) * self.d
        if len(w) != self.d:
            raise ValueError(f"weight needs {self.d} entries (a0..as)")
        object.__setattr__(self, "weight", w)


@dataclass
class MinResult:
    value: Fraction
    argmins: list[IndexAlpha] = field(default_factory=list)

    def to_json(self) -> dict:
        return {"value": str(self.value), "argmins": [list(a) for a in self.argmins]}


def weight_e0_plus(d: int, k) -> tuple:
    """Weight of the functional a0 + k * a_s."""
    return (Fraction(1),) + (Fraction(0),) * (d - 2) + (Fraction(k),)


def minimize(points: Sequence[IndexAlpha], weight: Sequence) -> MinResult:
    if not points:
        raise ValueError("infeasible: empty index set")
    best = None
    arg: list[IndexAlpha] = []
    for p in points:
        v = sum((w * a for w, a in zip(weight, p) if w), Fraction(0))
        if best is None or v < best:
            best, arg = v, [p]
        elif v == best:
            arg.append(p)
    return MinResult(best, sorted(arg))


def brute_force_min(p: LatticeProblem) -> MinResult:
    """Exhaustive minimum of the weight functional over Z^(t)_{j,N,d}."""
    return minimize(index_set(p.j, p.N, p.d, p.t), p.weight)


def _check_jN(j: int, N: int, d: int) -> None:
    if d < 2:
        raise ValueError("d must be at least 2")
    if not 1 <= j < N:
        raise ValueError(f"need 1 <= j < N (got j={j}, N={N})")


def _corner(d: int, a0: int, last: int) -> IndexAlpha:
    return (a0,) + (0,) * (d - 2) + (last,)


def predicted_min_alpha0(j: int, N: int, d: int) -> MinResult:
    """min a0 over Z_{j,N,d}: value dj - sN, unique at (dj - sN, 0, ..., 0, N - j)."""
    _check_jN(j, N, d)
    s = d - 1
    v = d * j - s * N
    return MinResult(Fraction(v), [_corner(d, v, N - j)])


def predicted_min_alpha0_k_alphas(j: int, N: int, d: int, k: int) -> MinResult:
    """min a0 + k*a_s over Z_{j,N,d} for d > 2k."""
    _check_jN(j, N, d)
    if k < 0:
        raise ValueError("k must be non-negative")
    if d <= 2 * k:
        raise ValueError(f"need d > 2k (got d={d}, k={k}); d = 2k is the tie case")
    if k == 0:
        return predicted_min_alpha0(j, N, d)
    s = d - 1
    return MinResult(Fraction((d - k) * j - (s - k) * N), [_corner(d, d * j - s * N, N - j)])


def predicted_min_t(j: int, N: int, d: int, t: int, k: int) -> MinResult:
    """min a0 + k*a_s over Z^(t)_{j,N,d} for d > 2kt."""
    _check_jN(j, N, d)
    if t < 1 or math.gcd(d, N) % t:
        raise ValueError(f"t = {t} must divide gcd(d, N)")
    if k < 0:
        raise ValueError("k must be non-negative")
    if d <= 2 * k * t:
        raise ValueError(f"need d > 2kt (got d={d}, k={k}, t={t})")
    if t == 1:
        return predicted_min_alpha0_k_alphas(j, N, d, k)
    s = d - 1
    corner0 = d * j - s * N
    if corner0 % t:
        raise ValueError("t must divide dj - sN")
    value = Fraction((d - k * t) * j - (s - k * t) * N, t)
    return MinResult(value, [_corner(d, corner0 // t, N - j)])


def tie_shape(N: int, d1: int) -> int:
    """Return k >= 1 with N = d1 * (2k + 1), or raise."""
    if d1 < 2:
        raise ValueError("d1 must be at least 2")
    if N % d1 or (N // d1) % 2 == 0 or N // d1 < 3:
        raise ValueError(f"N = {N} is not of the form d1*(2k+1) with k >= 1, d1 = {d1}")
    return (N // d1 - 1) // 2


def tie_weight(d1: int, t: int) -> tuple:
    return weight_e0_plus(2 * d1, Fraction(d1, t))


def predicted_min_tie(j: int, N: int, d1: int, t: int = 1) -> MinResult:
    """min a0 + (d1/t)*a_s over Z^(t)_{j,N,2*d1}; the minimum is attained on a segment."""
    d = 2 * d1
    _check_jN(j, N, d)
    k = tie_shape(N, d1)
    if t < 1 or d1 % t:
        raise ValueError(f"t = {t} must divide d1 = {d1}")
    s = d - 1
    r, rt = d // t, d1 // t
    value = Fraction(rt * j - (d1 - 1) * rt * (2 * k + 1))
    base = (d * j - s * N) // t
    args = []
    for l in range((N - j) // 2 + 1):
        args.append((base + r * l,) + (0,) * (s - 2) + (l, N - j - 2 * l))
    return MinResult(value, sorted(args))


# simplex Delta_{j,N,d} = {a in R_+^s : sum((d - l) a_l) <= N - j}


def phi(j: int, point: Sequence[int]) -> IndexAlpha:
    return (j - sum(l * a for l, a in enumerate(point, start=1)),) + tuple(point)


def simplex_vertices(j: int, N: int, d: int) -> list[tuple[Fraction, ...]]:
    s = d - 1
    verts = [(Fraction(0),) * s]
    for l in range(1, s + 1):
        v = [Fraction(0)] * s
        v[l - 1] = Fraction(N - j, d - l)
        verts.append(tuple(v))
    return verts


def simplex_f(j: int, beta: Sequence[int], point: Sequence) -> Fraction:
    """f_beta(a) = j - sum((l - beta_l) * a_l)."""
    return j - sum((Fraction(l - b) * Fraction(a) for l, (b, a) in enumerate(zip(beta, point), start=1)),
                   Fraction(0))


@dataclass
class SimplexData:
    j: int
    N: int
    d: int
    beta: tuple[int, ...]
    vertices: list[tuple[Fraction, ...]]
    vertex_values: list[Fraction]
    clause: str
    minimum: Fraction
    lattice_argmins: list[IndexAlpha]

    def to_json(self) -> dict:
        return {
            "j": self.j, "N": self.N, "d": self.d,
            "beta": list(self.beta),
            "vertices": [[str(x) for x in v] for v in self.vertices],
            "vertex_values": [str(v) for v in self.vertex_values],
            "clause": self.clause,
            "minimum": str(self.minimum),
            "lattice_argmins": [list(a) for a in self.lattice_argmins],
        }


def simplex_data(j: int, N: int, d: int, beta_s: int = 0) -> SimplexData:
    """Vertices of the simplex, values of f_(0,...,0,beta_s) there, and its minimum.

    For ``2*beta_s < d`` the minimum is taken only at the vertex (0, ..., 0, N - j);
    for ``2*beta_s == d`` it is taken along the edge towards ((N - j)/2) e_{s-1}.
    Lattice minimizers are returned as full indices via ``phi``.
    """
    _check_jN(j, N, d)
    s = d - 1
    beta = (0,) * (s - 1) + (beta_s,)
    verts = simplex_vertices(j, N, d)
    values = [simplex_f(j, beta, v) for v in verts]
    minimum = Fraction(j - (s - beta_s) * (N - j))
    if 2 * beta_s < d:
        clause = "e"
        args = [phi(j, (0,) * (s - 1) + (N - j,))]
    elif 2 * beta_s == d:
        if s < 2:
            raise ValueError("the tie clause needs s >= 2")
        clause = "f"
        args = [phi(j, (0,) * (s - 2) + (l, N - j - 2 * l)) for l in range((N - j) // 2 + 1)]
    else:
        raise ValueError("2*beta_s > d is not covered")
    return SimplexData(j, N, d, beta, verts, values, clause, minimum, sorted(args))


def phi_is_bijection(j: int, N: int, d: int) -> bool:
    """phi maps the lattice points of Delta_{j,N,d} onto Z_{j,N,d} one-to-one."""
    pts = list(_simplex_points(d, N - j))
    images = [phi(j, p) for p in pts]
    z = index_set(j, N, d, 1)
    back_ok = all(tuple(a[1:]) in set(pts) for a in z)
    return len(set(images)) == len(pts) and sorted(images) == z and back_ok


def psi_is_bijection(j: int, N: int, d: int, t: int) -> bool:
    """Dividing a0 by t maps Z_{j,N,d} with t | a0 onto Z^(t)_{j,N,d} one-to-one."""
    src = [a for a in index_set(j, N, d, 1) if a[0] % t == 0]
    images = sorted((a[0] // t,) + a[1:] for a in src)
    target = index_set(j, N, d, t)
    inverse = sorted((t * a[0],) + a[1:] for a in target)
    return images == target and inverse == sorted(src) and len(set(images)) == len(src)


def closed_form_min(j: int, N: int, d: int, t: int, k) -> MinResult:
    """Route a0 + k*a_s to the matching closed form (d > 2kt or the tie d = 2kt)."""
    k = Fraction(k)
    if k.denominator == 1 and d > 2 * k * t:
        return predicted_min_t(j, N, d, t, int(k))
    if d == 2 * k * t and d % 2 == 0:
        return predicted_min_tie(j, N, d // 2, t)
    raise ValueError(f"no closed form for d={d}, t={t}, k={k}")
