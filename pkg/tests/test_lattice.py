import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bracketlab.lattice import (
    LatticeProblem, brute_force_min, closed_form_min, in_index_set, index_set, phi_is_bijection,
    predicted_min_alpha0, predicted_min_alpha0_k_alphas, predicted_min_t, predicted_min_tie,
    psi_is_bijection, simplex_data, simplex_f, simplex_vertices, tie_shape, tie_weight, weight_e0_plus,
)


def _brute_index_set(j, N, d, t):
    """Independent enumeration: box search over a0 and bounded a_l."""
    out = []
    s = d - 1
    lo = -(d * N)
    for a0 in range(lo, N + 1):
        def rec(l, acc):
            if l > s:
                a = (a0,) + tuple(acc)
                if t * a0 + sum(i * x for i, x in enumerate(acc, 1)) == j and t * a0 + d * sum(acc) <= N:
                    out.append(a)
                return
            for v in range(N + 1):
                rec(l + 1, acc + [v])
        rec(1, [])
    return sorted(out)


@pytest.mark.parametrize("j,N,d,t", [(2, 3, 2, 1), (4, 6, 4, 1), (2, 6, 4, 2), (3, 5, 3, 1), (1, 4, 2, 2)])
def test_index_set_matches_box_search(j, N, d, t):
    assert index_set(j, N, d, t) == _brute_index_set(j, N, d, t)


def test_index_set_examples():
    assert index_set(2, 3, 2) == [(1, 1), (2, 0)]
    assert (-2, 0, 0, 2) in index_set(4, 6, 4)
    assert index_set(6, 6, 4) == [(6, 0, 0, 0)]
    assert in_index_set((-2, 0, 0, 2), 4, 6, 4)
    assert not in_index_set((-2, 0, 0, -1), 4, 6, 4)


def test_brute_force_examples():
    assert brute_force_min(LatticeProblem(2, 3, 2, 1, (1, 0))).value == 1
    assert brute_force_min(LatticeProblem(2, 3, 2, 1, (1, 0))).argmins == [(1, 1)]
    r = brute_force_min(LatticeProblem(4, 6, 4, 1, (1, 0, 0, 0)))
    assert (r.value, r.argmins) == (-2, [(-2, 0, 0, 2)])
    zero = brute_force_min(LatticeProblem(4, 6, 4, 1))
    assert zero.value == 0 and zero.argmins == index_set(4, 6, 4)


def test_problem_validation():
    with pytest.raises(ValueError):
        LatticeProblem(6, 6, 4)
    with pytest.raises(ValueError):
        LatticeProblem(2, 6, 4, 3)
    with pytest.raises(ValueError):
        LatticeProblem(2, 6, 4, 1, (1, 0))


def test_closed_form_examples():
    assert predicted_min_alpha0(4, 6, 4).argmins == [(-2, 0, 0, 2)]
    assert predicted_min_alpha0(2, 3, 2).value == 1
    assert predicted_min_alpha0(5, 6, 4).value == 2  # j = N - 1 gives N - d
    assert predicted_min_alpha0_k_alphas(4, 6, 4, 1).value == 0
    with pytest.raises(ValueError):
        predicted_min_alpha0_k_alphas(4, 6, 4, 2)
    r = predicted_min_t(2, 6, 4, 2, 0)
    assert (r.value, r.argmins) == (-5, [(-5, 0, 0, 4)])
    assert predicted_min_t(8, 10, 6, 2, 1).value == 1


def test_tie_example():
    r = predicted_min_tie(2, 6, 2)
    assert r.value == -2
    assert r.argmins == [(-10, 0, 0, 4), (-6, 0, 1, 2), (-2, 0, 2, 0)]
    b = brute_force_min(LatticeProblem(2, 6, 4, 1, tie_weight(2, 1)))
    assert (b.value, b.argmins) == (r.value, r.argmins)
    # N - j odd: no half-integral point at the far end
    assert predicted_min_tie(3, 6, 2).argmins[-1][-2:] == (1, 1)


def _grid():
    for d in range(2, 9):
        for N in range(d, 17):
            for t in range(1, math.gcd(d, N) + 1):
                if math.gcd(d, N) % t:
                    continue
                yield d, N, t


@pytest.mark.parametrize("d", range(2, 9))
def test_closed_forms_match_brute_force_on_grid(d):
    checked = 0
    for dd, N, t in _grid():
        if dd != d:
            continue
        for j in range(1, N):
            ks = [Fraction(k) for k in range(d) if d > 2 * k * t]
            if d % 2 == 0 and (d // 2) % t == 0:
                try:
                    tie_shape(N, d // 2)
                    ks.append(Fraction(d // 2, t))
                except ValueError:
                    pass
            for k in ks:
                try:
                    closed = closed_form_min(j, N, d, t, k)
                except ValueError as exc:
                    # the t-version needs an integral corner; then the feasible set must say so too
                    assert "dj - sN" in str(exc)
                    continue
                brute = brute_force_min(LatticeProblem(j, N, d, t, weight_e0_plus(d, k)))
                assert (brute.value, brute.argmins) == (closed.value, closed.argmins), (d, N, t, j, k)
                if d > 2 * k * t:
                    assert len(brute.argmins) == 1
                checked += 1
    assert checked > 0


def test_simplex_examples():
    verts = simplex_vertices(4, 6, 4)
    assert verts == [(0, 0, 0), (Fraction(2, 3), 0, 0), (0, 1, 0), (0, 0, 2)]
    sd = simplex_data(4, 6, 4, 1)
    assert sd.clause == "e" and sd.minimum == 0 and min(sd.vertex_values) == 0
    assert sd.lattice_argmins == [(-2, 0, 0, 2)]
    assert simplex_f(4, (0, 0, 1), (0, 0, 2)) == 0
    tie = simplex_data(2, 6, 4, 2)
    assert tie.clause == "f" and tie.lattice_argmins == predicted_min_tie(2, 6, 2).argmins


@pytest.mark.parametrize("j,N,d", [(3, 5, 3), (4, 6, 4), (1, 7, 5), (2, 9, 3)])
def test_phi_bijection(j, N, d):
    assert phi_is_bijection(j, N, d)


@pytest.mark.parametrize("j,N,d,t", [(2, 6, 4, 2), (4, 6, 2, 2), (3, 9, 6, 3), (6, 12, 4, 4)])
def test_psi_bijection(j, N, d, t):
    assert psi_is_bijection(j, N, d, t)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 5), st.integers(0, 6), st.lists(st.integers(0, 3), min_size=5, max_size=5))
def test_min_nondecreasing_in_j_for_nonnegative_weights(d, extra, w):
    N = d + extra
    weight = tuple(w[:d])
    values = [brute_force_min(LatticeProblem(j, N, d, 1, weight)).value for j in range(1, N)]
    assert values == sorted(values)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 5), st.integers(0, 6), st.integers(1, 12), st.lists(st.integers(-3, 3), min_size=5, max_size=5))
def test_argmins_are_feasible_and_optimal(d, extra, j, w):
    N = d + extra
    j = 1 + j % (N - 1) if N > 1 else 1
    p = LatticeProblem(j, N, d, 1, tuple(w[:d]))
    r = brute_force_min(p)
    pts = index_set(j, N, d)
    for a in r.argmins:
        assert a in pts
        assert sum(x * y for x, y in zip(p.weight, a)) == r.value
    assert all(sum(x * y for x, y in zip(p.weight, a)) >= r.value for a in pts)
