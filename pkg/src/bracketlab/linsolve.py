"""Exact Gaussian elimination over the rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def rref(rows: list[dict[int, Fraction]], ncols: int) -> tuple[list[dict[int, Fraction]], list[int]]:
    """Reduced row echelon form of a sparse augmented matrix.

    Each row maps column index to a nonzero entry; column ``ncols`` holds the
    right-hand side.  Returns the nonzero reduced rows and their pivot columns.
    """
    rows = [dict(r) for r in rows if r]
    pivots: list[int] = []
    done: list[dict[int, Fraction]] = []
    for col in range(ncols):
        pivot_idx = None
        for idx, r in enumerate(rows):
            if col in r:
                if pivot_idx is None or len(r) < len(rows[pivot_idx]):
                    pivot_idx = idx
        if pivot_idx is None:
            continue
        prow = rows.pop(pivot_idx)
        inv = 1 / prow[col]
        prow = {c: v * inv for c, v in prow.items()}
        for r in rows + done:
            f = r.get(col)
            if f is None:
                continue
            for c, v in prow.items():
                nv = r.get(c, 0) - f * v
                if nv:
                    r[c] = nv
                else:
                    r.pop(c, None)
        rows = [r for r in rows if r]
        done.append(prow)
        pivots.append(col)
    # leftover rows have no coefficient columns: either empty or 0 = rhs
    return done + rows, pivots + [ncols] * len(rows)


def solve_sparse(rows: list[dict[int, Fraction]], ncols: int):
    """Solve a sparse augmented system; see :func:`linear_solve` for the result shape."""
    reduced, pivots = rref(rows, ncols)
    if any(p == ncols for p in pivots):
        return None
    particular = [Fraction(0)] * ncols
    pivot_of = {}
    for r, p in zip(reduced, pivots):
        particular[p] = r.get(ncols, Fraction(0))
        pivot_of[p] = r
    free = [c for c in range(ncols) if c not in pivot_of]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for p, r in pivot_of.items():
            coef = r.get(f)
            if coef:
                v[p] = -coef
        basis.append(v)
    return particular, basis


def linear_solve(A: Sequence[Sequence], b: Sequence):
    """Solve ``A x = b`` exactly.

    Returns ``(particular, null_basis)`` where free variables are zero in the
    particular solution, or ``None`` when the system is inconsistent.
    """
    nrows = len(A)
    if len(b) != nrows:
        raise ValueError(f"dimension mismatch: A has {nrows} rows, b has {len(b)} entries")
    ncols = len(A[0]) if nrows else 0
    rows = []
    for i, row in enumerate(A):
        if len(row) != ncols:
            raise ValueError(f"row {i} has length {len(row)}, expected {ncols}")
        r = {c: Fraction(v) for c, v in enumerate(row) if v}
        if b[i]:
            r[ncols] = Fraction(b[i])
        rows.append(r)
    return solve_sparse(rows, ncols)
