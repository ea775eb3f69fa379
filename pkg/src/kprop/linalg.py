"""Exact linear algebra over the rationals: row reduction, nullspaces and a
phase-one simplex for ``A x = b, x >= 0``."""
from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

__all__ = ["rref", "nullspace", "rank", "feasible_point"]


def rref(A: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and the pivot columns."""
    m = [[Fraction(x) for x in row] for row in A]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        p = m[r][c]
        m[r] = [x / p for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(A) -> int:
    return len(rref(A)[1])


def nullspace(A: Sequence[Sequence], ncols: Optional[int] = None) -> list[list[Fraction]]:
    """Basis of ``{x : A x = 0}``, one vector per free column.

    Each basis vector has a 1 in its free column and zeros in the other free
    columns.  ``ncols`` is needed when ``A`` has no rows.
    """
    if ncols is None:
        ncols = len(A[0])
    if not A:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    m, pivots = rref(A)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -m[r][f]
        basis.append(v)
    return basis


def feasible_point(A: Sequence[Sequence], b: Sequence, max_pivots: int = 100_000) -> Optional[list[Fraction]]:
    """A vertex of ``{x >= 0 : A x = b}`` or ``None`` when the set is empty.

    Phase one of the tableau simplex method with one artificial variable per
    row and Bland's rule, in exact arithmetic, so it cannot cycle and the
    answer is never a rounding artefact.  Redundant equality rows are fine:
    their artificials stay basic at zero.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    if m == 0:
        return [Fraction(0)] * n

    # tableau rows: [coefficients of x | coefficients of artificials | rhs]
    T = []
    for i in range(m):
        row = [Fraction(x) for x in A[i]]
        rhs = Fraction(b[i])
        if rhs < 0:
            row = [-x for x in row]
            rhs = -rhs
        T.append(row + [Fraction(int(i == j)) for j in range(m)] + [rhs])
    basis = [n + i for i in range(m)]
    width = n + m

    # reduced costs of "minimize sum of artificials"
    cost = [Fraction(0)] * (width + 1)
    for row in T:
        for c in range(n):
            cost[c] -= row[c]
        cost[width] -= row[width]

    for _ in range(max_pivots):
        enter = next((c for c in range(width) if cost[c] < 0), None)
        if enter is None:
            break
        leave, best = None, None
        for i, row in enumerate(T):
            a = row[enter]
            if a > 0:
                ratio = row[width] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    leave, best = i, ratio
        if leave is None:  # cannot happen in phase one; the objective is bounded below by 0
            raise RuntimeError("phase-one simplex reported an unbounded direction")
        pivot_row = T[leave]
        p = pivot_row[enter]
        if p != 1:
            pivot_row = [x / p for x in pivot_row]
            T[leave] = pivot_row
        nz = [c for c, x in enumerate(pivot_row) if x != 0]
        for i, row in enumerate(T):
            f = row[enter]
            if i != leave and f != 0:
                for c in nz:
                    row[c] -= f * pivot_row[c]
        f = cost[enter]
        for c in nz:
            cost[c] -= f * pivot_row[c]
        basis[leave] = enter
    else:
        raise RuntimeError("phase-one simplex exceeded its pivot budget")

    if -cost[width] != 0:
        return None
    x = [Fraction(0)] * n
    for i, var in enumerate(basis):
        if var < n:
            x[var] = T[i][width]
    return x
