"""Strong k-proportional divisions through proper matrices.

A strong k-proportional division exists exactly when no k players share one
measure.  When it exists we build one explicitly: take a proper matrix Q
whose diagonal strictly dominates each row except against equal measures,
find an ``eps > 0`` for which ``E + eps * Q`` is a realizable sharing matrix
(E is the all-``1/n`` matrix of an exact division), and realize it by a
per-cell linear feasibility problem.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .divisions import GeneralDivision, SharingMatrix, sharing_matrix
from .measures import (
    ONE,
    ZERO,
    Interval,
    PiecewiseConstantMeasure,
    common_refinement,
    gram,
    measures_equal,
)
from .linalg import feasible_point, nullspace

__all__ = [
    "ProperMatrix",
    "EqualityClasses",
    "InfeasibleTargetError",
    "NoStrongDivisionError",
    "ProperMatrixError",
    "dependency_nullspace",
    "equality_classes",
    "strong_k_exists",
    "proper_matrix",
    "check_proper",
    "exact_division",
    "realize_sharing_matrix",
    "StrongDivision",
    "strong_k_division",
]


class InfeasibleTargetError(ValueError):
    """No partition has the requested sharing matrix."""

    def __init__(self, target, reason: str):
        self.target = target
        self.reason = reason
        super().__init__(f"target sharing matrix is not realizable: {reason}")


class NoStrongDivisionError(ValueError):
    def __init__(self, k: int, players: tuple):
        self.k = k
        self.players = players
        super().__init__(
            f"no strong {k}-proportional division exists: players {list(players)} all have the "
            f"same measure, and summing their strict inequalities over that {k}-subset gives "
            f"mu(U) > mu(U), a contradiction")


class ProperMatrixError(RuntimeError):
    pass


@dataclass(frozen=True)
class ProperMatrix:
    entries: tuple

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]


@dataclass(frozen=True)
class EqualityClasses:
    classes: tuple  # tuples of player indices, ordered by smallest member

    @property
    def max_size(self) -> int:
        return max((len(c) for c in self.classes), default=0)

    def class_of(self, i: int) -> tuple:
        return next(c for c in self.classes if i in c)


def dependency_nullspace(ms: Sequence[PiecewiseConstantMeasure]) -> list[list[Fraction]]:
    """Basis of ``{lam : sum_i lam_i f_i = 0 a.e.}``."""
    _, W = common_refinement(ms)
    ncells = len(W[0])
    # lam . W[:, c] = 0 for every cell; cell lengths are positive so density
    # values and cell masses give the same kernel
    rows = [[W[i][c] for i in range(len(ms))] for c in range(ncells)]
    return nullspace(rows, ncols=len(ms))


def equality_classes(ms: Sequence[PiecewiseConstantMeasure]) -> EqualityClasses:
    classes: list[list[int]] = []
    for i, m in enumerate(ms):
        for c in classes:
            if measures_equal(ms[c[0]], m):
                c.append(i)
                break
        else:
            classes.append([i])
    return EqualityClasses(tuple(tuple(c) for c in classes))


def strong_k_exists(ms: Sequence[PiecewiseConstantMeasure], k: int) -> bool:
    n = len(ms)
    if not 2 <= k <= n:
        raise ValueError(f"k must lie in [2, {n}], got {k}")
    return equality_classes(ms).max_size <= k - 1


def check_proper(Q, ms: Sequence[PiecewiseConstantMeasure], basis=None) -> list[str]:
    """Problems with Q as a proper matrix with the strict-diagonal property."""
    n = len(ms)
    problems = []
    for i in range(n):
        if sum(Q[i], ZERO) != 0:
            problems.append(f"row {i} sums to {sum(Q[i], ZERO)}")
    for lam in basis if basis is not None else dependency_nullspace(ms):
        for j in range(n):
            s = sum((lam[i] * Q[i][j] for i in range(n)), ZERO)
            if s != 0:
                problems.append(f"column {j} violates dependency {lam}: {s}")
    for i in range(n):
        for j in range(n):
            same = measures_equal(ms[i], ms[j])
            if Q[i][i] < Q[i][j] or (Q[i][i] == Q[i][j]) != same:
                problems.append(f"diagonal condition fails at ({i}, {j})")
    return problems


def proper_matrix(ms: Sequence[PiecewiseConstantMeasure]) -> ProperMatrix:
    """``Q[i][j] = c_i - D_ij / 2`` with ``D_ij`` the squared L2 distance of
    the densities and ``c_i`` the row mean of ``D_i. / 2``.

    The result is re-verified against the definition before it is returned.
    """
    n = len(ms)
    if n < 2:
        raise ValueError("need at least two players")
    G = gram(ms)
    D = [[G[i][i] - 2 * G[i][j] + G[j][j] for j in range(n)] for i in range(n)]
    c = [sum(row, ZERO) / (2 * n) for row in D]
    Q = tuple(tuple(c[i] - D[i][j] / 2 for j in range(n)) for i in range(n))
    problems = check_proper(Q, ms)
    if problems:
        raise ProperMatrixError("; ".join(problems))
    return ProperMatrix(Q)


def _division_from_fractions(cells: Sequence[Interval], fractions, n: int) -> GeneralDivision:
    """Lay out each cell left to right, player 0 first."""
    geometry = cells[0].geometry
    shares = [[] for _ in range(n)]
    for cell, row in zip(cells, fractions):
        a = cell.start
        for j in range(n):
            b = cell.end if j == n - 1 else a + row[j] * cell.length
            if b > a:
                shares[j].append(Interval(a, b, geometry))
            a = b
    return GeneralDivision(geometry, [_merge(share) for share in shares])


def _merge(share: list) -> list:
    merged = []
    for piece in share:
        if merged and merged[-1].end == piece.start:
            merged[-1] = Interval(merged[-1].start, piece.end, piece.geometry)
        else:
            merged.append(piece)
    return merged


def exact_division(ms: Sequence[PiecewiseConstantMeasure]) -> GeneralDivision:
    """Everyone gets ``1/n`` of every refinement cell, so ``mu_i(X_j) = 1/n``."""
    n = len(ms)
    cells, _ = common_refinement(ms)
    return _division_from_fractions(cells, [[Fraction(1, n)] * n for _ in cells], n)


def realize_sharing_matrix(target, ms: Sequence[PiecewiseConstantMeasure]) -> GeneralDivision:
    """A division whose sharing matrix is exactly ``target``.

    Solves for ``lam[c][j] >= 0``, the fraction of refinement cell c given to
    player j, with ``sum_j lam[c][j] = 1`` and ``sum_c W[i][c] lam[c][j] =
    target[i][j]``.  Measures are constant on cells, so every achievable
    sharing matrix is achieved by such fractions; infeasibility therefore
    means no partition at all has this matrix.
    """
    n = len(ms)
    rows = [list(r) for r in target]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValueError(f"target must be {n}x{n}")
    rows = [[Fraction(x) for x in r] for r in rows]
    for i, r in enumerate(rows):
        if sum(r, ZERO) != ONE:
            raise ValueError(f"target row {i} sums to {sum(r, ZERO)}, not 1")
        if any(x < 0 or x > 1 for x in r):
            raise ValueError(f"target row {i} has an entry outside [0, 1]")

    cells, W = common_refinement(ms)
    C = len(cells)
    nvar = C * n  # variable index c * n + j
    A, b = [], []
    for c in range(C):
        row = [ZERO] * nvar
        for j in range(n):
            row[c * n + j] = ONE
        A.append(row)
        b.append(ONE)
    # the last column of each target row follows from the others and the cell rows
    for i in range(n):
        for j in range(n - 1):
            row = [ZERO] * nvar
            for c in range(C):
                row[c * n + j] = W[i][c]
            A.append(row)
            b.append(rows[i][j])
    x = feasible_point(A, b)
    if x is None:
        raise InfeasibleTargetError(rows, "the per-cell allocation problem has no nonnegative solution")
    fractions = [x[c * n:(c + 1) * n] for c in range(C)]
    division = _division_from_fractions(cells, fractions, n)
    achieved = sharing_matrix(division, ms)
    if [list(r) for r in achieved] != rows:  # pragma: no cover - guards the layout code
        raise RuntimeError("realized division does not reproduce the target matrix")
    return division


@dataclass(frozen=True)
class StrongDivision:
    division: GeneralDivision
    epsilon: Fraction
    Q: ProperMatrix
    matrix: SharingMatrix
    attempts: int


def _eps_max(Q: ProperMatrix) -> Fraction:
    n = Q.n
    base = Fraction(1, n)
    bounds = []
    for row in Q:
        for q in row:
            if q > 0:
                bounds.append((1 - base) / q)
            elif q < 0:
                bounds.append(base / -q)
    return min(bounds) if bounds else ONE


def strong_k_division(ms: Sequence[PiecewiseConstantMeasure], k: int,
                      max_halvings: int = 30) -> StrongDivision:
    """Realize ``E + eps Q`` for the largest ``eps = eps_max / 2^t`` that works."""
    n = len(ms)
    if not 2 <= k <= n:
        raise ValueError(f"k must lie in [2, {n}], got {k}")
    classes = equality_classes(ms)
    big = next((c for c in classes.classes if len(c) >= k), None)
    if big is not None:
        raise NoStrongDivisionError(k, big[:k])

    Q = proper_matrix(ms)
    base = Fraction(1, n)
    eps = _eps_max(Q)
    for attempt in range(max_halvings + 1):
        target = [[base + eps * q for q in row] for row in Q]
        try:
            division = realize_sharing_matrix(target, ms)
        except InfeasibleTargetError:
            eps /= 2
            continue
        return StrongDivision(division, eps, Q, SharingMatrix(target), attempt + 1)
    raise RuntimeError(
        f"no realizable eps found down to eps_max * 2^-{max_halvings}; "
        "a positive eps exists, so this is a solver limit, not non-existence")
