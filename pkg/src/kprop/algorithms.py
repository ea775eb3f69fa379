"""Constructive cake-cutting protocols in the Robertson-Webb query model.

Players are only accessed through :class:`RWOracle` objects, which answer
``eval`` and ``cut`` queries exactly and record every call in a shared
:class:`QueryLedger`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Optional, Sequence, Union

from .divisions import ConnectedDivision
from .measures import (
    ONE,
    ZERO,
    Geometry,
    Interval,
    PiecewiseConstantMeasure,
    as_fraction,
    measure_of,
)

__all__ = [
    "QueryLedger",
    "RWOracle",
    "CutUnreachableError",
    "BisectionError",
    "oracles_for",
    "cut_and_choose",
    "last_diminisher",
    "even_paz",
    "even_paz_cut_count",
    "EquitableResult",
    "equitable_connected",
]


@dataclass
class QueryLedger:
    eval_count: int = 0
    cut_count: int = 0

    def to_json(self):
        return {"eval": self.eval_count, "cut": self.cut_count}


class CutUnreachableError(ValueError):
    """The requested value exceeds what is left to the right of the start."""


class RWOracle:
    """Eval/cut access to one player's measure on the cake."""

    def __init__(self, measure: PiecewiseConstantMeasure, ledger: Optional[QueryLedger] = None):
        if measure.geometry is not Geometry.CAKE:
            raise ValueError("query oracles work on the cake; cut a pie open first")
        self.measure = measure
        self.ledger = ledger if ledger is not None else QueryLedger()

    def eval(self, a, b) -> Fraction:
        self.ledger.eval_count += 1
        return measure_of(self.measure, Interval(as_fraction(a), as_fraction(b)))

    def cut(self, a, v) -> Fraction:
        """Leftmost ``b >= a`` with ``mu([a, b]) = v``."""
        self.ledger.cut_count += 1
        return _cut(self.measure, as_fraction(a), as_fraction(v))

    def cut_right(self, a, v) -> Fraction:
        """Rightmost ``b >= a`` with ``mu([a, b]) = v``."""
        self.ledger.cut_count += 1
        return _cut_right(self.measure, as_fraction(a), as_fraction(v))


def _cut(m: PiecewiseConstantMeasure, a: Fraction, v: Fraction) -> Fraction:
    if v < 0:
        raise ValueError("cut value must be nonnegative")
    target = m.cdf(a) + v
    if v == 0:
        return a
    if target > ONE:
        raise CutUnreachableError(f"only {ONE - m.cdf(a)} is left to the right of {a}, asked for {v}")
    for lo, hi, dens in m.cells():
        if hi <= a or dens == 0:
            continue
        start = max(lo, a)
        end_value = m.cdf(hi)
        if end_value >= target:
            return start + (target - m.cdf(start)) / dens
    return ONE  # pragma: no cover - unreachable once target <= 1


def _cut_right(m: PiecewiseConstantMeasure, a: Fraction, v: Fraction) -> Fraction:
    if v < 0:
        raise ValueError("cut value must be nonnegative")
    target = m.cdf(a) + v
    if target > ONE:
        raise CutUnreachableError(f"only {ONE - m.cdf(a)} is left to the right of {a}, asked for {v}")
    for lo, hi, dens in m.cells():
        if dens and m.cdf(hi) > target:
            return max(a, lo + (target - m.cdf(lo)) / dens)
    return ONE


def oracles_for(ms: Sequence[PiecewiseConstantMeasure], ledger: Optional[QueryLedger] = None) -> list[RWOracle]:
    ledger = ledger if ledger is not None else QueryLedger()
    return [RWOracle(m, ledger) for m in ms]


def _from_pieces(pieces: list[tuple[Fraction, Fraction, int]]) -> ConnectedDivision:
    pieces = sorted(pieces, key=lambda p: (p[0], p[1]))
    cuts = [b for _, b, _ in pieces[:-1]]
    return ConnectedDivision(Geometry.CAKE, cuts, [player for _, _, player in pieces])


def cut_and_choose(oracles: Sequence[RWOracle]) -> ConnectedDivision:
    """Player 0 halves the cake by its own measure, player 1 picks.

    Player 1 takes the left piece on a tie.
    """
    if len(oracles) != 2:
        raise ValueError("cut and choose needs exactly two players")
    cutter, chooser = oracles
    x = cutter.cut(ZERO, Fraction(1, 2))
    left, right = chooser.eval(ZERO, x), chooser.eval(x, ONE)
    assignment = (1, 0) if left >= right else (0, 1)
    return ConnectedDivision(Geometry.CAKE, (x,), assignment)


def last_diminisher(oracles: Sequence[RWOracle]) -> ConnectedDivision:
    """Each round every remaining player marks its ``1/n`` point from the
    current left end; the lowest mark (lowest index on ties) takes the piece."""
    n = len(oracles)
    if n < 1:
        raise ValueError("need at least one player")
    share = Fraction(1, n)
    remaining = list(range(n))
    a = ZERO
    pieces = []
    while len(remaining) > 1:
        marks = [(oracles[i].cut(a, share), i) for i in remaining]
        b, winner = min(marks)
        pieces.append((a, b, winner))
        remaining.remove(winner)
        a = b
    pieces.append((a, ONE, remaining[0]))
    return _from_pieces(pieces)


def even_paz(oracles: Sequence[RWOracle]) -> ConnectedDivision:
    """Divide and conquer: cut where the ``ceil(m/2)``-th smallest mark falls.

    Every player of a group of m on ``[a, b]`` marks the point splitting its
    value of ``[a, b]`` as ``ceil(m/2) : floor(m/2)``; the ``ceil(m/2)``
    players with the leftmost marks recurse on the left part, the rest on the
    right.  At the top level every value of ``[0, 1]`` is 1, so no eval
    query is spent there.
    """
    n = len(oracles)
    if n < 1:
        raise ValueError("need at least one player")
    pieces = []

    def solve(players, a, b, whole):
        m = len(players)
        if m == 1:
            pieces.append((a, b, players[0]))
            return
        left_size = (m + 1) // 2
        marks = []
        for i in players:
            value = ONE if whole else oracles[i].eval(a, b)
            marks.append((oracles[i].cut(a, value * Fraction(left_size, m)), i))
        marks.sort()
        x = marks[left_size - 1][0]
        solve([i for _, i in marks[:left_size]], a, x, False)
        solve([i for _, i in marks[left_size:]], x, b, False)

    solve(list(range(n)), ZERO, ONE, True)
    return _from_pieces(pieces)


def even_paz_cut_count(n: int) -> int:
    """Closed form of the cut queries :func:`even_paz` spends on n players.

    ``T(1) = 0`` and ``T(m) = m + T(ceil(m/2)) + T(floor(m/2))``.
    """
    @_memo
    def T(m):
        return 0 if m <= 1 else m + T((m + 1) // 2) + T(m // 2)
    return T(n)


def _memo(f):
    cache = {}

    def wrapped(m):
        if m not in cache:
            cache[m] = f(m)
        return cache[m]
    return wrapped


class BisectionError(RuntimeError):
    def __init__(self, message: str, bracket: tuple = ()):
        self.bracket = bracket
        super().__init__(message)


@dataclass(frozen=True)
class EquitableResult:
    division: ConnectedDivision
    value: Fraction  # the common value v*
    order: tuple
    ledger: QueryLedger = field(compare=False, default_factory=QueryLedger)


def _chain(oracles, order, v, rightmost: bool = False):
    """Cut positions when every player in ``order`` but the last takes
    exactly ``v``, each cut as far left (or right) as possible, plus the last
    player's signed excess ``mu_last([x_{n-1}, 1]) - v``.

    The leftmost chain returns ``(None, None)`` when it overruns the cake; the
    rightmost chain clamps at 1 instead, since the positions reachable at each
    stage form an interval whose right end is cut off at 1.
    """
    x = ZERO
    cuts = []
    for i in order[:-1]:
        try:
            x = oracles[i].cut_right(x, v) if rightmost else oracles[i].cut(x, v)
        except CutUnreachableError:
            if not rightmost:
                return None, None
            x = ONE
        cuts.append(x)
    return cuts, oracles[order[-1]].eval(x, ONE) - v


def _final_cut(oracles, order, v):
    """Where the last player's own v-cut would land; past 1 it is extended by the shortfall."""
    cuts, excess = _chain(oracles, order, v)
    if cuts is None:
        return None
    if excess >= 0:
        last = oracles[order[-1]]
        return last.cut(cuts[-1] if cuts else ZERO, v)
    return ONE - excess


_LOW, _HIGH, _FEASIBLE = -1, 1, 0


def _classify(oracles, order, v):
    """Whether v is below, above or at an achievable common value.

    The cuts reachable at each stage form an interval between the leftmost
    and the rightmost chain, so v is achievable iff the last player's excess
    is >= 0 on the left chain and <= 0 on the right one.
    """
    _, e_left = _chain(oracles, order, v)
    if e_left is None or e_left < 0:
        return _HIGH
    _, e_right = _chain(oracles, order, v, rightmost=True)
    if e_right > 0:
        return _LOW
    return _FEASIBLE


def _place_cuts(oracles, order, v):
    """Concrete cuts for an achievable v, chosen backwards from the last player."""
    n = len(order)
    if n == 1:
        return []
    lows, _ = _chain(oracles, order, v)
    last = oracles[order[-1]]
    # last cut: the last player values [x, 1] at exactly v
    level = last.eval(ZERO, ONE) - v
    cuts = [max(last.cut(ZERO, level), lows[-1])]
    for s in range(n - 2, 0, -1):
        o = oracles[order[s]]
        level = o.eval(ZERO, cuts[0]) - v
        cuts.insert(0, max(o.cut(ZERO, level), lows[s - 1]))
    return cuts


def _solve_order(oracles, order, tol_exp: int, max_extra: int = 40):
    lo, hi = ZERO, ONE
    seen = []

    def record(v):
        pos = _final_cut(oracles, order, v)
        if pos is not None:
            seen.append((v, pos))
            ordered = sorted(seen)
            for (v0, p0), (v1, p1) in zip(ordered, ordered[1:]):
                if p1 < p0:
                    raise AssertionError(f"final cut moved left between v={v0} and v={v1}")

    if _classify(oracles, order, hi) == _FEASIBLE:
        return hi
    limit = Fraction(1, 2 ** tol_exp)
    extra = 0
    while True:
        while hi - lo >= limit:
            mid = (lo + hi) / 2
            record(mid)
            verdict = _classify(oracles, order, mid)
            if verdict == _FEASIBLE:
                return mid
            if verdict == _LOW:
                lo = mid
            else:
                hi = mid
        root = _polish(oracles, order, lo, hi)
        if root is not None:
            return root
        extra += 1
        if extra > max_extra:
            raise BisectionError(f"no exact equitable value found in [{lo}, {hi}]", (lo, hi))
        limit /= 2


def _polish(oracles, order, lo, hi):
    """Exact candidates for v* inside a tiny bracket.

    On each side of the bracket the chain positions and the excess are affine
    in v, so v* is either a root of the extrapolated excess or the value at
    which an extrapolated cut reaches a density breakpoint (where a leftmost
    or rightmost cut jumps across a zero-density stretch).
    """
    width = hi - lo
    delta = width / 2 ** 20
    breaks = sorted({b for o in oracles for b in o.measure.breakpoints})
    candidates = []
    for a, b, rightmost in ((lo, lo + delta, False), (hi - delta, hi, True), (lo, hi, False)):
        ca, ea = _chain(oracles, order, a, rightmost)
        cb, eb = _chain(oracles, order, b, rightmost)
        if ca is None or cb is None:
            continue
        if ea != eb:
            candidates.append(a + ea * (b - a) / (ea - eb))
        for pa, pb in zip(ca, cb):
            if pa == pb:
                continue
            slope = (pb - pa) / (b - a)
            candidates.extend(a + (x - pa) / slope for x in breaks)
    for v in sorted(set(candidates)):
        if lo <= v <= hi and _classify(oracles, order, v) == _FEASIBLE:
            return v
    return None


def equitable_connected(ms: Sequence[PiecewiseConstantMeasure],
                        order: Union[Sequence[int], str] = "search",
                        tol_exp: int = 40, max_search: int = 7) -> EquitableResult:
    """Connected equitable division of the cake for a fixed left-to-right order.

    The common value v* is located by bisection on v (the excess of the last
    player is decreasing in v) until the bracket is below ``2**-tol_exp``,
    then recovered exactly from the linear piece of the bracket.  With
    ``order="search"`` every order is tried (n <= ``max_search``) and the
    first one, in lexicographic order, whose v* is at least 1/n is returned.
    """
    n = len(ms)
    if any(m.geometry is not Geometry.CAKE for m in ms):
        raise ValueError("equitable_connected works on the cake; open a pie at 0 first")
    ledger = QueryLedger()
    oracles = oracles_for(ms, ledger)

    def build(order, v):
        return ConnectedDivision(Geometry.CAKE, _place_cuts(oracles, order, v), order)

    if order != "search":
        order = tuple(order)
        if sorted(order) != list(range(n)):
            raise ValueError(f"order {order} is not a permutation of 0..{n - 1}")
        v = _solve_order(oracles, order, tol_exp)
        return EquitableResult(build(order, v), v, order, ledger)

    if n > max_search:
        raise ValueError(f"order search is limited to n <= {max_search}")
    for candidate in permutations(range(n)):
        try:
            v = _solve_order(oracles, candidate, tol_exp)
        except BisectionError:
            continue
        if v >= Fraction(1, n):
            return EquitableResult(build(candidate, v), v, candidate, ledger)
    raise BisectionError(f"no order reached a common value of at least 1/{n}")
