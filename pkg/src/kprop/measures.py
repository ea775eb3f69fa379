"""Piecewise-constant valuation measures on the cake [0, 1] and the pie S^1.

Every value is a :class:`fractions.Fraction`; nothing in this module rounds.
The pie is the unit interval with 0 and 1 identified, so an arc whose start
lies after its end wraps through the origin.
"""
from __future__ import annotations

import enum
from bisect import bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Union

__all__ = [
    "Geometry",
    "Interval",
    "PiecewiseConstantMeasure",
    "InvalidSetError",
    "GeometryMismatchError",
    "NormalizationError",
    "as_fraction",
    "uniform",
    "from_pieces",
    "measure_of",
    "common_refinement",
    "measures_equal",
    "gram",
    "open_pie",
]

ZERO = Fraction(0)
ONE = Fraction(1)


class Geometry(str, enum.Enum):
    CAKE = "cake"
    PIE = "pie"


class InvalidSetError(ValueError):
    """A list of intervals that is supposed to be disjoint overlaps."""


class GeometryMismatchError(ValueError):
    pass


class NormalizationError(ValueError):
    """The density does not integrate to one.

    ``total`` is the exact integral and ``deficit`` is ``1 - total``.
    """

    def __init__(self, total: Fraction, message: str = ""):
        self.total = total
        self.deficit = ONE - total
        super().__init__(message or f"density integrates to {total} (deficit {self.deficit})")


def as_fraction(x) -> Fraction:
    """Convert ints, Fractions and "p/q" strings to a Fraction.

    Floats are rejected on purpose: a float silently carries binary rounding
    into predicates that distinguish ``>`` from ``>=``.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except ZeroDivisionError as exc:
            raise ValueError(f"zero denominator in rational {x!r}") from exc
    raise TypeError(f"cannot use {type(x).__name__} {x!r} as an exact rational")


@dataclass(frozen=True)
class Interval:
    """Closed interval of the cake, or arc of the pie.

    On the pie ``start > end`` denotes the wrapping arc ``[start, 1] u [0, end]``
    and ``start == end`` the empty arc. The full circle is ``Interval(0, 1)``.
    """

    start: Fraction
    end: Fraction
    geometry: Geometry = Geometry.CAKE

    def __post_init__(self):
        start, end = as_fraction(self.start), as_fraction(self.end)
        geometry = Geometry(self.geometry)
        if not (ZERO <= start <= ONE and ZERO <= end <= ONE):
            raise ValueError(f"interval endpoints must lie in [0, 1], got [{start}, {end}]")
        if geometry is Geometry.CAKE and start > end:
            raise ValueError(f"cake interval has start {start} after end {end}")
        object.__setattr__(self, "start", start)
        object.__setattr__(self, "end", end)
        object.__setattr__(self, "geometry", geometry)

    @property
    def wraps(self) -> bool:
        return self.start > self.end

    @property
    def length(self) -> Fraction:
        if self.wraps:
            return ONE - self.start + self.end
        return self.end - self.start

    def segments(self) -> list[tuple[Fraction, Fraction]]:
        """Non-degenerate pieces of the interval in cake coordinates."""
        if self.wraps:
            parts = [(self.start, ONE), (ZERO, self.end)]
        else:
            parts = [(self.start, self.end)]
        return [(a, b) for a, b in parts if b > a]

    def __str__(self):
        return f"[{self.start}, {self.end}]"


@dataclass(frozen=True)
class PiecewiseConstantMeasure:
    """Probability measure with a density that is constant between breakpoints.

    ``values[c]`` is the density on ``[breakpoints[c], breakpoints[c + 1]]``.
    Zero-length cells are dropped at construction.
    """

    geometry: Geometry
    breakpoints: tuple
    values: tuple
    _cumulative: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        geometry = Geometry(self.geometry)
        points = [as_fraction(b) for b in self.breakpoints]
        values = [as_fraction(v) for v in self.values]
        if len(points) != len(values) + 1:
            raise ValueError("need exactly one density value per cell")
        if not points or points[0] != ZERO or points[-1] != ONE:
            raise ValueError("breakpoints must start at 0 and end at 1")
        if any(b < a for a, b in zip(points, points[1:])):
            raise ValueError("breakpoints must be sorted")
        if any(v < 0 for v in values):
            raise ValueError("density values must be nonnegative")

        kept_points, kept_values = [ZERO], []
        for a, b, v in zip(points, points[1:], values):
            if b > a:
                kept_points.append(b)
                kept_values.append(v)

        cumulative = [ZERO]
        for a, b, v in zip(kept_points, kept_points[1:], kept_values):
            cumulative.append(cumulative[-1] + v * (b - a))
        if cumulative[-1] != ONE:
            raise NormalizationError(cumulative[-1])

        object.__setattr__(self, "geometry", geometry)
        object.__setattr__(self, "breakpoints", tuple(kept_points))
        object.__setattr__(self, "values", tuple(kept_values))
        object.__setattr__(self, "_cumulative", tuple(cumulative))

    def cdf(self, x) -> Fraction:
        """Exact measure of ``[0, x]``."""
        x = as_fraction(x)
        if x <= ZERO:
            return ZERO
        if x >= ONE:
            return ONE
        c = bisect_right(self.breakpoints, x) - 1
        return self._cumulative[c] + self.values[c] * (x - self.breakpoints[c])

    def density_at(self, x) -> Fraction:
        """Right-continuous density (the left limit at x = 1)."""
        x = as_fraction(x)
        c = min(bisect_right(self.breakpoints, x) - 1, len(self.values) - 1)
        return self.values[max(c, 0)]

    def cells(self):
        return list(zip(self.breakpoints, self.breakpoints[1:], self.values))

    @property
    def max_density(self) -> Fraction:
        return max(self.values)


def uniform(geometry: Geometry = Geometry.CAKE) -> PiecewiseConstantMeasure:
    return PiecewiseConstantMeasure(Geometry(geometry), (ZERO, ONE), (ONE,))


def from_pieces(pieces: Iterable, geometry: Geometry = Geometry.CAKE) -> PiecewiseConstantMeasure:
    """Build a measure from ``(start, end, value)`` triples; gaps get density 0.

    On the pie a triple with ``start > end`` wraps through 0.
    """
    geometry = Geometry(geometry)
    segments = []
    for start, end, value in pieces:
        arc = Interval(start, end, geometry)
        value = as_fraction(value)
        segments.extend((a, b, value) for a, b in arc.segments())
    segments.sort()
    for (a0, b0, _), (a1, b1, _) in zip(segments, segments[1:]):
        if a1 < b0:
            raise InvalidSetError(f"density pieces overlap on [{a1}, {min(b0, b1)}]")

    points, values = [ZERO], []
    for a, b, v in segments:
        if a > points[-1]:
            points.append(a)
            values.append(ZERO)
        points.append(b)
        values.append(v)
    if points[-1] < ONE:
        points.append(ONE)
        values.append(ZERO)
    return PiecewiseConstantMeasure(geometry, tuple(points), tuple(values))


IntervalSet = Union[Interval, Sequence[Interval]]


def _segments_of(s: IntervalSet, geometry: Geometry) -> list[tuple[Fraction, Fraction]]:
    intervals = [s] if isinstance(s, Interval) else list(s)
    segments = []
    for interval in intervals:
        if interval.geometry is not geometry:
            raise GeometryMismatchError(
                f"{interval.geometry.value} interval used with a {geometry.value} measure")
        segments.extend(interval.segments())
    segments.sort()
    for (a0, b0), (a1, b1) in zip(segments, segments[1:]):
        if a1 < b0:
            raise InvalidSetError(f"intervals overlap on [{a1}, {min(b0, b1)}]")
    return segments


def measure_of(m: PiecewiseConstantMeasure, s: IntervalSet) -> Fraction:
    """Exact value of an interval, or of a list of disjoint intervals."""
    return sum((m.cdf(b) - m.cdf(a) for a, b in _segments_of(s, m.geometry)), ZERO)


def _common_geometry(ms: Sequence[PiecewiseConstantMeasure]) -> Geometry:
    kinds = {m.geometry for m in ms}
    if len(kinds) > 1:
        raise GeometryMismatchError("measures mix cake and pie geometries")
    return kinds.pop() if kinds else Geometry.CAKE


def _union_breakpoints(ms: Sequence[PiecewiseConstantMeasure]) -> list[Fraction]:
    return sorted({b for m in ms for b in m.breakpoints} | {ZERO, ONE})


def common_refinement(ms: Sequence[PiecewiseConstantMeasure]):
    """Coarsest partition on which every density is constant.

    Returns ``(cells, W)`` with ``W[i][c]`` the mass player ``i`` puts on
    cell ``c``; each row of ``W`` sums to one.
    """
    geometry = _common_geometry(ms)
    points = _union_breakpoints(ms)
    cells = [Interval(a, b, geometry) for a, b in zip(points, points[1:])]
    weights = [[m.density_at(cell.start) * cell.length for cell in cells] for m in ms]
    return cells, weights


def measures_equal(a: PiecewiseConstantMeasure, b: PiecewiseConstantMeasure) -> bool:
    """Almost-everywhere equality of the two densities."""
    _common_geometry([a, b])
    points = _union_breakpoints([a, b])
    return all(a.density_at(x) == b.density_at(x) for x in points[:-1])


def gram(ms: Sequence[PiecewiseConstantMeasure]) -> list[list[Fraction]]:
    """``G[i][j]`` is the integral of ``f_i * f_j``."""
    _common_geometry(ms)
    points = _union_breakpoints(ms)
    lengths = [b - a for a, b in zip(points, points[1:])]
    dens = [[m.density_at(x) for x in points[:-1]] for m in ms]
    n = len(ms)
    G = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            G[i][j] = G[j][i] = sum(
                (u * v * w for u, v, w in zip(dens[i], dens[j], lengths)), ZERO)
    return G


def open_pie(m: PiecewiseConstantMeasure) -> PiecewiseConstantMeasure:
    """The same density read on the cake, i.e. the pie cut once at 0."""
    return PiecewiseConstantMeasure(Geometry.CAKE, m.breakpoints, m.values)
