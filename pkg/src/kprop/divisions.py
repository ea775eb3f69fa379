"""Connected and general divisions, their validation, and sharing matrices."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

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
    "ConnectedDivision",
    "GeneralDivision",
    "SharingMatrix",
    "Violation",
    "ValidationReport",
    "InvalidDivisionError",
    "validate",
    "sharing_matrix",
    "pie_rotate",
    "to_general",
    "to_connected",
    "division_to_json",
    "division_from_json",
]


@dataclass(frozen=True)
class ConnectedDivision:
    """Every player gets one interval (cake) or one arc (pie).

    Cake ``cuts`` are the ``n - 1`` interior cut points, so piece ``p`` is
    ``[x_p, x_{p+1}]`` with ``x_0 = 0`` and ``x_n = 1``. Pie ``cuts`` are the
    ``n`` cut points in circular order and piece ``p`` is the arc from
    ``cuts[p]`` to ``cuts[p + 1]``. ``assignment[p]`` is the player who
    receives piece ``p``.
    """

    geometry: Geometry
    cuts: tuple
    assignment: tuple

    def __post_init__(self):
        object.__setattr__(self, "geometry", Geometry(self.geometry))
        object.__setattr__(self, "cuts", tuple(as_fraction(c) for c in self.cuts))
        object.__setattr__(self, "assignment", tuple(int(a) for a in self.assignment))

    @property
    def n(self) -> int:
        return len(self.assignment)

    def pieces(self) -> list[Interval]:
        if self.geometry is Geometry.CAKE:
            bounds = (ZERO, *self.cuts, ONE)
            return [Interval(a, b) for a, b in zip(bounds, bounds[1:])]
        if self.n == 1:
            return [Interval(ZERO, ONE, Geometry.PIE)]
        cuts = self.cuts
        return [Interval(cuts[p], cuts[(p + 1) % len(cuts)], Geometry.PIE)
                for p in range(len(cuts))]

    def shares(self) -> list[list[Interval]]:
        """Per-player interval lists, in player order."""
        out = [[] for _ in range(self.n)]
        for piece, player in zip(self.pieces(), self.assignment):
            out[player].append(piece)
        return out


@dataclass(frozen=True)
class GeneralDivision:
    geometry: Geometry
    shares: tuple

    def __post_init__(self):
        geometry = Geometry(self.geometry)
        shares = tuple(tuple(share) for share in self.shares)
        object.__setattr__(self, "geometry", geometry)
        object.__setattr__(self, "shares", shares)

    @property
    def n(self) -> int:
        return len(self.shares)


Division = Union[ConnectedDivision, GeneralDivision]


@dataclass(frozen=True)
class SharingMatrix:
    """``entries[i][j]`` is player i's value for the share of player j."""

    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(as_fraction(x) for x in row) for row in self.entries)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ValueError("sharing matrix must be square")
        for i, row in enumerate(rows):
            if any(x < 0 or x > 1 for x in row):
                raise ValueError(f"row {i} has an entry outside [0, 1]")
            if sum(row, ZERO) != ONE:
                raise ValueError(f"row {i} sums to {sum(row, ZERO)}, not 1")
        object.__setattr__(self, "entries", rows)

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def diagonal(self) -> tuple:
        return tuple(self.entries[i][i] for i in range(self.n))

    def to_json(self):
        return [[str(x) for x in row] for row in self.entries]

    def __str__(self):
        cells = [[str(x) for x in row] for row in self.entries]
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)


@dataclass(frozen=True)
class Violation:
    kind: str  # "overlap", "coverage", "shape", "geometry"
    message: str
    players: tuple = ()
    region: Optional[tuple] = None
    uncovered: Optional[Fraction] = None


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple = field(default=())

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return "ok"
        return "; ".join(v.message for v in self.violations)


class InvalidDivisionError(ValueError):
    def __init__(self, report: ValidationReport):
        self.report = report
        super().__init__(f"invalid division: {report}")


def _validate_connected(d: ConnectedDivision) -> list[Violation]:
    n = d.n
    if sorted(d.assignment) != list(range(n)):
        return [Violation("shape", f"assignment {d.assignment} is not a permutation of 0..{n - 1}")]
    cuts = d.cuts
    if d.geometry is Geometry.CAKE:
        if len(cuts) != n - 1:
            return [Violation("shape", f"a cake division of {n} players needs {n - 1} cuts, got {len(cuts)}")]
        bounds = (ZERO, *cuts, ONE)
        for p, (a, b) in enumerate(zip(bounds, bounds[1:])):
            if b < a:
                return [Violation("shape", f"cuts are not sorted at piece {p}: {a} > {b}")]
        return []
    if len(cuts) != n:
        return [Violation("shape", f"a pie division of {n} players needs {n} cuts, got {len(cuts)}")]
    if any(not (ZERO <= c < ONE) for c in cuts):
        return [Violation("shape", "pie cuts must lie in [0, 1)")]
    if n == 1:
        return []
    total = sum(((cuts[(p + 1) % n] - cuts[p]) % 1 for p in range(n)), ZERO)
    if total != ONE:
        return [Violation("shape", f"pie cuts do not go around the circle exactly once (total arc {total})")]
    return []


def _validate_general(d: GeneralDivision) -> list[Violation]:
    segments = []
    for player, share in enumerate(d.shares):
        for interval in share:
            if not isinstance(interval, Interval):
                return [Violation("shape", f"player {player} has a non-interval share element {interval!r}")]
            if interval.geometry is not d.geometry:
                return [Violation("geometry", f"player {player} has a {interval.geometry.value} interval "
                                              f"in a {d.geometry.value} division")]
            segments.extend((a, b, player) for a, b in interval.segments())
    segments.sort()
    for (a0, b0, p0), (a1, b1, p1) in zip(segments, segments[1:]):
        if a1 < b0:
            region = (a1, min(b0, b1))
            return [Violation("overlap", f"players {p0} and {p1} overlap on [{region[0]}, {region[1]}]",
                              players=(p0, p1), region=region)]
    covered = sum((b - a for a, b, _ in segments), ZERO)
    if covered != ONE:
        return [Violation("coverage", f"shares cover length {covered}, uncovered length {ONE - covered}",
                          uncovered=ONE - covered)]
    return []


def validate(d: Division) -> ValidationReport:
    """Check the partition invariants and report the first violation found."""
    if isinstance(d, ConnectedDivision):
        violations = _validate_connected(d)
        if not violations:
            violations = _validate_general(to_general(d))
    elif isinstance(d, GeneralDivision):
        violations = _validate_general(d)
    else:
        violations = [Violation("shape", f"not a division: {type(d).__name__}")]
    return ValidationReport(tuple(violations))


def _shares(d: Division) -> list:
    return d.shares() if isinstance(d, ConnectedDivision) else [list(s) for s in d.shares]


def sharing_matrix(d: Division, ms: Sequence[PiecewiseConstantMeasure]) -> SharingMatrix:
    """Exact matrix of ``mu_i(X_j)``, column j being player j's share."""
    report = validate(d)
    if not report.ok:
        raise InvalidDivisionError(report)
    if len(ms) != d.n:
        raise ValueError(f"{len(ms)} measures for a division of {d.n} players")
    shares = _shares(d)
    return SharingMatrix(tuple(tuple(measure_of(m, share) for share in shares) for m in ms))


def pie_rotate(d: ConnectedDivision, t) -> ConnectedDivision:
    """Shift every cut of a pie division by ``t`` (mod 1)."""
    if d.geometry is not Geometry.PIE:
        raise ValueError("only pie divisions can be rotated")
    t = as_fraction(t)
    return ConnectedDivision(Geometry.PIE, tuple((c + t) % 1 for c in d.cuts), d.assignment)


def to_general(d: ConnectedDivision) -> GeneralDivision:
    shares = [[p for p in share if p.length > 0] for share in d.shares()]
    return GeneralDivision(d.geometry, shares)


def to_connected(g: GeneralDivision) -> ConnectedDivision:
    """Inverse of :func:`to_general` for divisions with at most one piece each.

    Players with an empty share get a zero-length piece at the end (cake) or
    right after the last arc (pie).
    """
    pieces = []
    empty = []
    for player, share in enumerate(g.shares):
        share = [p for p in share if p.length > 0]
        if len(share) > 1:
            raise ValueError(f"player {player} holds {len(share)} pieces; not a connected division")
        if share:
            pieces.append((share[0], player))
        else:
            empty.append(player)

    if g.geometry is Geometry.CAKE:
        pieces.sort(key=lambda item: item[0].start)
        cuts = [p.end for p, _ in pieces]
        assignment = [player for _, player in pieces] + empty
        cuts = (cuts + [ONE] * len(empty))[:-1] if cuts else [ONE] * (len(empty) - 1)
        return ConnectedDivision(Geometry.CAKE, cuts, assignment)

    if len(pieces) == 1 and not empty:
        return ConnectedDivision(Geometry.PIE, (ZERO,), (pieces[0][1],))
    pieces.sort(key=lambda item: item[0].start)
    cuts = [p.start for p, _ in pieces]
    assignment = [player for _, player in pieces]
    if empty:
        last_end = pieces[-1][0].end % 1 if pieces else ZERO
        cuts += [last_end] * len(empty)
        assignment += empty
    return ConnectedDivision(Geometry.PIE, cuts, assignment)


def division_to_json(d: Division) -> dict:
    if isinstance(d, ConnectedDivision):
        return {
            "type": "connected",
            "geometry": d.geometry.value,
            "cuts": [str(c) for c in d.cuts],
            "assignment": list(d.assignment),
        }
    return {
        "type": "general",
        "geometry": d.geometry.value,
        "shares": [[{"start": str(p.start), "end": str(p.end)} for p in share] for share in d.shares],
    }


def division_from_json(obj: dict, geometry: Optional[Geometry] = None) -> Division:
    """Parse division JSON; a document wrapping it under ``"division"`` is accepted too."""
    if "division" in obj and isinstance(obj["division"], dict):
        obj = obj["division"]
    geometry = Geometry(obj.get("geometry", geometry or Geometry.CAKE))
    kind = obj.get("type", "general" if "shares" in obj else "connected")
    if kind == "connected":
        return ConnectedDivision(geometry, [as_fraction(c) for c in obj["cuts"]],
                                 [int(a) for a in obj["assignment"]])
    if kind == "general":
        shares = [[Interval(as_fraction(p["start"]), as_fraction(p["end"]), geometry) for p in share]
                  for share in obj["shares"]]
        return GeneralDivision(geometry, shares)
    raise ValueError(f"unknown division type {kind!r}")
