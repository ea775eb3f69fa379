"""Scenario files: players' densities plus optional named divisions.

Format::

    {"geometry": "cake" | "pie",
     "players": [{"name": "alice",
                  "density": [{"start": "0", "end": "1/2", "value": "2"}, ...]}, ...],
     "divisions": {"name": <division json>, ...}}

Rationals are ``"p/q"`` or integer strings; gaps in a density have value 0.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .divisions import division_from_json, division_to_json, validate
from .measures import (
    Geometry,
    NormalizationError,
    PiecewiseConstantMeasure,
    as_fraction,
    from_pieces,
)

__all__ = ["Scenario", "ScenarioError", "load_scenario", "parse_scenario", "scenario_to_json",
           "load_division", "density_to_json"]


class ScenarioError(ValueError):
    """Bad scenario or division input; ``where`` locates the offending field."""

    def __init__(self, where: str, message: str):
        self.where = where
        super().__init__(f"{where}: {message}")


@dataclass
class Scenario:
    geometry: Geometry
    names: list
    measures: list
    divisions: dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return len(self.measures)


def _rational(value, where):
    try:
        return as_fraction(value)
    except (ValueError, TypeError) as exc:
        raise ScenarioError(where, str(exc)) from None


def density_to_json(m: PiecewiseConstantMeasure) -> list:
    return [{"start": str(a), "end": str(b), "value": str(v)} for a, b, v in m.cells() if v != 0]


def parse_scenario(obj: dict, source: str = "scenario") -> Scenario:
    if not isinstance(obj, dict):
        raise ScenarioError(source, "top level must be an object")
    try:
        geometry = Geometry(obj.get("geometry", "cake"))
    except ValueError:
        raise ScenarioError(f"{source}.geometry", f"unknown geometry {obj.get('geometry')!r}") from None
    players = obj.get("players")
    if not isinstance(players, list) or not players:
        raise ScenarioError(f"{source}.players", "need a non-empty list of players")

    names, measures = [], []
    for i, player in enumerate(players):
        where = f"{source}.players[{i}]"
        names.append(str(player.get("name", f"player{i}")))
        pieces = []
        for c, cell in enumerate(player.get("density", [])):
            cw = f"{where}.density[{c}]"
            try:
                pieces.append((_rational(cell["start"], cw + ".start"),
                               _rational(cell["end"], cw + ".end"),
                               _rational(cell["value"], cw + ".value")))
            except KeyError as exc:
                raise ScenarioError(cw, f"missing field {exc}") from None
        try:
            measures.append(from_pieces(pieces, geometry))
        except NormalizationError as exc:
            raise ScenarioError(where, f"density of {names[-1]!r} integrates to {exc.total}, "
                                       f"deficit {exc.deficit}") from None
        except ValueError as exc:
            raise ScenarioError(where, str(exc)) from None

    divisions = {}
    for name, raw in (obj.get("divisions") or {}).items():
        where = f"{source}.divisions[{name!r}]"
        try:
            d = division_from_json(raw, geometry)
        except (KeyError, ValueError, TypeError) as exc:
            raise ScenarioError(where, f"cannot parse division: {exc}") from None
        report = validate(d)
        if not report.ok:
            raise ScenarioError(where, str(report))
        divisions[name] = d
    return Scenario(geometry, names, measures, divisions)


def _read_json(path) -> dict:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ScenarioError(str(path), exc.strerror or str(exc)) from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"{path}:{exc.lineno}:{exc.colno}", exc.msg) from None


def load_scenario(path) -> Scenario:
    return parse_scenario(_read_json(path), str(path))


def load_division(path, geometry: Optional[Geometry] = None):
    obj = _read_json(path)
    try:
        d = division_from_json(obj, geometry)
    except (KeyError, ValueError, TypeError) as exc:
        raise ScenarioError(str(path), f"cannot parse division: {exc}") from None
    return d


def scenario_to_json(s: Scenario) -> dict:
    out = {
        "geometry": s.geometry.value,
        "players": [{"name": name, "density": density_to_json(m)} for name, m in zip(s.names, s.measures)],
    }
    if s.divisions:
        out["divisions"] = {name: division_to_json(d) for name, d in s.divisions.items()}
    return out
