"""Built-in scenarios: the pie and cake counterexamples, the six-player
strong 3-proportional instance and a realization of the 4x4 example matrix."""
from __future__ import annotations

from fractions import Fraction

from .divisions import ConnectedDivision
from .impossibility import cake_counterexample, dominating_division, pie_counterexample
from .measures import Geometry, from_pieces, uniform
from .scenario import Scenario
from .strongkprop import exact_division, realize_sharing_matrix

__all__ = ["EXAMPLE_MATRIX", "pie_scenario", "cake_scenario", "six_player_scenario",
           "example_matrix_scenario", "all_fixtures"]

_T = Fraction(1, 3)
EXAMPLE_MATRIX = (
    (_T, 0, 0, 2 * _T),
    (0, _T, 0, 2 * _T),
    (0, 0, _T, 2 * _T),
    (_T, 0, 0, 2 * _T),
)


def pie_scenario(n: int = 5) -> Scenario:
    ms = pie_counterexample(n)
    names = ["f1", "f2"] + [f"u{i}" for i in range(3, n + 1)]
    return Scenario(Geometry.PIE, names, ms, {"exact": exact_division(ms)})


def cake_scenario(n: int = 5) -> Scenario:
    ms = cake_counterexample(n)
    names = ["spiky"] + [f"u{i}" for i in range(2, n + 1)]
    equal = ConnectedDivision(Geometry.CAKE, [Fraction(i, n) for i in range(1, n)], range(n))
    return Scenario(Geometry.CAKE, names, ms, {"dominating": dominating_division(n), "equal": equal})


def six_player_scenario() -> Scenario:
    """Three distinct measures, each held by two players (players i and i + 3)."""
    a = uniform()
    b = from_pieces([(0, Fraction(1, 2), 2)])
    c = from_pieces([(Fraction(2, 3), 1, 3)])
    ms = [a, b, c, a, b, c]
    return Scenario(Geometry.CAKE, ["a1", "b1", "c1", "a2", "b2", "c2"], ms)


def example_matrix_scenario() -> Scenario:
    """Players 0 and 3 share a measure; the stored division has sharing matrix EXAMPLE_MATRIX."""
    p = from_pieces([(Fraction(2, 3), 1, 3)])
    q = from_pieces([(0, Fraction(1, 3), 3)])
    r = from_pieces([(Fraction(1, 3), Fraction(2, 3), 3)])
    ms = [p, q, r, p]
    division = realize_sharing_matrix(EXAMPLE_MATRIX, ms)
    return Scenario(Geometry.CAKE, ["p1", "q", "r", "p2"], ms, {"example-matrix": division})


def all_fixtures() -> dict:
    return {
        "pie5": pie_scenario(5),
        "cake5": cake_scenario(5),
        "six_player": six_player_scenario(),
        "example_matrix": example_matrix_scenario(),
    }
