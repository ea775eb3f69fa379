import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kprop.divisions import (
    ConnectedDivision,
    GeneralDivision,
    InvalidDivisionError,
    SharingMatrix,
    division_from_json,
    division_to_json,
    pie_rotate,
    sharing_matrix,
    to_connected,
    to_general,
    validate,
)
from kprop.measures import Geometry, Interval, uniform

from oracles import random_connected, random_measures

seeds = st.integers(min_value=0, max_value=10**9)
PIE = Geometry.PIE


def test_connected_cake_pieces():
    d = ConnectedDivision(Geometry.CAKE, [F(1, 3), F(1, 2)], [2, 0, 1])
    assert validate(d).ok
    assert [str(p) for p in d.pieces()] == ["[0, 1/3]", "[1/3, 1/2]", "[1/2, 1]"]
    assert d.shares()[2] == [Interval(0, F(1, 3))]


def test_overlap_reported_with_players_and_region():
    d = GeneralDivision(Geometry.CAKE, [[Interval(0, F(2, 3))], [Interval(F(1, 2), 1)]])
    report = validate(d)
    assert not report.ok
    v = report.violations[0]
    assert v.kind == "overlap" and v.players == (0, 1) and v.region == (F(1, 2), F(2, 3))


def test_gap_reported_with_uncovered_measure():
    d = GeneralDivision(Geometry.CAKE, [[Interval(0, F(1, 4))], [Interval(F(1, 2), 1)]])
    v = validate(d).violations[0]
    assert v.kind == "coverage" and v.uncovered == F(1, 4)


def test_bad_shapes():
    assert not validate(ConnectedDivision(Geometry.CAKE, [F(1, 2)], [0, 0])).ok
    assert not validate(ConnectedDivision(Geometry.CAKE, [F(1, 2), F(1, 4)], [0, 1, 2])).ok
    assert not validate(ConnectedDivision(Geometry.CAKE, [F(1, 2)], [0, 1, 2])).ok
    assert not validate(ConnectedDivision(PIE, [F(1, 2), F(1, 4), F(3, 4)], [0, 1, 2])).ok


def test_sharing_matrix_rejects_invalid():
    d = GeneralDivision(Geometry.CAKE, [[Interval(0, F(1, 4))], [Interval(F(1, 2), 1)]])
    with pytest.raises(InvalidDivisionError):
        sharing_matrix(d, [uniform(), uniform()])


def test_sharing_matrix_validation():
    with pytest.raises(ValueError):
        SharingMatrix([[F(1, 2), F(1, 3)], [F(1, 2), F(1, 2)]])
    with pytest.raises(ValueError):
        SharingMatrix([[1, 0]])


def test_pie_single_player_is_whole_circle():
    d = ConnectedDivision(PIE, [F(1, 3)], [0])
    assert validate(d).ok
    assert sharing_matrix(d, [uniform(PIE)]).entries == ((1,),)


def test_pie_wrapping_piece():
    d = ConnectedDivision(PIE, [F(1, 4), F(3, 4)], [0, 1])
    assert d.pieces()[1] == Interval(F(3, 4), F(1, 4), PIE)
    assert sharing_matrix(d, [uniform(PIE)] * 2).entries == ((F(1, 2), F(1, 2)),) * 2


@settings(max_examples=60, deadline=None)
@given(seeds, st.integers(min_value=1, max_value=6), st.sampled_from([Geometry.CAKE, PIE]))
def test_rows_sum_to_one(seed, n, geometry):
    rng = random.Random(seed)
    ms = random_measures(rng, n, geometry=geometry)
    d = random_connected(rng, n, geometry)
    assert validate(d).ok
    M = sharing_matrix(d, ms)
    assert all(sum(row) == 1 for row in M)


@settings(max_examples=60, deadline=None)
@given(seeds, st.integers(min_value=1, max_value=6))
def test_piece_lengths_match_uniform_row(seed, n):
    rng = random.Random(seed)
    d = random_connected(rng, n)
    lengths = [sum(p.length for p in share) for share in d.shares()]
    assert sum(lengths) == 1
    assert list(sharing_matrix(d, [uniform()] * n)[0]) == lengths


@settings(max_examples=60, deadline=None)
@given(seeds, st.integers(min_value=1, max_value=6), st.sampled_from([Geometry.CAKE, PIE]))
def test_general_round_trip_preserves_matrix(seed, n, geometry):
    rng = random.Random(seed)
    ms = random_measures(rng, n, geometry=geometry)
    d = random_connected(rng, n, geometry)
    g = to_general(d)
    back = to_connected(g)
    assert validate(back).ok
    assert sharing_matrix(g, ms) == sharing_matrix(d, ms) == sharing_matrix(back, ms)


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(min_value=2, max_value=5))
def test_rotation_keeps_lengths(seed, n):
    rng = random.Random(seed)
    d = random_connected(rng, n, PIE)
    r = pie_rotate(d, F(rng.randrange(24), 24))
    u = [uniform(PIE)] * n
    assert sharing_matrix(r, u) == sharing_matrix(d, u)


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(min_value=1, max_value=5), st.sampled_from([Geometry.CAKE, PIE]))
def test_json_round_trip(seed, n, geometry):
    rng = random.Random(seed)
    d = random_connected(rng, n, geometry)
    assert division_from_json(division_to_json(d)) == d
    g = to_general(d)
    assert division_from_json(division_to_json(g)) == g
