import math
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kprop.algorithms import (
    CutUnreachableError,
    QueryLedger,
    RWOracle,
    cut_and_choose,
    equitable_connected,
    even_paz,
    even_paz_cut_count,
    last_diminisher,
    oracles_for,
)
from kprop.divisions import sharing_matrix, validate
from kprop.fairness import is_envy_free, is_equitable, is_proportional
from kprop.impossibility import pie_counterexample
from kprop.measures import from_pieces, open_pie, uniform

from oracles import random_measures

seeds = st.integers(min_value=0, max_value=10**9)


def test_oracle_counts_and_leftmost_cut():
    ledger = QueryLedger()
    m = from_pieces([(0, F(1, 4), 2), (F(1, 2), 1, 1)])
    o = RWOracle(m, ledger)
    assert o.eval(0, F(1, 4)) == F(1, 2)
    # the density is zero on (1/4, 1/2), so the leftmost point worth 1/2 is 1/4
    assert o.cut(0, F(1, 2)) == F(1, 4)
    assert (ledger.eval_count, ledger.cut_count) == (1, 1)
    with pytest.raises(CutUnreachableError):
        o.cut(F(1, 2), F(3, 4))


def test_cut_and_choose_two_players():
    ms = [uniform(), from_pieces([(0, F(1, 2), 2)])]
    d = cut_and_choose(oracles_for(ms))
    assert is_envy_free(sharing_matrix(d, ms))


@settings(max_examples=100, deadline=None)
@given(seeds, st.integers(1, 7))
def test_protocols_are_proportional(seed, n):
    rng = random.Random(seed)
    ms = random_measures(rng, n, cells=4)
    for protocol in (last_diminisher, even_paz):
        d = protocol(oracles_for(ms))
        assert validate(d).ok
        assert is_proportional(sharing_matrix(d, ms))


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_cut_and_choose_envy_free(seed):
    rng = random.Random(seed)
    ms = random_measures(rng, 2, cells=4)
    assert is_envy_free(sharing_matrix(cut_and_choose(oracles_for(ms)), ms))


def test_even_paz_cut_counts():
    for n in range(2, 65):
        ledger = QueryLedger()
        even_paz(oracles_for([uniform()] * n, ledger))
        assert ledger.cut_count == even_paz_cut_count(n)
        assert ledger.cut_count <= 2 * n * math.log2(n)


def test_even_paz_beats_last_diminisher():
    for n in (16, 24, 32):
        ep, ld = QueryLedger(), QueryLedger()
        even_paz(oracles_for([uniform()] * n, ep))
        last_diminisher(oracles_for([uniform()] * n, ld))
        assert ep.cut_count < ld.cut_count


def test_equitable_on_opened_pie():
    ms = [open_pie(m) for m in pie_counterexample(5)]
    result = equitable_connected(ms)
    M = sharing_matrix(result.division, ms)
    assert result.value == F(3, 14)
    assert result.value >= F(1, 5)
    assert is_equitable(M) and is_proportional(M)


def test_equitable_fixed_order():
    ms = [uniform(), from_pieces([(0, F(1, 2), 2)])]
    result = equitable_connected(ms, order=[1, 0])
    assert result.value == F(2, 3)
    assert is_equitable(sharing_matrix(result.division, ms))


def test_equitable_cut_inside_zero_density_stretch():
    # player 0 values nothing on [1/4, 1/3]; the leftmost 3/5-cut of player 0
    # leaves player 1 too much and any larger value leaves too little, so the
    # cut has to slide inside the flat stretch
    ms = [from_pieces([(0, F(1, 4), F(12, 5)), (F(1, 3), 1, F(3, 5))]),
          from_pieces([(0, F(3, 4), F(16, 13)), (F(3, 4), 1, F(4, 13))])]
    result = equitable_connected(ms, order=[0, 1])
    assert result.value == F(3, 5)
    assert result.division.cuts == (F(13, 40),)
    M = sharing_matrix(result.division, ms)
    assert M[0][0] == M[1][1] == F(3, 5)


def test_rightmost_cut():
    m = from_pieces([(0, F(1, 4), 2), (F(1, 2), 1, 1)])
    assert RWOracle(m).cut_right(0, F(1, 2)) == F(1, 2)


@settings(max_examples=25, deadline=None)
@given(seeds, st.integers(2, 4))
def test_equitable_random(seed, n):
    rng = random.Random(seed)
    ms = random_measures(rng, n, cells=3)
    result = equitable_connected(ms)
    M = sharing_matrix(result.division, ms)
    assert is_equitable(M) and is_proportional(M)
    assert all(M[i][i] == result.value for i in range(n))
