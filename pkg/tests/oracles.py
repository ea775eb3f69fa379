"""Independent brute-force oracles and random generators shared by the tests.

Nothing here calls the fast paths under test: fairness notions are decided by
enumerating every subset, and random objects are built from first principles.
"""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from kprop.divisions import ConnectedDivision
from kprop.measures import Geometry, PiecewiseConstantMeasure

ZERO, ONE = Fraction(0), Fraction(1)


# ---------------------------------------------------------------- fairness

def kprop_subset_form(M, k, strict=False):
    """For every i and every k-subset J containing i: M_ii >= sum_J M_ij / k."""
    n = len(M)
    for i in range(n):
        rest = [j for j in range(n) if j != i]
        for others in combinations(rest, k - 1):
            lhs, rhs = M[i][i], (M[i][i] + sum(M[i][j] for j in others)) / k
            if lhs < rhs or (strict and lhs == rhs):
                return False
    return True


def kprop_jprime_form(M, k, strict=False):
    """For every i and every (k-1)-subset J' avoiding i: M_ii >= sum_J' M_ij / (k-1)."""
    n = len(M)
    for i in range(n):
        rest = [j for j in range(n) if j != i]
        for others in combinations(rest, k - 1):
            lhs, rhs = M[i][i], sum(M[i][j] for j in others) / (k - 1)
            if lhs < rhs or (strict and lhs == rhs):
                return False
    return True


def min_slack_subset(M, k):
    n = len(M)
    return min(M[i][i] - (M[i][i] + sum(M[i][j] for j in others)) / k
               for i in range(n)
               for others in combinations([j for j in range(n) if j != i], k - 1))


def proportional(M):
    n = len(M)
    return all(M[i][i] >= Fraction(1, n) for i in range(n))


def envy_free(M):
    n = len(M)
    return all(M[i][i] >= M[i][j] for i in range(n) for j in range(n))


# ---------------------------------------------------------------- generators

def random_matrix(rng: random.Random, n: int, den: int = 12):
    """Rows are random compositions of den into n nonnegative parts."""
    rows = []
    for _ in range(n):
        marks = sorted(rng.randint(0, den) for _ in range(n - 1))
        parts = [b - a for a, b in zip([0] + marks, marks + [den])]
        rows.append([Fraction(p, den) for p in parts])
    return rows


def random_measure(rng: random.Random, cells: int = 5, geometry=Geometry.CAKE, den: int = 12,
                   max_value: int = 4):
    m = rng.randint(1, cells)
    inner = sorted(rng.sample(range(1, den), m - 1))
    points = [ZERO] + [Fraction(p, den) for p in inner] + [ONE]
    weights = [rng.randint(0, max_value) for _ in range(m)]
    if not any(weights):
        weights[rng.randrange(m)] = 1
    total = sum(w * (b - a) for w, a, b in zip(weights, points, points[1:]))
    return PiecewiseConstantMeasure(geometry, points, [Fraction(w) / total for w in weights])


def random_measures(rng, n, cells=5, geometry=Geometry.CAKE, repeat_prob=0.0):
    ms = []
    for _ in range(n):
        if ms and rng.random() < repeat_prob:
            ms.append(rng.choice(ms))
        else:
            ms.append(random_measure(rng, cells, geometry))
    return ms


def random_connected(rng: random.Random, n: int, geometry=Geometry.CAKE, den: int = 24):
    assignment = list(range(n))
    rng.shuffle(assignment)
    if geometry is Geometry.CAKE:
        cuts = sorted(Fraction(rng.randint(0, den), den) for _ in range(n - 1))
    else:
        cuts = sorted(Fraction(rng.randrange(den), den) for _ in range(n))
        if n > 1 and cuts[0] == cuts[-1]:
            # all-equal cuts would leave every arc empty
            cuts[-1] = (cuts[-1] + Fraction(1, den)) % 1
            cuts.sort()
    return ConnectedDivision(geometry, cuts, assignment)
