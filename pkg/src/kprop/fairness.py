"""Exact fairness predicates on sharing matrices.

Every predicate returns a :class:`Verdict` carrying the worst instance of the
defining inequality, whether or not the property holds.  Slacks are exact
Fractions; a property holds when the minimal slack is ``>= 0`` (``> 0`` for
the strong variants).  Ties between equally bad instances go to the
lexicographically smallest ``(i, sorted J)``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .divisions import SharingMatrix
from .measures import ZERO

__all__ = [
    "Witness",
    "Verdict",
    "FairnessReport",
    "as_sharing_matrix",
    "is_proportional",
    "is_strong_proportional",
    "is_envy_free",
    "is_strong_envy_free",
    "is_equitable",
    "is_exact",
    "k_proportional_witness",
    "is_k_proportional",
    "is_strong_k_proportional",
    "pareto_dominates",
    "is_chb",
    "is_clb",
    "fairness_report",
    "random_sharing_matrix",
]


@dataclass(frozen=True)
class Witness:
    """Worst instance of an inequality.

    ``player`` is i, ``subset`` the index set the inequality ranges over (J
    for k-proportionality, ``(i, j)`` for envy, S for CHB/CLB) and ``slack``
    the signed margin by which the inequality holds.
    """

    player: int
    subset: tuple
    slack: Fraction

    def to_json(self):
        return {"player": self.player, "subset": list(self.subset), "slack": str(self.slack)}


@dataclass(frozen=True)
class Verdict:
    holds: bool
    witness: Optional[Witness] = None

    def __bool__(self):
        return self.holds

    def to_json(self):
        return {"holds": self.holds, "witness": self.witness.to_json() if self.witness else None}


def as_sharing_matrix(M) -> SharingMatrix:
    return M if isinstance(M, SharingMatrix) else SharingMatrix(M)


def _worst(candidates) -> Witness:
    # candidates: iterable of (slack, player, subset)
    slack, player, subset = min(candidates)
    return Witness(player, subset, slack)


def _proportional(M, strict: bool) -> Verdict:
    M = as_sharing_matrix(M)
    n = M.n
    w = _worst((M[i][i] - Fraction(1, n), i, tuple(range(n))) for i in range(n))
    return Verdict(w.slack > 0 if strict else w.slack >= 0, w)


def is_proportional(M) -> Verdict:
    return _proportional(M, strict=False)


def is_strong_proportional(M) -> Verdict:
    return _proportional(M, strict=True)


def _envy_free(M, strict: bool) -> Verdict:
    M = as_sharing_matrix(M)
    n = M.n
    if n < 2:
        return Verdict(True)
    w = _worst((M[i][i] - M[i][j], i, (i, j)) for i in range(n) for j in range(n) if j != i)
    return Verdict(w.slack > 0 if strict else w.slack >= 0, w)


def is_envy_free(M) -> Verdict:
    return _envy_free(M, strict=False)


def is_strong_envy_free(M) -> Verdict:
    return _envy_free(M, strict=True)


def is_equitable(M) -> Verdict:
    """Witness: the lowest and highest diagonal entries, slack ``min - max``."""
    M = as_sharing_matrix(M)
    diag = M.diagonal()
    lo = min(range(M.n), key=lambda i: (diag[i], i))
    hi = min(range(M.n), key=lambda i: (-diag[i], i))
    slack = diag[lo] - diag[hi]
    return Verdict(slack == 0, Witness(lo, (lo, hi), slack))


def is_exact(M) -> Verdict:
    """Witness: the entry farthest from 1/n, slack ``-|M[i][j] - 1/n|``."""
    M = as_sharing_matrix(M)
    n = M.n
    w = _worst((-abs(M[i][j] - Fraction(1, n)), i, (i, j)) for i in range(n) for j in range(n))
    return Verdict(w.slack == 0, w)


def _check_k(k: int, n: int, lo: int = 2):
    if not lo <= k <= n:
        raise ValueError(f"k must lie in [{lo}, {n}], got {k}")


def k_proportional_witness(M, k: int) -> Witness:
    """Minimal-slack pair (i, J) for ``M[i][i] >= sum_{j in J} M[i][j] / k``.

    For fixed i the worst J adds the k - 1 largest off-diagonal entries of
    row i to i itself, so no subset enumeration is needed.
    """
    M = as_sharing_matrix(M)
    n = M.n
    _check_k(k, n)
    candidates = []
    for i in range(n):
        row = M[i]
        others = sorted((j for j in range(n) if j != i), key=lambda j: (-row[j], j))[:k - 1]
        J = tuple(sorted(others + [i]))
        slack = row[i] - sum((row[j] for j in J), ZERO) / k
        candidates.append((slack, i, J))
    return _worst(candidates)


def is_k_proportional(M, k: int) -> Verdict:
    w = k_proportional_witness(M, k)
    return Verdict(w.slack >= 0, w)


def is_strong_k_proportional(M, k: int) -> Verdict:
    w = k_proportional_witness(M, k)
    return Verdict(w.slack > 0, w)


def pareto_dominates(M1, M2) -> bool:
    """Whether the division behind M1 Pareto-dominates the one behind M2."""
    d1, d2 = as_sharing_matrix(M1).diagonal(), as_sharing_matrix(M2).diagonal()
    if len(d1) != len(d2):
        raise ValueError(f"dimension mismatch: {len(d1)} vs {len(d2)} players")
    return all(a >= b for a, b in zip(d1, d2)) and any(a > b for a, b in zip(d1, d2))


def _complement_bounded(M, k: int, bound) -> Verdict:
    M = as_sharing_matrix(M)
    n = M.n
    _check_k(k, n, lo=1)
    candidates = []
    for size in range(1, k + 1):
        limit = bound(n, size)
        for S in combinations(range(n), size):
            for i in S:
                outside = sum((M[i][j] for j in range(n) if j not in S), ZERO)
                candidates.append((limit - outside, i, S))
    w = _worst(candidates)
    return Verdict(w.slack >= 0, w)


def is_chb(M, k: int) -> Verdict:
    """Complement harmonically bounded: outside mass at most (n-s)/(n-s+1)."""
    return _complement_bounded(M, k, lambda n, s: Fraction(n - s, n - s + 1))


def is_clb(M, k: int) -> Verdict:
    """Complement linearly bounded: outside mass at most (n-s)/n."""
    return _complement_bounded(M, k, lambda n, s: Fraction(n - s, n))


@dataclass
class FairnessReport:
    n: int
    verdicts: dict = field(default_factory=dict)
    k_profile: dict = field(default_factory=dict)  # k -> (k-proportional, strong)
    chb: dict = field(default_factory=dict)
    clb: dict = field(default_factory=dict)

    def to_json(self):
        return {
            "n": self.n,
            "verdicts": {name: v.to_json() for name, v in self.verdicts.items()},
            "k_profile": {str(k): {"k_proportional": a.to_json(), "strong_k_proportional": b.to_json()}
                          for k, (a, b) in self.k_profile.items()},
            "chb": {str(k): v.to_json() for k, v in self.chb.items()},
            "clb": {str(k): v.to_json() for k, v in self.clb.items()},
        }

    def render(self) -> str:
        def mark(v):
            return "yes" if v.holds else "no"

        def wit(v):
            w = v.witness
            if w is None:
                return ""
            return f"i={w.player} set={list(w.subset)} slack={w.slack}"

        rows = [(name, mark(v), wit(v)) for name, v in self.verdicts.items()]
        for k, (plain, strong) in self.k_profile.items():
            rows.append((f"{k}-proportional", mark(plain), wit(plain)))
            rows.append((f"strong {k}-proportional", mark(strong), wit(strong)))
        for k in self.chb:
            rows.append((f"CHB-{k}", mark(self.chb[k]), wit(self.chb[k])))
            rows.append((f"CLB-{k}", mark(self.clb[k]), wit(self.clb[k])))
        width = max(len(r[0]) for r in rows)
        return "\n".join(f"{name.ljust(width)}  {ok.ljust(3)}  {detail}".rstrip() for name, ok, detail in rows)


def fairness_report(M, chb_up_to: Optional[int] = None) -> FairnessReport:
    M = as_sharing_matrix(M)
    n = M.n
    report = FairnessReport(n)
    report.verdicts = {
        "proportional": is_proportional(M),
        "strong proportional": is_strong_proportional(M),
        "envy-free": is_envy_free(M),
        "strong envy-free": is_strong_envy_free(M),
        "equitable": is_equitable(M),
        "exact": is_exact(M),
    }
    for k in range(2, n + 1):
        report.k_profile[k] = (is_k_proportional(M, k), is_strong_k_proportional(M, k))
    for k in range(1, (chb_up_to or n) + 1):
        report.chb[k] = is_chb(M, k)
        report.clb[k] = is_clb(M, k)
    return report


def random_sharing_matrix(n: int, rng: random.Random, denominator: int = 60) -> SharingMatrix:
    """Random valid sharing matrix with entries on the grid ``1/denominator``.

    Each row is the spacing of ``n - 1`` sorted uniform grid points, so rows
    sum to one exactly; coarse denominators produce plenty of ties.
    """
    rows = []
    for _ in range(n):
        marks = sorted(rng.randint(0, denominator) for _ in range(n - 1))
        bounds = [0, *marks, denominator]
        rows.append(tuple(Fraction(b - a, denominator) for a, b in zip(bounds, bounds[1:])))
    return SharingMatrix(tuple(rows))
