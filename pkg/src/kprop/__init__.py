"""k-proportional fair division of a cake [0, 1] or a pie S^1.

k-proportionality interpolates between proportional (k = n) and envy-free
(k = 2) division.  The package decides every fairness notion exactly on
sharing matrices, runs classical protocols with query accounting, certifies
two counterexample families for connected divisions by grid search, and
builds strong k-proportional divisions from proper matrices.
"""
from .measures import (
    Geometry,
    Interval,
    PiecewiseConstantMeasure,
    common_refinement,
    from_pieces,
    gram,
    measure_of,
    measures_equal,
    uniform,
)
from .divisions import ConnectedDivision, GeneralDivision, SharingMatrix, sharing_matrix, validate
from .fairness import (
    fairness_report,
    is_envy_free,
    is_equitable,
    is_exact,
    is_k_proportional,
    is_proportional,
    is_strong_k_proportional,
    pareto_dominates,
)

__version__ = "0.1.0"
