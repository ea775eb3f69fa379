# %% [markdown]
# # Reading fairness off a sharing matrix
#
# Entry (i, j) of a sharing matrix is what player i thinks player j's share
# is worth.  Every fairness notion in kprop is a predicate on this matrix,
# decided with exact rationals.

# %%
from fractions import Fraction as F

from kprop.fairness import fairness_report, is_k_proportional, k_proportional_witness
from kprop.fixtures import EXAMPLE_MATRIX

M = [[F(x) for x in row] for row in EXAMPLE_MATRIX]
for row in M:
    print(" ".join(f"{str(x):>4}" for x in row))

# %% [markdown]
# Player 0 and player 3 hold the same measure.  Player 0 values its own share
# at 1/3 and player 3's at 2/3: the division is proportional but player 0
# envies player 3.  k-proportionality sits in between.

# %%
for k in (2, 3, 4):
    print(k, bool(is_k_proportional(M, k)))

w = k_proportional_witness(M, 2)
print(f"worst pair: player {w.player}, subset {w.subset}, slack {w.slack}")

# %% [markdown]
# The full report also lists the strong (strict) variants and the
# complement-bounded families.

# %%
print(fairness_report(M).render())
