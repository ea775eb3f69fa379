# %% [markdown]
# # Strong k-proportional divisions
#
# A strong k-proportional division exists exactly when no k players share a
# measure.  The construction perturbs the exact division E (everyone values
# every share at 1/n) along a proper matrix Q and realizes E + eps Q with an
# exact LP over the common refinement cells.

# %%
from kprop.divisions import sharing_matrix
from kprop.fairness import is_strong_k_proportional
from kprop.fixtures import six_player_scenario
from kprop.strongkprop import equality_classes, proper_matrix, strong_k_division, strong_k_exists

scenario = six_player_scenario()
ms = scenario.measures
print("classes:", equality_classes(ms).classes)
print("k=2:", strong_k_exists(ms, 2), " k=3:", strong_k_exists(ms, 3))

# %%
Q = proper_matrix(ms)
for row in Q.entries:
    print(" ".join(f"{str(x):>6}" for x in row))

# %%
result = strong_k_division(ms, 3)
M = sharing_matrix(result.division, ms)
print("eps =", result.epsilon)
print(M)
print("strong 3-proportional:", bool(is_strong_k_proportional(M, 3)))
for name, share in zip(scenario.names, result.division.shares):
    print(name, " ".join(str(p) for p in share))
