# %% [markdown]
# # Protocols in the query model
#
# Players answer eval and cut queries; a shared ledger counts them.

# %%
import math

from kprop.algorithms import QueryLedger, equitable_connected, even_paz, last_diminisher, oracles_for
from kprop.divisions import sharing_matrix
from kprop.impossibility import pie_counterexample
from kprop.measures import open_pie, uniform

# %%
print(" n   last-diminisher  even-paz  2 n log2 n")
for n in (4, 8, 16, 32, 64):
    ld, ep = QueryLedger(), QueryLedger()
    last_diminisher(oracles_for([uniform()] * n, ld))
    even_paz(oracles_for([uniform()] * n, ep))
    print(f"{n:>2} {ld.cut_count:>17} {ep.cut_count:>9} {2 * n * math.log2(n):>11.0f}")

# %% [markdown]
# Equitable connected division: every player values its own piece equally.
# The pie instance below is opened at 0 and solved on the cake; the order
# search returns the first left-to-right order whose common value is at
# least 1/n.

# %%
cake = [open_pie(m) for m in pie_counterexample(5)]
result = equitable_connected(cake)
print("order", result.order, "common value", result.value)
print(sharing_matrix(result.division, cake))
