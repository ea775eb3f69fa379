# %% [markdown]
# # Grid certificates for connected divisions
#
# On the pie with five players, no connected division is both
# (n-1)-proportional and equitable.  The search scores every grid division by
# how far it is from both properties and refines the best ones; a positive
# minimum is the certificate.  A coarse grid keeps this demo fast; the
# acceptance suite runs the full resolution.

# %%
from kprop.impossibility import certify_cake_pareto, certify_pie_impossibility

cert = certify_pie_impossibility(5, grid=24, refine=2)
print(cert.summary())

# %% [markdown]
# With k = n the same search drives the score to zero: proportional and
# equitable connected pie divisions do exist.

# %%
print(certify_pie_impossibility(5, grid=24, refine=2, k=5).summary())

# %% [markdown]
# On the cake, every connected (n-1)-proportional division of the spiky
# instance gives everyone exactly 1/n and is Pareto-dominated by a fixed
# division.

# %%
print(certify_cake_pareto(5, grid=40).summary())
