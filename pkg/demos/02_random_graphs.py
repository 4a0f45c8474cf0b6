"""
Erdos-Renyi and preferential-attachment graphs
==============================================
"""

# %%
import numpy as np

from graphlab import ErParams, PaParams, generate_er, generate_pa, histogram, is_connected

er = generate_er(ErParams(1000, 0.01, seed=1))
print(er)
print("mean degree %.3f (expected (n-1)p = 9.99)" % er.degrees().mean())

# %%
# PA(m, delta): node t+1 sends m edges, each to node i with probability
# (D_i + delta) / ((2m + delta) t).  Node 1 starts with m self-loops, so
# the degree total is exactly 2mn.
tr = generate_pa(PaParams(1000, 2, 0.0, seed=1), track=(1, 10, 100))
print(tr.graph)
print("degree sum:", tr.graph.degrees().sum(), "= 2mn =", 2 * 2 * 1000)
print("connected after dropping the loops:", is_connected(tr.stripped()))

# %%
# Early nodes keep growing.
for i, hist in tr.degree_history.items():
    print(f"node {i:4d}: degree at birth {hist[0]}, at t=1000 {hist[-1]}")

# %%
h = histogram(tr.graph)
print("largest degrees:", np.sort(tr.degrees)[-5:])
print("fraction with degree m:", round(h.pmf()[2], 3))
