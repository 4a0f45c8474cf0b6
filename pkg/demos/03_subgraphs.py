"""
Random subgraphs of an Erdos-Renyi graph
========================================

Deleting edges with probability 1 - q turns ER(n, p) into ER(n, pq).
Keeping M random nodes gives ER(M, p).  Both are checked below.
"""

# %%
import numpy as np

from graphlab import (ErParams, binomial_deviation, binomial_pmf, chisquare_gof, generate_er,
                      histogram, sample_edges, sample_nodes_bernoulli, sample_nodes_uniform)

g = generate_er(ErParams(1000, 0.01, seed=3))

# %%
edge_sub = sample_edges(g, 0.5, seed=4)
node_sub, kept = sample_nodes_uniform(g, 500, seed=4)
bern_sub, kept_b = sample_nodes_bernoulli(g, 0.5, seed=4)
print("edge sampling: mean degree %.3f (4.995 expected)" % edge_sub.degrees().mean())
print("500 uniform nodes: mean degree %.3f (4.99 expected)" % node_sub.degrees().mean())
print("Bernoulli nodes kept:", len(kept_b))

# %%
h = histogram(edge_sub)
k = np.arange(h.counts.size)
stat, dof, pval = chisquare_gof(h.counts, binomial_pmf(999, 0.005, k))
print(f"edge sample vs Bin(999, 0.005): chi2 {stat:.1f} on {dof} df, p = {pval:.3f}")

# %%
# How far apart are Bin(m-1, p) and Bin(n-1, pm/n)?  Small once m is ~100.
m = np.array([10, 50, 94, 200, 500])
for mm, d in zip(m, binomial_deviation(1000, 0.01, m)):
    print(f"m = {mm:4d}: max pmf gap {d:.5f}")
