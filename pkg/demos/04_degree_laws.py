"""
Degree laws of preferential attachment
======================================
"""

# %%
import numpy as np

from graphlab import (PaParams, fit_power_law, generate_pa, histogram, pa_c,
                      pa_degree_variance, pa_expected_degree, pa_limit_pmf, pa_tau)

m, delta = 2, 0.0
print("tau =", pa_tau(m, delta), " c =", round(pa_c(m, delta), 4))
k = np.arange(m, m + 6)
print("limit pmf p_k, k = 2..7:", np.round(pa_limit_pmf(m, delta, k), 4))

# %%
# The expected degree of node i decays like (n/i)^(m/(2m+delta)).
n = 200
for i in (1, 5, 20, 100, 200):
    e = pa_expected_degree(m, delta, i, n)
    sd = np.sqrt(pa_degree_variance(m, delta, i, n))
    print(f"node {i:3d}: E D = {e:7.3f}, sd = {sd:6.3f}")

# %%
# Compare against 300 simulated graphs.
d1 = np.array([generate_pa(PaParams(n, m, delta, seed=s)).degrees[0] for s in range(300)])
print("node 1 simulated: mean %.2f, sd %.2f" % (d1.mean(), d1.std(ddof=1)))

# %%
# Tail exponent from one graph.  The estimate depends on where the tail
# starts; at k_min = m the bulk of the law pulls it well below 3.
h = histogram(generate_pa(PaParams(1000, m, delta, seed=7)).graph)
for kmin in (2, 5, 10):
    fit = fit_power_law(h, kmin)
    print(f"k_min = {kmin:2d}: tau_hat = {fit.tau:.3f} from {fit.n_tail} nodes")
