"""
Random walks and electrical networks
====================================

A walk moves from x to y with probability c_xy / mu_x.  Hitting times,
effective resistance and commute times are tied together exactly.
"""

# %%
import numpy as np

from graphlab import (WeightedGraph, commute_time, effective_resistance, hitting_times,
                      simulate_walks, verify_tetali)

path = WeightedGraph.from_edges(5, [(k, k + 1) for k in range(1, 5)])
sol = hitting_times(path, 5)
print("hitting times of node 5:", sol.times)

# %%
net = effective_resistance(path, 1, 5)
print("potentials:", net.potentials, " R_15 =", net.r_eff)
print("commute time", commute_time(path, 1, 5), "= R * sum(mu) =", net.r_eff * path.degrees().sum())

# %%
# Monte Carlo: visits before the hit divided by mu_z match the potentials.
st = simulate_walks(path, 1, 5, 100_000, seed=1, workers=4)
print("simulated mean %.3f +- %.3f" % (st.hitting_mean, st.hitting_stderr))
print("visits / mu:", np.round(st.visit_mean / path.degrees(), 3))

# %%
# Sum over directed edges of E^x(tau_y) c_xy divided by the total is n - 1.
rng = np.random.default_rng(0)
g = WeightedGraph(6, [1, 2, 3, 4, 5, 1, 2], [2, 3, 4, 5, 6, 4, 6], rng.uniform(0.1, 10, 7))
rep = verify_tetali(g)
print("Tetali:", rep.lhs, "vs", rep.rhs)
