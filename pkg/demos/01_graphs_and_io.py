"""
Weighted graphs, degrees and edge-list files
============================================

Nodes are numbered 1..n.  Every edge carries a conductance c > 0 and the
degree of a node is the sum of the conductances touching it.
"""

# %%
import io

import numpy as np

from graphlab import WeightedGraph, components, degree, read_graph, write_graph

g = WeightedGraph.from_edges(5, [(1, 2, 1.0), (2, 3, 2.5), (4, 5, 0.5)])
print(g)
print("degrees:", g.degrees())
print("degree of node 2:", degree(g, 2))

# %%
# Two pieces, listed by their smallest node.
print("components:", components(g))

# %%
# A self-loop counts twice towards the degree, like in a multigraph.
loop = WeightedGraph.from_edges(2, [(1, 1, 1.0), (1, 2, 1.0)], allows_self_loops=True)
print("with a loop:", loop.degrees())

# %%
# Files hold the node count on the first line, then "x y [c]" rows.
buf = io.StringIO()
write_graph(g, buf)
print(buf.getvalue())
buf.seek(0)
h = read_graph(buf)
assert h.same_edges(g)
print("round trip ok; total conductance", np.round(h.total_weight(), 3))
