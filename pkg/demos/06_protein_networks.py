"""
Protein mutation networks
=========================

Two sequences are joined when they have the same length and differ at
exactly one position.  Could such a network have come from a PA model?
"""

# %%
from graphlab import build_network, pa_compatibility_report, parse_sequences

fasta = """
>wt
MKTAYIAK
>v1
MKTAYIAR
>v2
MKSAYIAK
>v3
MKSAYIAR
>v4
MKTAYLAK
>other
GGGGGGGG
"""
seqs = parse_sequences(fasta)
net = build_network(seqs)
for x, y, _ in net.graph.edges():
    print(net.labels[x], "--", net.labels[y])

# %%
# PA graphs are connected and have an even mean degree 2m.
rep = pa_compatibility_report(net)
for key in ("n", "mean_degree", "is_even_mean", "connected", "component_sizes"):
    print(f"{key:16s} {rep[key]}")
