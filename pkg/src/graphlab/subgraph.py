"""Random subgraphs by edge deletion and node deletion."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._random import make_rng
from .graph import WeightedGraph, components

__all__ = [
    "SamplerSpec",
    "sample_edges",
    "sample_nodes_uniform",
    "sample_nodes_bernoulli",
    "apply_sampler",
    "pa_diagnostics",
]

KINDS = ("edge-bernoulli", "node-uniform", "node-bernoulli")


@dataclass(frozen=True)
class SamplerSpec:
    kind: str
    q: float | None = None
    m_keep: int | None = None
    seed: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown sampler kind {self.kind!r}; expected one of {KINDS}")
        if self.kind == "node-uniform":
            if self.m_keep is None or self.q is not None:
                raise ValueError("node-uniform takes m_keep and no q")
            if self.m_keep < 0:
                raise ValueError("m_keep must be non-negative")
        else:
            if self.q is None or self.m_keep is not None:
                raise ValueError(f"{self.kind} takes q and no m_keep")
            _check_q(self.q)


def _check_q(q):
    if not 0.0 <= q <= 1.0:
        raise ValueError(f"q must lie in [0, 1], got {q}")


def sample_edges(g: WeightedGraph, q: float, seed=None) -> WeightedGraph:
    """Keep every edge independently with probability ``q``; all nodes stay.

    On a multiplicity graph each parallel copy is an edge of its own, so a
    record of multiplicity ``w`` keeps Binomial(w, q) copies.  Kept edges of
    a weighted graph keep their conductance.
    """
    _check_q(q)
    rng = make_rng(seed)
    if g.multiplicity:
        copies = rng.binomial(np.rint(g.weight).astype(np.int64), q)
        keep = copies > 0
        weight = copies[keep].astype(np.float64)
    else:
        keep = rng.random(g.num_edges) < q
        weight = g.weight[keep]
    return WeightedGraph(g.n, g.src[keep], g.dst[keep], weight,
                         allows_self_loops=g.allows_self_loops, multiplicity=g.multiplicity)


def sample_nodes_uniform(g: WeightedGraph, m_keep: int, seed=None):
    """Keep a uniformly random ``m_keep``-subset of the nodes.

    Every subset of that size is equally likely (partial Fisher-Yates
    shuffle).  Returns the induced subgraph relabeled ``1..m_keep`` and the
    list ``kept`` with ``kept[new - 1] == old``, sorted ascending.
    """
    m_keep = int(m_keep)
    if not 0 <= m_keep <= g.n:
        raise ValueError(f"m_keep must lie in [0, {g.n}], got {m_keep}")
    rng = make_rng(seed)
    perm = np.arange(1, g.n + 1, dtype=np.int64)
    for i in range(m_keep):
        j = int(rng.integers(i, g.n))
        perm[i], perm[j] = perm[j], perm[i]
    kept = np.sort(perm[:m_keep])
    return g.relabel(kept), kept.tolist()


def sample_nodes_bernoulli(g: WeightedGraph, q: float, seed=None):
    """Keep every node independently with probability ``q``.

    Same return convention as :func:`sample_nodes_uniform`.
    """
    _check_q(q)
    rng = make_rng(seed)
    kept = np.flatnonzero(rng.random(g.n) < q) + 1
    return g.relabel(kept), kept.tolist()


def apply_sampler(g: WeightedGraph, spec: SamplerSpec):
    """Dispatch on ``spec.kind``; returns ``(subgraph, kept)``.

    For the edge sampler ``kept`` is every node id.
    """
    if spec.kind == "edge-bernoulli":
        return sample_edges(g, spec.q, spec.seed), list(range(1, g.n + 1))
    if spec.kind == "node-uniform":
        return sample_nodes_uniform(g, spec.m_keep, spec.seed)
    return sample_nodes_bernoulli(g, spec.q, spec.seed)


def pa_diagnostics(g: WeightedGraph, *, tol=1e-9) -> dict:
    """Structural checks a graph must pass to be a PA(m, delta) outcome.

    A PA graph is connected once node 1's self-loops are ignored and has
    mean degree exactly 2m for a positive integer m.
    """
    mu = g.degrees()
    mean = float(mu.mean()) if g.n else 0.0
    m_est = round(mean / 2.0)
    comps = components(g)
    return {
        "n": g.n,
        "mean_degree": mean,
        "is_even_mean": bool(m_est >= 1 and abs(mean - 2 * m_est) <= tol),
        "connected": len(comps) == 1,
        "component_sizes": sorted((len(c) for c in comps), reverse=True),
    }
