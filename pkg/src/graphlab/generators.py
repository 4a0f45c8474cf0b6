"""Seeded Erdős–Rényi and preferential attachment generators."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ._random import make_rng
from .graph import WeightedGraph

__all__ = ["ErParams", "PaParams", "PaTrace", "generate_er", "generate_pa"]


@dataclass(frozen=True)
class ErParams:
    """Parameters of G(n, p)."""

    n: int
    p: float
    seed: int | None = None

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n}")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"p must lie in [0, 1], got {self.p}")


@dataclass(frozen=True)
class PaParams:
    """Parameters of the preferential attachment model PA(m, delta) grown to n nodes."""

    n: int
    m: int
    delta: float = 0.0
    seed: int | None = None

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n}")
        if int(self.m) != self.m or self.m < 1:
            raise ValueError(f"m must be a positive integer, got {self.m}")
        if not self.delta > -self.m:
            raise ValueError(f"delta must exceed -m = {-self.m}, got {self.delta}")


@dataclass
class PaTrace:
    """Output of :func:`generate_pa`.

    ``graph`` is the multigraph (weights are multiplicities, node 1 carries
    its m self-loops).  ``degree_history[i][t - i]`` is the degree of node
    ``i`` at time ``t`` for ``t = i..n``.
    """

    graph: WeightedGraph
    params: PaParams
    degree_history: dict[int, np.ndarray] = field(default_factory=dict)

    @property
    def degrees(self) -> np.ndarray:
        return self.graph.degrees().astype(np.int64)

    def stripped(self) -> WeightedGraph:
        return self.graph.strip_self_loops()

    def history_rows(self):
        """Yield ``(t, i, degree)`` ordered by time, then node."""
        n = self.params.n
        nodes = sorted(self.degree_history)
        for t in range(1, n + 1):
            for i in nodes:
                if i <= t:
                    yield t, i, int(self.degree_history[i][t - i])


def _pair_from_index(k: np.ndarray, n: int):
    # row i (0-based) holds pairs (i, j), j > i, starting at linear offset off[i]
    rows = np.arange(n - 1, dtype=np.int64)
    off = rows * n - rows * (rows + 1) // 2
    i = np.searchsorted(off, k, side="right") - 1
    j = k - off[i] + i + 1
    return i + 1, j + 1


def generate_er(params: ErParams) -> WeightedGraph:
    """Sample an Erdős–Rényi graph G(n, p).

    Every pair ``{i, j}`` is present independently with probability ``p``.
    Present pairs are located by geometric skipping over the linear pair
    order, so the cost is proportional to the number of edges.
    """
    n, p = int(params.n), float(params.p)
    total = n * (n - 1) // 2
    if total == 0 or p == 0.0:
        return WeightedGraph(n)
    if p == 1.0:
        k = np.arange(total, dtype=np.int64)
    else:
        rng = make_rng(params.seed)
        expected = total * p
        chunk = int(expected + 6.0 * math.sqrt(expected) + 16)
        picks = []
        pos = -1
        while True:
            gaps = rng.geometric(p, size=chunk)
            idx = pos + np.cumsum(gaps)
            picks.append(idx[idx < total])
            if idx[-1] >= total:
                break
            pos = int(idx[-1])
        k = np.concatenate(picks)
    src, dst = _pair_from_index(k, n)
    return WeightedGraph(n, src, dst)


def generate_pa(params: PaParams, track=()) -> PaTrace:
    """Grow a preferential attachment multigraph.

    Node 1 starts with ``m`` self-loops.  At time ``t`` node ``t + 1`` sends
    ``m`` edges whose endpoints are drawn independently from nodes ``1..t``
    with probability ``(D^t(i) + delta) / ((2m + delta) t)``; degrees are
    only updated after all ``m`` draws, so the number of edges a node
    receives is Binomial(m, p) given the current degrees.

    Parameters
    ----------
    params : PaParams
    track : iterable of int
        Node ids whose degree is recorded at every time step.
    """
    n, m, delta = int(params.n), int(params.m), float(params.delta)
    track = sorted({int(i) for i in track})
    for i in track:
        if not 1 <= i <= n:
            raise ValueError(f"tracked node {i} out of range [1, {n}]")
    rng = make_rng(params.seed)

    deg = np.zeros(n, dtype=np.int64)
    deg[0] = 2 * m
    shifted = np.zeros(n, dtype=np.float64)
    shifted[0] = 2 * m + delta
    history = {i: np.zeros(n - i + 1, dtype=np.int64) for i in track}
    if 1 in history:
        history[1][0] = 2 * m

    src = np.empty(m * (n - 1), dtype=np.int64)
    dst = np.empty(m * (n - 1), dtype=np.int64)
    for t in range(1, n):
        cs = np.cumsum(shifted[:t])
        u = rng.random(m) * cs[-1]
        targets = np.minimum(np.searchsorted(cs, u, side="right"), t - 1)
        np.add.at(deg, targets, 1)
        shifted[targets] = deg[targets] + delta
        deg[t] = m
        shifted[t] = m + delta
        src[(t - 1) * m:t * m] = t + 1
        dst[(t - 1) * m:t * m] = targets + 1
        for i, h in history.items():
            if i <= t + 1:
                h[t + 1 - i] = deg[i - 1]

    graph = WeightedGraph(
        n,
        np.concatenate([[1], src]),
        np.concatenate([[1], dst]),
        np.concatenate([[float(m)], np.ones(src.size)]),
        allows_self_loops=True,
        multiplicity=True,
    )
    return PaTrace(graph=graph, params=params, degree_history=history)
