import itertools

import numpy as np
import pytest

from graphlab import WeightedGraph


def random_connected_graph(rng, n, *, weighted=True, extra=None, low=0.1, high=10.0):
    """Random spanning tree plus random extra edges; conductances uniform(low, high)."""
    order = rng.permutation(n) + 1
    edges = {}
    for k in range(1, n):
        a, b = int(order[k]), int(order[rng.integers(0, k)])
        edges[(min(a, b), max(a, b))] = None
    if extra is None:
        extra = int(rng.integers(0, n * (n - 1) // 2 - (n - 1) + 1))
    pairs = [p for p in itertools.combinations(range(1, n + 1), 2) if p not in edges]
    if pairs and extra:
        for idx in rng.choice(len(pairs), size=min(extra, len(pairs)), replace=False):
            edges[pairs[idx]] = None
    src = [a for a, _ in edges]
    dst = [b for _, b in edges]
    w = rng.uniform(low, high, len(src)) if weighted else np.ones(len(src))
    return WeightedGraph(n, src, dst, w)


@pytest.fixture
def path3():
    return WeightedGraph.from_edges(3, [(1, 2), (2, 3)])


@pytest.fixture
def cycle4():
    return WeightedGraph.from_edges(4, [(1, 2), (2, 3), (3, 4), (4, 1)])


@pytest.fixture
def triangle():
    return WeightedGraph.from_edges(3, [(1, 2), (2, 3), (1, 3)])
