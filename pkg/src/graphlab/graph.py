"""Weighted undirected graphs on the node set 1..n.

A :class:`WeightedGraph` stores one record per unordered node pair with a
positive conductance.  Parallel edges are merged by summing conductances;
graphs produced by the preferential attachment generator set
``multiplicity=True`` to signal that the (integer) weights count parallel
edges rather than physical conductances.
"""

from __future__ import annotations

import io
import os

import numpy as np
from scipy import sparse
from scipy.sparse import csgraph

__all__ = [
    "GraphError",
    "WeightedGraph",
    "degree",
    "is_connected",
    "components",
    "read_graph",
    "write_graph",
]


class GraphError(ValueError):
    """Raised for malformed graphs, bad node ids or unreadable edge lists."""


class WeightedGraph:
    """Immutable weighted graph with 1-based node ids.

    Parameters
    ----------
    n : int
        Number of nodes; nodes are ``1..n``.
    src, dst : array_like of int
        Edge endpoints.  Orientation is irrelevant, records are canonicalised
        to ``src <= dst`` and duplicates are merged.
    weight : array_like of float, optional
        Conductances, default 1.0 for every edge.
    allows_self_loops : bool
        Whether edges with ``src == dst`` are permitted.
    multiplicity : bool
        Weights are integer edge multiplicities (multigraph view).
    """

    def __init__(self, n, src=(), dst=(), weight=None, *, allows_self_loops=False,
                 multiplicity=False):
        n = int(n)
        if n < 0:
            raise GraphError(f"node count must be non-negative, got {n}")
        src = np.asarray(src, dtype=np.int64).ravel()
        dst = np.asarray(dst, dtype=np.int64).ravel()
        if src.shape != dst.shape:
            raise GraphError("src and dst must have the same length")
        if weight is None:
            weight = np.ones(src.shape, dtype=np.float64)
        else:
            weight = np.asarray(weight, dtype=np.float64).ravel()
            if weight.shape != src.shape:
                raise GraphError("weight must have one entry per edge")
        if src.size:
            lo = min(src.min(), dst.min())
            hi = max(src.max(), dst.max())
            if lo < 1 or hi > n:
                raise GraphError(f"node ids must lie in [1, {n}], found [{lo}, {hi}]")
            if not np.all(np.isfinite(weight)):
                raise GraphError("conductances must be finite")
            if np.any(weight < 0):
                raise GraphError("conductances must be non-negative")
            if not allows_self_loops and np.any(src == dst):
                raise GraphError("self-loops present but allows_self_loops is False")
        a = np.minimum(src, dst)
        b = np.maximum(src, dst)
        keep = weight > 0
        a, b, weight = a[keep], b[keep], weight[keep]
        if a.size:
            key = (a - 1) * n + (b - 1)
            uniq, inv = np.unique(key, return_inverse=True)
            w = np.zeros(uniq.size, dtype=np.float64)
            np.add.at(w, inv, weight)
            a = uniq // n + 1
            b = uniq % n + 1
            weight = w
        for arr in (a, b, weight):
            arr.setflags(write=False)
        self.n = n
        self.src = a
        self.dst = b
        self.weight = weight
        self.allows_self_loops = bool(allows_self_loops)
        self.multiplicity = bool(multiplicity)
        self._cache = {}

    @classmethod
    def from_edges(cls, n, edges, **kwargs) -> WeightedGraph:
        """Build from an iterable of ``(x, y)`` or ``(x, y, c)`` tuples."""
        edges = list(edges)
        if not edges:
            return cls(n, **kwargs)
        src = [e[0] for e in edges]
        dst = [e[1] for e in edges]
        w = [e[2] if len(e) > 2 else 1.0 for e in edges]
        return cls(n, src, dst, w, **kwargs)

    @property
    def num_edges(self) -> int:
        """Number of stored (merged) undirected edge records."""
        return int(self.src.size)

    @property
    def has_self_loops(self) -> bool:
        return bool(np.any(self.src == self.dst))

    @property
    def is_unweighted(self) -> bool:
        return bool(np.all(self.weight == 1.0))

    def edges(self):
        """Iterate ``(x, y, c)`` with ``x <= y``."""
        for x, y, c in zip(self.src.tolist(), self.dst.tolist(), self.weight.tolist()):
            yield x, y, c

    def edge_multiset(self) -> list[tuple[int, int, float]]:
        return list(self.edges())

    def degrees(self) -> np.ndarray:
        """Generalized degrees mu_x for x = 1..n (index 0 is node 1).

        A self-loop contributes twice its conductance.
        """
        if "mu" not in self._cache:
            mu = np.bincount(self.src - 1, weights=self.weight, minlength=self.n)
            mu += np.bincount(self.dst - 1, weights=self.weight, minlength=self.n)
            mu.setflags(write=False)
            self._cache["mu"] = mu
        return self._cache["mu"]

    def total_weight(self) -> float:
        """Sum of conductances over undirected edge records."""
        return float(self.weight.sum())

    def conductance_matrix(self, *, dense=False):
        """Symmetric conductance matrix C (sparse CSR unless ``dense``)."""
        off = self.src != self.dst
        rows = np.concatenate([self.src[off], self.dst[off], self.src[~off]]) - 1
        cols = np.concatenate([self.dst[off], self.src[off], self.dst[~off]]) - 1
        vals = np.concatenate([self.weight[off], self.weight[off], self.weight[~off]])
        C = sparse.csr_matrix((vals, (rows, cols)), shape=(self.n, self.n))
        return C.toarray() if dense else C

    def adjacency_matrix(self, *, dense=False):
        A = self.conductance_matrix(dense=dense)
        if dense:
            return (A > 0).astype(np.int64)
        A = A.copy()
        A.data = np.ones_like(A.data)
        return A.astype(np.int64)

    def strip_self_loops(self) -> WeightedGraph:
        """Copy without self-loops (e.g. node 1's initial loops in a PA graph)."""
        off = self.src != self.dst
        return WeightedGraph(self.n, self.src[off], self.dst[off], self.weight[off],
                             allows_self_loops=False, multiplicity=self.multiplicity)

    def simple(self) -> WeightedGraph:
        """Unit-weight simple view: parallel edges collapsed, loops dropped."""
        off = self.src != self.dst
        return WeightedGraph(self.n, self.src[off], self.dst[off])

    def relabel(self, keep) -> WeightedGraph:
        """Induced subgraph on ``keep`` (1-based ids), relabeled 1..len(keep)."""
        keep = np.asarray(keep, dtype=np.int64)
        new_id = np.zeros(self.n + 1, dtype=np.int64)
        new_id[keep] = np.arange(1, keep.size + 1)
        both = (new_id[self.src] > 0) & (new_id[self.dst] > 0)
        return WeightedGraph(keep.size, new_id[self.src[both]], new_id[self.dst[both]],
                             self.weight[both], allows_self_loops=self.allows_self_loops,
                             multiplicity=self.multiplicity)

    def same_edges(self, other: WeightedGraph) -> bool:
        return (self.n == other.n and np.array_equal(self.src, other.src)
                and np.array_equal(self.dst, other.dst)
                and np.array_equal(self.weight, other.weight))

    def to_networkx(self):
        import networkx as nx

        G = nx.MultiGraph() if self.multiplicity else nx.Graph()
        G.add_nodes_from(range(1, self.n + 1))
        for x, y, c in self.edges():
            if self.multiplicity:
                for _ in range(int(round(c))):
                    G.add_edge(x, y)
            else:
                G.add_edge(x, y, weight=c)
        return G

    def __repr__(self):
        flags = []
        if self.allows_self_loops:
            flags.append("self_loops")
        if self.multiplicity:
            flags.append("multiplicity")
        extra = f", {', '.join(flags)}" if flags else ""
        return f"WeightedGraph(n={self.n}, edges={self.num_edges}{extra})"


def _check_node(g: WeightedGraph, x) -> int:
    x = int(x)
    if not 1 <= x <= g.n:
        raise GraphError(f"node id {x} out of range [1, {g.n}]")
    return x


def degree(g: WeightedGraph, x: int) -> float:
    """Generalized degree mu_x of node ``x`` (self-loops count twice)."""
    x = _check_node(g, x)
    return float(g.degrees()[x - 1])


def components(g: WeightedGraph) -> list[list[int]]:
    """Connected components as sorted lists of node ids.

    Blocks are ordered by their smallest node id.
    """
    if g.n == 0:
        return []
    _, labels = csgraph.connected_components(g.conductance_matrix(), directed=False)
    order = np.argsort(labels, kind="stable")
    splits = np.flatnonzero(np.diff(labels[order])) + 1
    blocks = [sorted((b + 1).tolist()) for b in np.split(order, splits)]
    blocks.sort(key=lambda b: b[0])
    return blocks


def is_connected(g: WeightedGraph) -> bool:
    if g.n == 0:
        return False
    n_comp, _ = csgraph.connected_components(g.conductance_matrix(), directed=False)
    return n_comp == 1


def read_graph(path, format="edgelist", *, allows_self_loops=True, multiplicity=False):
    """Read a graph in edge-list format.

    The first non-comment line holds ``n``; every further line is
    ``x y [c]`` with 1-based ids and optional conductance (default 1.0).
    Lines starting with ``#`` are ignored.
    """
    if format != "edgelist":
        raise GraphError(f"unsupported graph format {format!r}")
    if isinstance(path, io.TextIOBase):
        text = path.read()
        name = getattr(path, "name", "<stream>")
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
        name = os.fspath(path)
    n = None
    src, dst, w = [], [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 1:
                raise GraphError(f"{name}:{lineno}: expected node count, got {line!r}")
            try:
                n = int(parts[0])
            except ValueError:
                raise GraphError(f"{name}:{lineno}: bad node count {parts[0]!r}") from None
            continue
        if len(parts) not in (2, 3):
            raise GraphError(f"{name}:{lineno}: expected 'x y [c]', got {line!r}")
        try:
            x, y = int(parts[0]), int(parts[1])
            c = float(parts[2]) if len(parts) == 3 else 1.0
        except ValueError:
            raise GraphError(f"{name}:{lineno}: malformed edge {line!r}") from None
        if not (1 <= x <= n and 1 <= y <= n):
            raise GraphError(f"{name}:{lineno}: node id out of range [1, {n}]")
        if c < 0 or not np.isfinite(c):
            raise GraphError(f"{name}:{lineno}: negative or non-finite conductance {c}")
        if x == y and not allows_self_loops:
            raise GraphError(f"{name}:{lineno}: self-loop on node {x} not allowed")
        src.append(x)
        dst.append(y)
        w.append(c)
    if n is None:
        raise GraphError(f"{name}: missing node count line")
    return WeightedGraph(n, src, dst, w, allows_self_loops=allows_self_loops,
                         multiplicity=multiplicity)


def write_graph(g: WeightedGraph, path, format="edgelist") -> None:
    """Write ``g`` in edge-list format with full-precision conductances."""
    if format != "edgelist":
        raise GraphError(f"unsupported graph format {format!r}")
    lines = [str(g.n)]
    lines.extend(f"{x} {y} {c!r}" for x, y, c in g.edges())
    text = "\n".join(lines) + "\n"
    if isinstance(path, io.TextIOBase):
        path.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
