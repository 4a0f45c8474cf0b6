"""Random walks on weighted graphs and their electrical-network counterparts.

The walk moves from ``x`` to a neighbour ``y`` with probability
``c_xy / mu_x``.  Exact quantities (hitting times, potentials, effective
resistance) come from dense LU solves of grounded systems; Monte Carlo
walks use per-node alias tables.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy import linalg

from ._random import make_rng, spawn_seeds
from .graph import GraphError, WeightedGraph, is_connected

__all__ = [
    "MAX_DENSE_NODES",
    "HittingSolution",
    "PotentialSolution",
    "WalkStats",
    "TetaliReport",
    "transition_matrix",
    "hitting_times",
    "commute_time",
    "effective_resistance",
    "simulate_walks",
    "verify_tetali",
    "AliasSampler",
]

#: Largest graph the dense solvers accept.
MAX_DENSE_NODES = 2000


def _require_walkable(g: WeightedGraph):
    if g.n < 2:
        raise GraphError("random walks need at least two nodes")
    if g.n > MAX_DENSE_NODES:
        raise GraphError(f"dense solver limit is {MAX_DENSE_NODES} nodes, graph has {g.n}")
    if g.has_self_loops:
        raise GraphError("self-loops are not supported here; call strip_self_loops() first")
    if not is_connected(g):
        raise GraphError("graph is not connected")


def _node(g, x, name):
    x = int(x)
    if not 1 <= x <= g.n:
        raise GraphError(f"{name}={x} out of range [1, {g.n}]")
    return x


def transition_matrix(g: WeightedGraph) -> np.ndarray:
    """Dense row-stochastic matrix P with p_xy = c_xy / mu_x."""
    C = g.conductance_matrix(dense=True)
    mu = C.sum(axis=1)
    if np.any(mu <= 0):
        raise GraphError("isolated node: transition probabilities undefined")
    return C / mu[:, None]


@dataclass
class HittingSolution:
    """Expected hitting times of ``target``; ``times[x - 1]`` is E^x(tau_target)."""

    target: int
    times: np.ndarray
    residual: float

    def __getitem__(self, x):
        return float(self.times[int(x) - 1])


def hitting_times(g: WeightedGraph, y: int) -> HittingSolution:
    """Solve (P - I) T = -1 with T_y = 0.

    Row and column ``y`` are eliminated and the remaining (n-1)-dimensional
    system is factorised by LU with partial pivoting.  ``residual`` is the
    largest violation of T_x = 1 + sum_z p_xz T_z over x != y.
    """
    _require_walkable(g)
    y = _node(g, y, "target")
    P = transition_matrix(g)
    return _hitting_from_P(P, y)


def _hitting_from_P(P, y):
    n = P.shape[0]
    keep = np.arange(n) != y - 1
    A = np.eye(n - 1) - P[np.ix_(keep, keep)]
    T = np.zeros(n)
    T[keep] = linalg.lu_solve(linalg.lu_factor(A, check_finite=False), np.ones(n - 1))
    res = np.abs(T[keep] - 1.0 - P[keep] @ T).max() if n > 1 else 0.0
    return HittingSolution(target=y, times=T, residual=float(res))


def commute_time(g: WeightedGraph, x: int, y: int) -> float:
    """Expected round trip E^x(tau_y) + E^y(tau_x)."""
    x = _node(g, x, "x")
    y = _node(g, y, "y")
    if x == y:
        raise GraphError("commute time needs two distinct nodes")
    return hitting_times(g, y)[x] + hitting_times(g, x)[y]


@dataclass
class PotentialSolution:
    """Unit current injected at ``source`` and extracted at ``sink``.

    ``potentials[z - 1]`` is V_z relative to the grounded sink.  ``currents``
    holds, per stored edge record ``(src[e], dst[e])``, the current flowing
    from ``src[e]`` to ``dst[e]``.
    """

    source: int
    sink: int
    potentials: np.ndarray
    currents: np.ndarray
    edges_src: np.ndarray
    edges_dst: np.ndarray
    r_eff: float
    harmonic_residual: float

    def net_outflow(self) -> np.ndarray:
        """Net current leaving each node (``+1`` at the source, ``-1`` at the sink)."""
        n = self.potentials.size
        out = np.bincount(self.edges_src - 1, weights=self.currents, minlength=n)
        out -= np.bincount(self.edges_dst - 1, weights=self.currents, minlength=n)
        return out

    def current(self, w: int, z: int) -> float:
        """Current flowing from ``w`` to ``z`` (zero if not adjacent)."""
        hit = (self.edges_src == w) & (self.edges_dst == z)
        if hit.any():
            return float(self.currents[hit][0])
        hit = (self.edges_src == z) & (self.edges_dst == w)
        return -float(self.currents[hit][0]) if hit.any() else 0.0


def effective_resistance(g: WeightedGraph, x: int, y: int) -> PotentialSolution:
    """Potentials, currents and R_xy for a unit x -> y flow.

    Solves the conductance Laplacian L V = e_x - e_y with the sink row and
    column removed (V_y = 0).
    """
    _require_walkable(g)
    x = _node(g, x, "x")
    y = _node(g, y, "y")
    if x == y:
        raise GraphError("effective resistance needs two distinct nodes")
    C = g.conductance_matrix(dense=True)
    mu = C.sum(axis=1)
    L = np.diag(mu) - C
    n = g.n
    keep = np.arange(n) != y - 1
    rhs = np.zeros(n)
    rhs[x - 1] = 1.0
    V = np.zeros(n)
    V[keep] = linalg.lu_solve(linalg.lu_factor(L[np.ix_(keep, keep)], check_finite=False),
                              rhs[keep])
    currents = (V[g.src - 1] - V[g.dst - 1]) * g.weight
    interior = keep.copy()
    interior[x - 1] = False
    P = C / mu[:, None]
    res = np.abs(V[interior] - P[interior] @ V).max() if interior.any() else 0.0
    return PotentialSolution(source=x, sink=y, potentials=V, currents=currents,
                             edges_src=g.src, edges_dst=g.dst, r_eff=float(V[x - 1]),
                             harmonic_residual=float(res))


class AliasSampler:
    """Vose alias tables for every node's neighbour distribution.

    Slots are laid out like a CSR matrix: node ``v`` (0-based) owns slots
    ``indptr[v]:indptr[v+1]``.  A draw picks a slot uniformly, then keeps it
    with probability ``prob[slot]`` or jumps to ``alias[slot]``.
    """

    def __init__(self, g: WeightedGraph):
        C = g.conductance_matrix().tocsr()
        C.sort_indices()
        self.indptr = C.indptr.astype(np.int64)
        self.neighbors = C.indices.astype(np.int64)
        self.degree = np.diff(self.indptr)
        self.prob = np.ones(self.neighbors.size)
        self.alias = np.arange(self.neighbors.size, dtype=np.int64)
        for v in range(g.n):
            lo, hi = self.indptr[v], self.indptr[v + 1]
            if hi > lo:
                self._build(lo, C.data[lo:hi])

    def _build(self, lo, w):
        k = w.size
        scaled = w * (k / w.sum())
        small = [i for i in range(k) if scaled[i] < 1.0]
        large = [i for i in range(k) if scaled[i] >= 1.0]
        while small and large:
            s, l = small.pop(), large.pop()
            self.prob[lo + s] = scaled[s]
            self.alias[lo + s] = lo + l
            scaled[l] -= 1.0 - scaled[s]
            (small if scaled[l] < 1.0 else large).append(l)
        for i in small + large:
            self.prob[lo + i] = 1.0

    def step(self, cur: np.ndarray, rng: np.random.Generator) -> np.ndarray:
        """One move for every walker at 0-based positions ``cur``."""
        u = rng.random(cur.size)
        v = rng.random(cur.size)
        deg = self.degree[cur]
        slot = self.indptr[cur] + np.minimum((u * deg).astype(np.int64), deg - 1)
        slot = np.where(v < self.prob[slot], slot, self.alias[slot])
        return self.neighbors[slot]


@dataclass
class WalkStats:
    """Monte Carlo summary of ``walk_count`` walks from ``source`` stopped at ``target``.

    ``visit_mean[z - 1]`` estimates U_z, the expected number of visits to z
    at steps ``0..tau - 1`` (the start counts, the target never does).
    """

    source: int
    target: int
    walk_count: int
    seed: int | None
    hitting_mean: float
    hitting_var: float
    visit_mean: np.ndarray
    visit_var: np.ndarray

    @property
    def hitting_sd(self) -> float:
        return float(np.sqrt(self.hitting_var))

    @property
    def hitting_stderr(self) -> float:
        return float(np.sqrt(self.hitting_var / self.walk_count))

    def visit_stderr(self) -> np.ndarray:
        return np.sqrt(self.visit_var / self.walk_count)


def _walk_batch(sampler, n, x, y, count, seed):
    rng = make_rng(seed)
    visits = np.zeros((count, n), dtype=np.int64)
    cur = np.full(count, x - 1, dtype=np.int64)
    active = np.arange(count)
    while active.size:
        visits[active, cur] += 1
        cur = sampler.step(cur, rng)
        alive = cur != y - 1
        active, cur = active[alive], cur[alive]
    tau = visits.sum(axis=1).astype(np.float64)
    v = visits.astype(np.float64)
    return tau.sum(), (tau ** 2).sum(), v.sum(axis=0), (v ** 2).sum(axis=0)


def simulate_walks(g: WeightedGraph, x: int, y: int, walk_count: int, seed=None, *,
                   batch_size: int | None = None, workers: int | None = 1) -> WalkStats:
    """Run independent walks from ``x`` until they first hit ``y``.

    Walks are split into fixed-size batches, each with its own child seed,
    so the result depends only on ``seed`` and ``batch_size``, never on
    ``workers``.  Batch tallies are reduced in batch order.
    """
    if g.has_self_loops:
        raise GraphError("self-loops are not supported here; call strip_self_loops() first")
    if not is_connected(g):
        raise GraphError("graph is not connected")
    x = _node(g, x, "x")
    y = _node(g, y, "y")
    if x == y:
        raise GraphError("walks need distinct start and target")
    walk_count = int(walk_count)
    if walk_count < 1:
        raise ValueError("walk_count must be at least 1")
    if batch_size is None:
        batch_size = max(1, min(20000, 2_000_000 // g.n))
    sampler = AliasSampler(g)
    sizes = [batch_size] * (walk_count // batch_size)
    if walk_count % batch_size:
        sizes.append(walk_count % batch_size)
    seeds = spawn_seeds(seed, len(sizes))
    jobs = list(zip(sizes, seeds))

    def run(job):
        return _walk_batch(sampler, g.n, x, y, job[0], job[1])

    if workers is not None and workers > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(run, jobs))
    else:
        parts = [run(job) for job in jobs]

    s1 = s2 = 0.0
    v1 = np.zeros(g.n)
    v2 = np.zeros(g.n)
    for a, b, c, d in parts:
        s1 += a
        s2 += b
        v1 += c
        v2 += d
    T = float(walk_count)
    mean = s1 / T
    ddof = T - 1 if walk_count > 1 else 1.0
    var = max(s2 - T * mean * mean, 0.0) / ddof
    vmean = v1 / T
    vvar = np.maximum(v2 - T * vmean ** 2, 0.0) / ddof
    return WalkStats(source=x, target=y, walk_count=walk_count,
                     seed=seed if not isinstance(seed, np.random.Generator) else None,
                     hitting_mean=mean, hitting_var=var, visit_mean=vmean, visit_var=vvar)


@dataclass
class TetaliReport:
    lhs: float
    rhs: int
    abs_err: float
    rel_err: float

    def ok(self, tol=1e-8) -> bool:
        return self.abs_err <= tol * max(self.rhs, 1)

    def as_dict(self) -> dict:
        return {"lhs": self.lhs, "rhs": self.rhs, "abs_err": self.abs_err,
                "rel_err": self.rel_err}


def verify_tetali(g: WeightedGraph) -> TetaliReport:
    """Evaluate sum over directed edges of E^x(tau_y) c_xy / sum of c_xy.

    The identity says this equals n - 1 on any connected graph.  One
    hitting-time solve is made per node that ends a directed edge.
    """
    _require_walkable(g)
    P = transition_matrix(g)
    num = 0.0
    targets = np.union1d(g.src, g.dst)
    for y in targets.tolist():
        T = _hitting_from_P(P, y).times
        # directed edges (x, y) ending at y
        into = g.dst == y
        num += float(np.dot(T[g.src[into] - 1], g.weight[into]))
        into = g.src == y
        num += float(np.dot(T[g.dst[into] - 1], g.weight[into]))
    denom = 2.0 * g.total_weight()
    lhs = num / denom
    rhs = g.n - 1
    err = abs(lhs - rhs)
    return TetaliReport(lhs=lhs, rhs=rhs, abs_err=err, rel_err=err / rhs)
