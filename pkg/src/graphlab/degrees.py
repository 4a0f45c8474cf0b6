"""Degree histograms, power-law fits and the closed-form PA degree laws.

The PA formulas here are the analytic references that simulations are
checked against.  Gamma-function ratios are always evaluated as
differences of ``gammaln`` and exponentiated once.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import stats
from scipy.special import gammaln, xlog1py, xlogy, zeta

from ._random import make_rng
from .graph import WeightedGraph

__all__ = [
    "DegreeHistogram",
    "PowerLawFit",
    "PaMoments",
    "histogram",
    "fit_power_law",
    "pa_limit_pmf",
    "pa_tau",
    "pa_c",
    "pa_expected_degree",
    "pa_degree_variance",
    "pa_degree_variance_recursive",
    "binomial_pmf",
    "binomial_deviation",
    "chisquare_gof",
    "sample_power_law",
]


class DegreeHistogram:
    """Counts ``N_k`` of nodes with degree ``k``.

    ``counts[k]`` is ``N_k`` for ``k = 0..k_max``; ``n`` is the node count.
    """

    def __init__(self, counts):
        counts = np.asarray(counts, dtype=np.int64)
        if counts.ndim != 1 or np.any(counts < 0):
            raise ValueError("counts must be a 1-d array of non-negative integers")
        self.counts = counts
        self.n = int(counts.sum())

    @classmethod
    def from_degrees(cls, degrees) -> DegreeHistogram:
        degrees = np.asarray(degrees, dtype=np.int64)
        if degrees.size and degrees.min() < 0:
            raise ValueError("degrees must be non-negative")
        return cls(np.bincount(degrees, minlength=1))

    @property
    def k_max(self) -> int:
        nz = np.flatnonzero(self.counts)
        return int(nz[-1]) if nz.size else 0

    def as_dict(self) -> dict[int, int]:
        return {int(k): int(c) for k, c in enumerate(self.counts) if c}

    def pmf(self) -> np.ndarray:
        """Empirical degree distribution P_k = N_k / n."""
        return self.counts / self.n if self.n else np.zeros_like(self.counts, dtype=float)

    def tail_counts(self) -> np.ndarray:
        """N_{>=s} for s = 0..k_max."""
        return np.cumsum(self.counts[::-1])[::-1]

    def ccdf(self) -> np.ndarray:
        """P(D >= s) for s = 0..k_max."""
        return self.tail_counts() / self.n if self.n else np.zeros(self.counts.size)

    def moment(self, order=1) -> float:
        k = np.arange(self.counts.size, dtype=np.float64)
        return float(np.dot(self.pmf(), k ** order))

    def mean(self) -> float:
        return self.moment(1)

    def variance(self) -> float:
        return self.moment(2) - self.mean() ** 2

    def degrees(self) -> np.ndarray:
        """Expand back to a sorted degree sample."""
        return np.repeat(np.arange(self.counts.size), self.counts)

    def __add__(self, other: DegreeHistogram) -> DegreeHistogram:
        size = max(self.counts.size, other.counts.size)
        a = np.zeros(size, dtype=np.int64)
        a[:self.counts.size] += self.counts
        a[:other.counts.size] += other.counts
        return DegreeHistogram(a)

    def rows(self):
        """``(k, N_k, pmf, ccdf)`` for every k in ``0..k_max``."""
        pmf, ccdf = self.pmf(), self.ccdf()
        for k in range(self.k_max + 1):
            yield k, int(self.counts[k]), float(pmf[k]), float(ccdf[k])

    def __eq__(self, other):
        if not isinstance(other, DegreeHistogram):
            return NotImplemented
        return self.as_dict() == other.as_dict()

    def __repr__(self):
        return f"DegreeHistogram(n={self.n}, {self.as_dict()})"


def histogram(g: WeightedGraph) -> DegreeHistogram:
    """Degree histogram of an unweighted or multiplicity-weighted graph.

    Raises
    ------
    ValueError
        If some generalized degree is not an integer, i.e. the graph
        carries real-valued conductances.
    """
    mu = g.degrees()
    k = np.rint(mu)
    if not np.allclose(mu, k, rtol=0, atol=1e-9):
        raise ValueError(
            "graph has non-integer degrees; degree histograms need an unweighted or "
            "multiplicity graph (bin weighted degrees by quantiles instead)"
        )
    return DegreeHistogram.from_degrees(k.astype(np.int64))


@dataclass(frozen=True)
class PowerLawFit:
    """Discrete power law N_k ~ normalization * k^-tau on k >= k_min."""

    tau: float
    k_min: int
    n_tail: int
    normalization: float

    def expected_counts(self, k) -> np.ndarray:
        return self.normalization * np.asarray(k, dtype=float) ** -self.tau


def fit_power_law(h: DegreeHistogram, k_min: int | None = None) -> PowerLawFit:
    """Estimate the tail exponent with the discrete Hill-type MLE.

    ``tau = 1 + n_tail / sum(log(k_i / (k_min - 1/2)))`` over the degrees
    ``k_i >= k_min``.  ``k_min`` defaults to the smallest positive degree;
    pass ``m`` for PA graphs.
    """
    if k_min is None:
        positive = np.flatnonzero(h.counts[1:]) + 1
        if positive.size == 0:
            raise ValueError("empty tail: no node has positive degree")
        k_min = int(positive[0])
    k_min = int(k_min)
    if k_min < 1:
        raise ValueError(f"k_min must be at least 1, got {k_min}")
    k = np.arange(h.counts.size)
    tail = k >= k_min
    n_tail = int(h.counts[tail].sum())
    if n_tail < 2:
        raise ValueError(f"empty tail: {n_tail} node(s) with degree >= {k_min}")
    if h.counts[k_min + 1:].sum() == 0:
        raise ValueError(f"degenerate tail: every tail degree equals k_min={k_min}")
    s = float(np.dot(h.counts[tail], np.log(k[tail] / (k_min - 0.5))))
    tau = 1.0 + n_tail / s
    return PowerLawFit(tau=tau, k_min=k_min, n_tail=n_tail,
                       normalization=n_tail / float(zeta(tau, k_min)))


def sample_power_law(tau: float, k_min: int, size: int, seed=None, k_max=10**6) -> np.ndarray:
    """Exact draws from p_k proportional to k^-tau, k >= k_min (truncated at ``k_max``).

    Inverse-CDF sampling against the tabulated tail sums; the mass above
    ``k_max`` is below 1e-12 for tau >= 3 and the default cap.
    """
    rng = make_rng(seed)
    k = np.arange(k_min, k_max + 1, dtype=np.float64)
    w = k ** -tau
    cdf = np.cumsum(w)
    cdf /= cdf[-1]
    u = rng.random(size)
    return (np.searchsorted(cdf, u, side="right") + k_min).astype(np.int64)


def _check_pa(m, delta):
    if int(m) != m or m < 1:
        raise ValueError(f"m must be a positive integer, got {m}")
    if not delta > -m:
        raise ValueError(f"delta must exceed -m = {-m}, got {delta}")


def pa_limit_pmf(m: int, delta: float, k):
    """Limiting PA degree distribution p_k; zero for k < m.

    ``k`` may be a scalar or an array; the return type follows it.
    """
    _check_pa(m, delta)
    k_arr = np.asarray(k, dtype=np.float64)
    if np.any(k_arr < 0):
        raise ValueError("k must be non-negative")
    r = delta / m
    safe = np.maximum(k_arr, m)
    log_p = (np.log(2.0 + r) + gammaln(safe + delta) + gammaln(m + 2 + delta + r)
             - gammaln(m + delta) - gammaln(safe + 3 + delta + r))
    p = np.where(k_arr >= m, np.exp(log_p), 0.0)
    return float(p) if np.ndim(k) == 0 else p


def pa_tau(m: int, delta: float) -> float:
    """Power-law exponent 3 + delta/m of the PA limit distribution."""
    _check_pa(m, delta)
    return 3.0 + delta / m


def pa_c(m: int, delta: float) -> float:
    """Prefactor c in p_k ~ c * k^-tau."""
    _check_pa(m, delta)
    r = delta / m
    return float(np.exp(np.log(2.0 + r) + gammaln(m + 2 + delta + r) - gammaln(m + delta)))


def _check_node_time(i, n):
    i_arr = np.asarray(i)
    if np.any(i_arr < 1) or np.any(i_arr > n):
        raise ValueError(f"node index must satisfy 1 <= i <= n = {n}")


def _start_value(m, delta, i):
    return np.where(np.asarray(i) == 1, 2 * m, m) + delta


def _shifted_mean(m, delta, i, n):
    # E(D^n(i) + delta)
    a = m / (2 * m + delta)
    i = np.asarray(i, dtype=np.float64)
    n = np.asarray(n, dtype=np.float64)
    return _start_value(m, delta, i) * np.exp(gammaln(n + a) + gammaln(i) - gammaln(i + a) - gammaln(n))


def pa_expected_degree(m: int, delta: float, i, n: int):
    """E(D^n(i)), the expected degree of node ``i`` once the graph has ``n`` nodes.

    Vectorised over ``i``.
    """
    _check_pa(m, delta)
    _check_node_time(i, n)
    val = _shifted_mean(m, delta, i, n) - delta
    return float(val) if np.ndim(i) == 0 else val


def _cd(m, delta, j):
    j = np.asarray(j, dtype=np.float64)
    a = m / ((2 * m + delta) * j)
    return a * a / m, (1.0 + a) ** 2, a


def pa_degree_variance(m: int, delta: float, i: int, n: int) -> float:
    """Var(D^n(i)) from the product/sum closed form.

    The bracket ``prod(d - c) - prod(d)`` is evaluated as
    ``prod(d) * expm1(sum(log1p(-c/d)))`` to avoid cancellation.
    """
    _check_pa(m, delta)
    _check_node_time(i, n)
    i, n = int(i), int(n)
    if i == n:
        return 0.0
    j = np.arange(i, n, dtype=np.float64)
    c, d, a = _cd(m, delta, j)
    start = float(_start_value(m, delta, i))
    log_d_sum = float(np.sum(np.log(d)))
    bracket = np.exp(log_d_sum) * np.expm1(float(np.sum(np.log1p(-c / d))))
    log_dc = np.log(d - c)
    # suffix[j] = sum of log(d_k - c_k) for k > j
    suffix = np.concatenate([np.cumsum(log_dc[::-1])[::-1][1:], [0.0]])
    mean_j = _shifted_mean(m, delta, i, j)
    total = start ** 2 * bracket + float(np.sum(mean_j * a * np.exp(suffix)))
    return float(total)


def pa_degree_variance_recursive(m: int, delta: float, i: int, n: int) -> float:
    """Var(D^n(i)) by stepping the first/second-moment recursion from time i.

    Independent of :func:`pa_degree_variance`: the mean is advanced by the
    one-step factor instead of Gamma ratios.
    """
    _check_pa(m, delta)
    _check_node_time(i, n)
    start = float(_start_value(m, delta, i))
    mean, second, var = start, start * start, 0.0
    for j in range(int(i), int(n)):
        c, d, a = (float(v) for v in _cd(m, delta, j))
        var = -c * second + a * mean + d * var
        second = (d - c) * second + a * mean
        mean *= 1.0 + a
    return var


@dataclass(frozen=True)
class PaMoments:
    """Closed-form moments of fixed-node degrees in PA(m, delta)."""

    m: int
    delta: float

    def __post_init__(self):
        _check_pa(self.m, self.delta)

    def c(self, j):
        return _cd(self.m, self.delta, j)[0]

    def d(self, j):
        return _cd(self.m, self.delta, j)[1]

    def expected_degree(self, i, n):
        return pa_expected_degree(self.m, self.delta, i, n)

    def variance(self, i, n):
        return pa_degree_variance(self.m, self.delta, i, n)

    def std(self, i, n):
        return float(np.sqrt(max(self.variance(i, n), 0.0)))


def binomial_pmf(n_trials: int, p: float, l):
    """Binomial(n_trials, p) probability of ``l`` successes, via log space."""
    if int(n_trials) != n_trials or n_trials < 0:
        raise ValueError(f"n_trials must be a non-negative integer, got {n_trials}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    l_arr = np.asarray(l, dtype=np.float64)
    if np.any(l_arr < 0) or np.any(l_arr > n_trials) or np.any(l_arr != np.rint(l_arr)):
        raise ValueError(f"l must be an integer in [0, {n_trials}]")
    log_pmf = (gammaln(n_trials + 1.0) - gammaln(l_arr + 1.0) - gammaln(n_trials - l_arr + 1.0)
               + xlogy(l_arr, p) + xlog1py(n_trials - l_arr, -p))
    out = np.exp(log_pmf)
    return float(out) if np.ndim(l) == 0 else out


def binomial_deviation(n: int, p: float, m) -> np.ndarray:
    """Largest pointwise gap between Bin(m-1, p) and Bin(n-1, p*m/n).

    These are the degree laws of the uniform and the Bernoulli node-sampled
    subgraphs of G(n, p) with matched expected size.  ``m`` may be an array
    of subgraph sizes in ``1..n``.
    """
    ms = np.atleast_1d(np.asarray(m, dtype=np.int64))
    l = np.arange(n)
    out = np.empty(ms.size)
    for idx, mm in enumerate(ms):
        if not 1 <= mm <= n:
            raise ValueError(f"subgraph size must lie in [1, {n}], got {mm}")
        a = np.zeros(n)
        a[:mm] = binomial_pmf(int(mm) - 1, p, l[:mm])
        b = binomial_pmf(n - 1, p * mm / n, l)
        out[idx] = np.abs(a - b).max()
    return out if np.ndim(m) else out[0]


def chisquare_gof(observed, expected_pmf, *, min_expected=5.0):
    """Pearson chi-square goodness of fit of integer counts to a PMF.

    ``observed[k]`` counts outcome ``k``; ``expected_pmf[k]`` is its model
    probability.  Outcomes beyond either array contribute to the upper tail
    bin.  Adjacent bins are pooled from both ends until every expected count
    reaches ``min_expected``.

    Returns
    -------
    (statistic, dof, p_value)
    """
    observed = np.asarray(observed, dtype=np.float64)
    pmf = np.asarray(expected_pmf, dtype=np.float64)
    total = observed.sum()
    size = max(observed.size, pmf.size)
    obs = np.zeros(size)
    obs[:observed.size] = observed
    exp = np.zeros(size)
    exp[:pmf.size] = pmf * total
    exp[-1] += max(total - exp.sum(), 0.0)

    bins_o, bins_e = [], []
    acc_o = acc_e = 0.0
    for o, e in zip(obs, exp):
        acc_o += o
        acc_e += e
        if acc_e >= min_expected:
            bins_o.append(acc_o)
            bins_e.append(acc_e)
            acc_o = acc_e = 0.0
    if bins_e:
        bins_o[-1] += acc_o
        bins_e[-1] += acc_e
    else:
        bins_o, bins_e = [acc_o], [acc_e]
    bins_o, bins_e = np.array(bins_o), np.array(bins_e)
    # merge an under-filled last bin into its neighbour
    while bins_e.size > 1 and bins_e[-1] < min_expected:
        bins_o[-2] += bins_o[-1]
        bins_e[-2] += bins_e[-1]
        bins_o, bins_e = bins_o[:-1], bins_e[:-1]
    stat = float(np.sum((bins_o - bins_e) ** 2 / bins_e))
    dof = int(bins_e.size - 1)
    p_value = float(stats.chi2.sf(stat, dof)) if dof > 0 else 1.0
    return stat, dof, p_value
