import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphlab import (DegreeHistogram, ErParams, PaMoments, PaParams, WeightedGraph, binomial_pmf,
                      fit_power_law, generate_er, generate_pa, histogram, pa_c,
                      pa_degree_variance, pa_degree_variance_recursive, pa_expected_degree,
                      pa_limit_pmf, pa_tau, sample_power_law)


def enumerate_pa(m, delta, n):
    """Exact law of the PA degree vector at time n by brute-force enumeration.

    Returns a dict ``degree tuple -> probability``.
    """
    states = {(2 * m,): 1.0}
    for t in range(1, n):
        nxt = {}
        total = (2 * m + delta) * t
        for deg, prob in states.items():
            w = [(d + delta) / total for d in deg]
            for picks in itertools.product(range(t), repeat=m):
                pr = prob
                new = list(deg) + [m]
                for j in picks:
                    pr *= w[j]
                    new[j] += 1
                key = tuple(new)
                nxt[key] = nxt.get(key, 0.0) + pr
        states = nxt
    return states


def exact_moments(m, delta, n, i):
    law = enumerate_pa(m, delta, n)
    mean = sum(p * d[i - 1] for d, p in law.items())
    second = sum(p * d[i - 1] ** 2 for d, p in law.items())
    return mean, second - mean ** 2


CASES = [(1, 0.0, 5, 1), (1, 0.0, 6, 3), (2, 0.0, 5, 1), (2, 0.0, 5, 2), (2, -1.5, 5, 1),
         (1, 0.5, 6, 2), (3, 2.0, 4, 1), (2, 1.0, 5, 4), (1, -0.5, 6, 5)]


@pytest.mark.parametrize("m, delta, n, i", CASES)
def test_expected_degree_matches_enumeration(m, delta, n, i):
    mean, _ = exact_moments(m, delta, n, i)
    assert pa_expected_degree(m, delta, i, n) == pytest.approx(mean, rel=1e-12)


@pytest.mark.parametrize("m, delta, n, i", CASES)
def test_variance_matches_enumeration(m, delta, n, i):
    _, var = exact_moments(m, delta, n, i)
    assert pa_degree_variance(m, delta, i, n) == pytest.approx(var, rel=1e-10, abs=1e-12)
    assert pa_degree_variance_recursive(m, delta, i, n) == pytest.approx(var, rel=1e-10, abs=1e-12)


def test_expected_degree_boundaries():
    assert pa_expected_degree(2, 0.0, 7, 7) == pytest.approx(2)
    assert pa_expected_degree(3, 1.5, 1, 1) == pytest.approx(6)
    assert pa_expected_degree(2, -1.0, 50, 50) == pytest.approx(2)


def test_variance_boundaries():
    assert pa_degree_variance(2, 0.0, 9, 9) == 0.0
    assert pa_degree_variance(1, 0.0, 1, 2) == pytest.approx(0.0, abs=1e-14)
    assert pa_degree_variance_recursive(1, 0.0, 1, 2) == pytest.approx(0.0, abs=1e-14)


@pytest.mark.parametrize("m, delta", [(1, 0.0), (2, 0.0), (2, 1.0), (3, -2.0), (1, 10.0)])
def test_expected_degree_sum_is_2mn(m, delta):
    n = 1000
    total = pa_expected_degree(m, delta, np.arange(1, n + 1), n).sum()
    assert total == pytest.approx(2 * m * n, rel=1e-9)


def test_expected_degree_monotone_in_node():
    e = pa_expected_degree(2, 0.0, np.arange(1, 1001), 1000)
    assert np.all(np.diff(e) <= 1e-12)


def test_expected_degree_monte_carlo():
    m, i, n, reps = 2, 10, 1000, 200
    d = np.array([generate_pa(PaParams(n, m, 0.0, 500 + s)).degrees[i - 1] for s in range(reps)])
    se = d.std(ddof=1) / np.sqrt(reps)
    assert abs(d.mean() - pa_expected_degree(m, 0.0, i, n)) < 3 * se


@settings(max_examples=60, deadline=None)
@given(m=st.integers(1, 5), delta_frac=st.floats(0.05, 5.0), i=st.integers(1, 300),
       extra=st.integers(0, 300))
def test_variance_closed_form_equals_recursion(m, delta_frac, i, extra):
    delta = -m + delta_frac * m
    n = i + extra
    a = pa_degree_variance(m, delta, i, n)
    b = pa_degree_variance_recursive(m, delta, i, n)
    assert a == pytest.approx(b, rel=1e-12, abs=1e-12)
    assert a >= -1e-12


def test_pa_moments_coefficients():
    pm = PaMoments(2, 0.5)
    j = np.arange(1, 100)
    assert np.all(pm.c(j) > 0) and np.all(pm.d(j) > 1)
    assert pm.c(3) == pytest.approx(2 / (4.5 ** 2 * 9))
    assert pm.d(3) == pytest.approx((1 + 2 / (4.5 * 3)) ** 2)
    assert pm.variance(5, 5) == 0.0
    assert pm.std(1, 100) == pytest.approx(np.sqrt(pa_degree_variance(2, 0.5, 1, 100)))


def test_limit_pmf_m1():
    k = np.arange(1, 101)
    p = pa_limit_pmf(1, 0.0, k)
    np.testing.assert_allclose(p, 4.0 / (k * (k + 1) * (k + 2)), rtol=1e-12)
    assert pa_limit_pmf(1, 0.0, 1) == pytest.approx(2 / 3, rel=1e-14)
    assert pa_limit_pmf(1, 0.0, 2) == pytest.approx(1 / 6, rel=1e-14)
    assert pa_limit_pmf(1, 0.0, 3) == pytest.approx(1 / 15, rel=1e-14)


@pytest.mark.parametrize("m, delta", [(1, 0.0), (2, 0.0), (2, 1.0), (1, -0.5), (4, -3.5)])
def test_limit_pmf_is_distribution(m, delta):
    assert pa_limit_pmf(m, delta, m - 1) == 0.0
    assert pa_limit_pmf(m, delta, 0) == 0.0
    k = np.arange(0, 10 ** 6 + 1)
    p = pa_limit_pmf(m, delta, k)
    assert np.all(p >= 0)
    total = p.sum()
    assert 1 - 1e-4 <= total <= 1 + 1e-12


@pytest.mark.parametrize("m, delta", [(1, 0.0), (2, 0.0), (2, 1.0)])
def test_limit_pmf_power_law_tail(m, delta):
    k = 10 ** 4
    ratio = pa_limit_pmf(m, delta, k) / (pa_c(m, delta) * k ** -pa_tau(m, delta))
    assert abs(ratio - 1) < 0.05


def test_tau_and_c():
    assert pa_tau(2, 0.0) == 3.0
    assert pa_tau(1, 1.0) == 4.0
    assert pa_c(1, 0.0) == pytest.approx(4.0, rel=1e-14)
    k = 1000
    assert pa_limit_pmf(1, 0.0, k) == pytest.approx(4.0 * k ** -3.0, rel=0.005)
    with pytest.raises(ValueError):
        pa_tau(1, -1.0)
    with pytest.raises(ValueError):
        pa_c(0, 0.0)


def test_histogram_examples(path3):
    assert histogram(WeightedGraph(3)).as_dict() == {0: 3}
    assert histogram(generate_er(ErParams(4, 1.0, 0))).as_dict() == {3: 4}
    assert histogram(path3).as_dict() == {1: 2, 2: 1}


def test_histogram_rejects_weighted():
    with pytest.raises(ValueError, match="non-integer"):
        histogram(WeightedGraph.from_edges(2, [(1, 2, 0.5)]))


def test_histogram_pa_multiplicity_view():
    tr = generate_pa(PaParams(300, 2, 0.0, 1))
    h = histogram(tr.graph)
    assert h.n == 300
    assert h.mean() == 4.0
    assert h.pmf().sum() == pytest.approx(1.0)
    assert h.tail_counts()[0] == 300
    assert h.tail_counts()[2] == 300  # every degree is at least m


def test_histogram_moments():
    h = DegreeHistogram.from_degrees([1, 1, 2, 4])
    assert h.mean() == 2.0
    assert h.variance() == pytest.approx(1.5)
    np.testing.assert_array_equal(h.tail_counts(), [4, 4, 2, 1, 1])
    np.testing.assert_allclose(h.ccdf(), [1, 1, 0.5, 0.25, 0.25])


def test_fit_synthetic_power_law():
    x = sample_power_law(3.0, 5, 10 ** 5, seed=1)
    fit = fit_power_law(DegreeHistogram.from_degrees(x), 5)
    assert abs(fit.tau - 3.0) < 0.05
    assert fit.n_tail == 10 ** 5 and fit.k_min == 5


def test_sample_power_law_matches_law():
    x = sample_power_law(3.0, 5, 10 ** 5, seed=2)
    from scipy.special import zeta
    assert np.mean(x == 5) == pytest.approx(5.0 ** -3 / zeta(3.0, 5), abs=0.005)


def test_fit_errors():
    with pytest.raises(ValueError, match="empty tail"):
        fit_power_law(histogram(WeightedGraph(3)))
    with pytest.raises(ValueError, match="empty tail"):
        fit_power_law(DegreeHistogram.from_degrees([1, 2, 3]), k_min=3)
    with pytest.raises(ValueError, match="degenerate"):
        fit_power_law(DegreeHistogram.from_degrees([2, 2, 2]))


def test_fit_default_kmin():
    fit = fit_power_law(DegreeHistogram.from_degrees([0, 0, 1, 1, 1, 4]))
    assert fit.k_min == 1 and fit.n_tail == 4
    expected = 1 + 4 / (3 * np.log(2.0) + np.log(8.0))
    assert fit.tau == pytest.approx(expected, rel=1e-14)


def test_binomial_pmf_examples():
    assert binomial_pmf(17, 0.0, 0) == 1.0
    assert binomial_pmf(17, 1.0, 17) == 1.0
    l = np.arange(1000)
    assert np.dot(l, binomial_pmf(999, 0.005, l)) == pytest.approx(4.995, rel=1e-12)


def test_binomial_pmf_brute_force():
    n, p = 10, 0.3
    brute = np.zeros(n + 1)
    for outcome in itertools.product((0, 1), repeat=n):
        s = sum(outcome)
        brute[s] += p ** s * (1 - p) ** (n - s)
    np.testing.assert_allclose(binomial_pmf(n, p, np.arange(n + 1)), brute, rtol=1e-12)


def test_binomial_pmf_domain():
    with pytest.raises(ValueError):
        binomial_pmf(5, 1.2, 1)
    with pytest.raises(ValueError):
        binomial_pmf(5, 0.5, 6)
    with pytest.raises(ValueError):
        binomial_pmf(5, 0.5, 1.5)
