import numpy as np
import pytest
from scipy import stats

from graphlab import (ErParams, PaParams, binomial_pmf, chisquare_gof, generate_er, generate_pa,
                      is_connected)


def test_er_extremes():
    assert generate_er(ErParams(5, 0.0, 3)).num_edges == 0
    k5 = generate_er(ErParams(5, 1.0, 3))
    assert k5.num_edges == 10
    assert not k5.has_self_loops
    assert np.all(k5.degrees() == 4)


def test_er_param_validation():
    with pytest.raises(ValueError):
        ErParams(0, 0.5)
    with pytest.raises(ValueError):
        ErParams(5, 1.5)


def test_er_determinism():
    a = generate_er(ErParams(500, 0.02, 99))
    b = generate_er(ErParams(500, 0.02, 99))
    c = generate_er(ErParams(500, 0.02, 100))
    assert a.same_edges(b)
    assert not a.same_edges(c)


def test_er_mean_degree_near_expected_value():
    means = [generate_er(ErParams(1000, 0.01, s)).degrees().mean() for s in range(30)]
    # per-graph mean degree has variance 2 p (1 - p) (n - 1) / n
    sd = np.sqrt(2 * 0.01 * 0.99 * 999 / 1000 / len(means))
    assert abs(np.mean(means) - 9.99) < 3 * sd


def test_er_edge_count_is_binomial():
    n, p = 30, 0.2
    pairs = n * (n - 1) // 2
    counts = np.array([generate_er(ErParams(n, p, s)).num_edges for s in range(400)])
    obs = np.bincount(counts, minlength=pairs + 1)
    _, _, pval = chisquare_gof(obs, binomial_pmf(pairs, p, np.arange(pairs + 1)))
    assert pval > 0.001


def test_er_node_degree_marginal():
    n, p = 50, 0.1
    d1 = np.array([generate_er(ErParams(n, p, s)).degrees()[0] for s in range(500)]).astype(int)
    obs = np.bincount(d1, minlength=n)
    _, _, pval = chisquare_gof(obs, binomial_pmf(n - 1, p, np.arange(n)))
    assert pval > 0.001


def test_er_pairs_uniformly_covered():
    # geometric skipping must not favour any position in the pair order
    n, p, reps = 6, 0.3, 3000
    freq = np.zeros((n, n))
    for s in range(reps):
        g = generate_er(ErParams(n, p, s))
        freq[g.src - 1, g.dst - 1] += 1
    iu = np.triu_indices(n, 1)
    hits = freq[iu]
    z = (hits - reps * p) / np.sqrt(reps * p * (1 - p))
    assert np.all(np.abs(z) < 4)
    assert stats.chisquare(np.concatenate([hits, reps - hits]),
                           np.concatenate([np.full(hits.size, reps * p),
                                           np.full(hits.size, reps * (1 - p))])).pvalue > 0.001


def test_pa_single_node():
    tr = generate_pa(PaParams(1, 3, 0.5, 0))
    assert tr.graph.n == 1
    assert tr.graph.edge_multiset() == [(1, 1, 3.0)]
    assert tr.degrees.tolist() == [6]


def test_pa_second_node_attaches_to_first():
    for s in range(20):
        g = generate_pa(PaParams(2, 1, 0.0, s)).graph
        assert g.edge_multiset() == [(1, 1, 1.0), (1, 2, 1.0)]


@pytest.mark.parametrize("m, delta", [(1, 0.0), (2, 0.0), (3, -2.5), (2, 10.0)])
def test_pa_structure(m, delta):
    for s in range(5):
        tr = generate_pa(PaParams(300, m, delta, s))
        g = tr.graph
        assert g.degrees().sum() == 2 * m * 300
        loops = g.src == g.dst
        assert g.edge_multiset()[0] == (1, 1, float(m))
        assert loops.sum() == 1
        assert is_connected(tr.stripped())
        # node t > 1 sends m edges to lower ids
        out = np.bincount(np.maximum(g.src, g.dst)[~loops] - 1, weights=g.weight[~loops],
                          minlength=300)
        assert np.all(out[1:] == m)


def test_pa_param_validation():
    with pytest.raises(ValueError):
        PaParams(10, 0, 0.0)
    with pytest.raises(ValueError):
        PaParams(10, 2, -2.0)


def test_pa_history_sums():
    n, m = 60, 2
    tr = generate_pa(PaParams(n, m, 0.7, 5), track=range(1, n + 1))
    totals = np.zeros(n + 1)
    for t, i, d in tr.history_rows():
        totals[t] += d
    assert np.all(totals[1:] == 2 * m * np.arange(1, n + 1))
    final = {i: h[-1] for i, h in tr.degree_history.items()}
    assert [final[i] for i in range(1, n + 1)] == tr.degrees.tolist()
    for i, h in tr.degree_history.items():
        assert h[0] == (2 * m if i == 1 else m)
        assert np.all(np.diff(h) >= 0)


def test_pa_attachment_probability_third_node():
    # at t = 2 node 1 has degree 3, node 2 degree 1 (m = 1); node 3 picks node 1
    # with probability (3 + delta) / ((2 + delta) * 2)
    delta = 0.5
    reps = 4000
    hits = sum(generate_pa(PaParams(3, 1, delta, s)).degrees[0] == 4 for s in range(reps))
    p = (3 + delta) / ((2 + delta) * 2)
    assert stats.binomtest(int(hits), reps, p).pvalue > 0.001


def test_pa_determinism():
    a = generate_pa(PaParams(500, 2, 0.0, 42)).graph
    b = generate_pa(PaParams(500, 2, 0.0, 42)).graph
    assert a.same_edges(b)
