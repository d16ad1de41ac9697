import itertools
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from bncm.blossom import matching_size, max_matching
from bncm.bottleneck import (candidate_thresholds, max_matching_size, pairwise_dist2,
                             solve_bottleneck, threshold_graph, ThresholdGraph)
from bncm.errors import DuplicatePoints, OddCardinality
from bncm.matching import bottleneck2, is_perfect
from bncm.oracle import exact_bottleneck_bruteforce

from conftest import unit_square


def graph(n, edges):
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return ThresholdGraph(n, adj, math.nan)


def brute_max_matching(n, edges):
    for r in range(len(edges), 0, -1):
        for sub in itertools.combinations(edges, r):
            vs = [v for e in sub for v in e]
            if len(set(vs)) == len(vs):
                return r
    return 0


@pytest.mark.parametrize("pts,expected", [
    (unit_square(), [1, 2]),
    ([(0, 0), (1, 0), (2, 0), (3, 0)], [1, 4, 9]),
    ([(0, 0), (3, 4)], [25]),
])
def test_candidate_thresholds(pts, expected):
    assert candidate_thresholds(np.array(pts, dtype=float)).tolist() == expected


@pytest.mark.parametrize("n,edges,expected", [
    (4, [(0, 1), (2, 3)], 2),
    (4, [(0, 1), (1, 2), (0, 2)], 1),
    (6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)], 3),
])
def test_max_matching_size_examples(n, edges, expected):
    size, mate = max_matching_size(graph(n, edges))
    assert size == expected == brute_max_matching(n, edges)
    assert all(mate[mate[v]] == v for v in range(n) if mate[v] >= 0)


@given(st.integers(2, 9), st.data())
def test_blossom_matches_brute_force(n, data):
    all_edges = list(itertools.combinations(range(n), 2))
    edges = data.draw(st.lists(st.sampled_from(all_edges), unique=True, max_size=12))
    g = graph(n, edges)
    mate = max_matching(g.adj)
    es = set(map(frozenset, edges))
    assert all(frozenset((v, mate[v])) in es for v in range(n) if mate[v] >= 0)
    assert matching_size(mate) == brute_max_matching(n, edges)


def test_blossom_warm_start_keeps_maximality():
    rng = np.random.default_rng(3)
    for _ in range(50):
        n = int(rng.integers(4, 30))
        edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.2]
        g = graph(n, edges)
        cold = matching_size(max_matching(g.adj))
        seed_mate = max_matching(graph(n, edges[: len(edges) // 2]).adj)
        assert matching_size(max_matching(g.adj, list(seed_mate))) == cold


@pytest.mark.parametrize("pts,bn", [
    (unit_square(), 1.0),
    ([(0, 0), (1, 0), (2, 0), (3, 0)], 1.0),
    ([(0, 0), (3, 4)], 5.0),
])
def test_solve_bottleneck_examples(pts, bn):
    m, got = solve_bottleneck(pts)
    assert got == bn
    assert is_perfect(m, np.array(pts, dtype=float))


def test_solve_bottleneck_collinear_witness():
    m, _ = solve_bottleneck([(0, 0), (1, 0), (2, 0), (3, 0)])
    assert m.pairs == ((0, 1), (2, 3))


@pytest.mark.parametrize("pts,err", [([(0, 0), (1, 1), (2, 2)], OddCardinality),
                                     ([(0, 0), (0, 0)], DuplicatePoints)])
def test_solve_bottleneck_errors(pts, err):
    with pytest.raises(err):
        solve_bottleneck(pts)


@given(st.integers(1, 5), st.integers(0, 2**32 - 1))
def test_solve_bottleneck_matches_brute_force(k, seed):
    pts = np.random.default_rng(seed).random((2 * k, 2))
    m, bn = solve_bottleneck(pts)
    _, ref = exact_bottleneck_bruteforce(pts)
    assert bn == ref
    assert bottleneck2(m, pts) in set(candidate_thresholds(pts).tolist())


def test_feasibility_is_monotone():
    pts = np.random.default_rng(11).random((16, 2))
    d2 = pairwise_dist2(pts)
    sizes = [max_matching_size(threshold_graph(d2, t))[0] for t in candidate_thresholds(pts)]
    assert sizes == sorted(sizes)
    assert sizes[-1] == 8


def test_blossom_agrees_with_networkx():
    nx = pytest.importorskip("networkx")
    rng = np.random.default_rng(17)
    for _ in range(60):
        n = int(rng.integers(10, 70))
        p = float(rng.uniform(0.03, 0.3))
        edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
        G = nx.Graph()
        G.add_nodes_from(range(n))
        G.add_edges_from(edges)
        ref = len(nx.max_weight_matching(G, maxcardinality=True))
        assert matching_size(max_matching(graph(n, edges).adj)) == ref
