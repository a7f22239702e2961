import random
from fractions import Fraction

import pytest

from chordal_erasure.errors import SizeLimitExceeded
from chordal_erasure.graph import Graph, complete_graph, cycle_graph, path_graph
from chordal_erasure.oracles import (
    GRAPH_LIMIT_ENV,
    brute_force_chordal,
    enumerate_all_msts,
    enumerate_maximal_cliques,
    enumerate_spanning_trees,
    find_induced_cycle,
    naive_exposed,
)
from chordal_erasure.weighted import MetricSpace, l1_square, random_metric, uniform_metric


def test_maximal_cliques():
    assert enumerate_maximal_cliques(complete_graph(4)) == [(0, 1, 2, 3)]
    assert enumerate_maximal_cliques(path_graph(3)) == [(0, 1), (1, 2)]
    assert enumerate_maximal_cliques(cycle_graph(4).add_edge(0, 2)) == [(0, 1, 2), (0, 2, 3)]
    assert enumerate_maximal_cliques(Graph(2)) == [(0,), (1,)]


def test_brute_force_chordal():
    assert not brute_force_chordal(cycle_graph(4))
    assert brute_force_chordal(complete_graph(4))
    assert not brute_force_chordal(cycle_graph(5).add_edge(0, 2))
    assert find_induced_cycle(cycle_graph(5).add_edge(0, 2)) == (0, 2, 3, 4)
    assert find_induced_cycle(cycle_graph(4)) == (0, 1, 2, 3)


def test_naive_exposed(square):
    assert naive_exposed(complete_graph(4), (0, 1))
    assert not naive_exposed(path_graph(3), (0, 1))
    assert not naive_exposed(square, (1, 3))


def test_spanning_tree_count_matches_cayley():
    for n in range(1, 7):
        trees = list(enumerate_spanning_trees(n))
        assert len(trees) == max(1, n ** (n - 2))
        assert len(set(map(tuple, trees))) == len(trees)


def test_all_msts_of_square():
    trees = enumerate_all_msts(l1_square())
    assert len(trees) == 4
    assert all(t.weight == 3 for t in trees)
    assert all(not {(0, 2), (1, 3)} & t.edges for t in trees)


def test_all_msts_small_cases():
    assert len(enumerate_all_msts(uniform_metric(3))) == 3
    (only,) = enumerate_all_msts(MetricSpace(2, {(0, 1): 4}))
    assert only.edges == {(0, 1)} and only.weight == 4
    assert len(enumerate_all_msts(uniform_metric(5))) == 125


@pytest.mark.parametrize("seed", range(15))
def test_pruned_mst_search_matches_prufer_enumeration(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 6)
    m = random_metric(n, seed, kind=rng.choice(["generic", "integer"]))
    weights = {}
    for tree in enumerate_spanning_trees(n):
        weights[tuple(tree)] = sum((m.d(u, v) for u, v in tree), Fraction(0))
    best = min(weights.values())
    expected = sorted(t for t, w in weights.items() if w == best)
    got = [tuple(sorted(t.edges)) for t in enumerate_all_msts(m)]
    assert got == expected


def test_size_limits(monkeypatch):
    monkeypatch.setenv(GRAPH_LIMIT_ENV, "4")
    with pytest.raises(SizeLimitExceeded):
        enumerate_maximal_cliques(complete_graph(5))
    with pytest.raises(SizeLimitExceeded):
        enumerate_all_msts(uniform_metric(10))
