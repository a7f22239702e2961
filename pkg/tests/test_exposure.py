import pytest

from chordal_erasure.chordality import is_chordal, simplicial_vertices
from chordal_erasure.errors import NoCycle, NotChordal, NotExposed
from chordal_erasure.exposure import (
    EdgeClass,
    ExposureIndex,
    classify_edges,
    cycle_edges,
    edge_class,
    exposed_cycle,
    exposed_edges,
    incident_exposed_count,
    is_bridge_equiv_facet_check,
    is_exposed,
    is_facet_edge,
)
from chordal_erasure.graph import Graph, complete_graph, cycle_graph, path_graph
from chordal_erasure.oracles import naive_exposed, naive_facet

from conftest import random_chordal, random_graph, small_graphs

TREE = Graph(6, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)])


def test_facet_edges(square):
    assert is_facet_edge(path_graph(3), (0, 1))
    assert not is_facet_edge(complete_graph(3), (0, 1))
    assert not is_facet_edge(square, (1, 3))
    with pytest.raises(ValueError):
        is_facet_edge(path_graph(3), (0, 2))


def test_exposed_edges(square):
    for n in (3, 4, 6):
        assert all(is_exposed(complete_graph(n), e) for e in complete_graph(n).edges())
    assert not is_exposed(path_graph(3), (0, 1))
    assert not is_exposed(square, (1, 3))
    assert all(is_exposed(square, e) for e in [(0, 1), (1, 2), (2, 3), (0, 3)])


def test_classify_examples(square):
    assert set(classify_edges(complete_graph(4)).values()) == {EdgeClass.EXPOSED}
    assert set(classify_edges(cycle_graph(4)).values()) == {EdgeClass.FACET}
    classes = classify_edges(square)
    assert classes[(1, 3)] is EdgeClass.SHARED
    assert sorted(c.value for c in classes.values()).count("exposed") == 4
    assert EdgeClass.FACET not in classes.values()
    assert list(classes) == sorted(classes)


def test_bridge_facet_check():
    assert is_bridge_equiv_facet_check(TREE)
    assert is_bridge_equiv_facet_check(cycle_graph(4))
    for g in random_chordal(100, 10, seed=2):
        assert is_bridge_equiv_facet_check(g)


def test_bridge_implies_facet_on_all_small_graphs():
    for g in small_graphs(5):
        assert is_bridge_equiv_facet_check(g)


def test_exposed_cycle_examples(square):
    assert exposed_cycle(complete_graph(4), (0, 1)) == (0, 1, 2)
    assert exposed_cycle(complete_graph(3), (0, 1)) == (0, 1, 2)
    cycle = exposed_cycle(square, (0, 1))
    assert cycle == (0, 1, 2, 3)
    assert (1, 3) not in cycle_edges(cycle)


def test_exposed_cycle_errors(square):
    with pytest.raises(NotExposed) as info:
        exposed_cycle(square, (1, 3))
    assert info.value.kind == "shared"
    with pytest.raises(NotExposed):
        exposed_cycle(path_graph(3), (0, 1))
    with pytest.raises(NotChordal):
        exposed_cycle(cycle_graph(4), (0, 1))


def test_no_cycle_reachable_for_non_chordal_input():
    # smallest example found by scanning all graphs on six vertices
    h = Graph(6, [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4)])
    assert not is_chordal(h) and is_exposed(h, (0, 5))
    with pytest.raises(NoCycle):
        exposed_cycle(h, (0, 5), check_chordal=False)


def test_incident_exposed_count(square):
    assert [incident_exposed_count(complete_graph(4), v) for v in range(4)] == [3, 3, 3, 3]
    assert [incident_exposed_count(path_graph(3), v) for v in range(3)] == [0, 0, 0]
    assert incident_exposed_count(square, 1) == 2
    assert incident_exposed_count(square, 3) == 2


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_lemma_matches_clique_definition_exhaustively(n):
    for g in small_graphs(n):
        for e in g.edges():
            assert is_exposed(g, e) == naive_exposed(g, e)
            assert is_facet_edge(g, e) == naive_facet(g, e)


def test_simplicial_edges_exposed_without_facets():
    for g in random_chordal(200, 10, seed=21):
        classes = classify_edges(g)
        if EdgeClass.FACET in classes.values():
            continue
        for v in simplicial_vertices(g):
            assert all(is_exposed(g, (v, w)) for w in g.neighbors(v))


def test_not_exposed_payload():
    with pytest.raises(NotExposed) as info:
        ExposureIndex(path_graph(3)).erase((0, 1))
    assert info.value.kind == "facet"


@pytest.mark.parametrize("seed", range(20))
def test_incremental_index_matches_full_classification(seed):
    import random

    rng = random.Random(seed)
    g = random_graph(rng.randint(3, 11), rng.uniform(0.4, 1.0), seed)
    index = ExposureIndex(g)
    while index.exposed:
        e = rng.choice(sorted(index.exposed))
        index.erase(e)
        assert index.classes == classify_edges(index.graph)
        assert index.exposed == set(exposed_edges(index.graph))


def test_edge_class_requires_edge():
    with pytest.raises(ValueError):
        edge_class(path_graph(3), (0, 2))
