import math

import pytest

from chordal_erasure.chordality import is_chordal, is_perfect_elimination_ordering, maximum_cardinality_search
from chordal_erasure.erasure import (
    ErasureTrace,
    erase,
    erase_to_tree,
    erasure_sequence_from_complete,
    extension_step,
    run_erasures,
    verify_trace,
)
from chordal_erasure.errors import AlreadyComplete, NotChordal, NotConnected, NotExposed
from chordal_erasure.exposure import classify_edges, exposed_edges, is_bridge, is_exposed, is_facet_edge
from chordal_erasure.graph import Graph, complete_graph, cycle_graph, is_connected, is_tree, path_graph

from conftest import random_chordal


def test_erase_examples():
    assert erase(complete_graph(3), (0, 1)).edges() == [(0, 2), (1, 2)]
    g = erase(complete_graph(4), (0, 1))
    assert g.num_edges == 5 and is_chordal(g) and is_connected(g)
    with pytest.raises(NotExposed) as info:
        erase(path_graph(4), (1, 2))
    assert info.value.kind == "facet"


def test_erase_shared_edge_reports_shared(square):
    with pytest.raises(NotExposed) as info:
        erase(square, (1, 3))
    assert info.value.kind == "shared"


def test_extension_step_examples():
    g, e = extension_step(path_graph(3))
    assert g == complete_graph(3) and e == (0, 2)
    assert is_exposed(g, e)
    g, e = extension_step(complete_graph(4).remove_edge(1, 3))
    assert g == complete_graph(4) and e == (1, 3)


def test_extension_step_errors():
    with pytest.raises(AlreadyComplete):
        extension_step(complete_graph(3))
    with pytest.raises(NotChordal):
        extension_step(cycle_graph(4))
    with pytest.raises(NotConnected):
        extension_step(Graph(3, [(0, 1)]))


def test_extension_step_on_random_graphs_keeps_old_ordering():
    for h in random_chordal(150, 10, seed=5):
        if h.is_complete():
            continue
        order = maximum_cardinality_search(h)
        g, e = extension_step(h)
        assert g.num_edges == h.num_edges + 1 and not h.has_edge(*e)
        assert is_chordal(g) and is_exposed(g, e)
        assert is_perfect_elimination_ordering(g, order)


def test_sequence_from_complete_examples():
    assert erasure_sequence_from_complete(complete_graph(5)).erased == ()
    trace = erasure_sequence_from_complete(path_graph(3))
    assert trace.initial == complete_graph(3) and len(trace) == 1
    assert trace.final == path_graph(3)
    with pytest.raises(NotChordal):
        erasure_sequence_from_complete(cycle_graph(4))
    with pytest.raises(NotConnected):
        erasure_sequence_from_complete(Graph(4, [(0, 1), (2, 3)]))


def test_sequence_from_complete_round_trip():
    for h in random_chordal(100, 10, seed=6):
        trace = erasure_sequence_from_complete(h)
        assert len(trace) == math.comb(h.n, 2) - h.num_edges
        assert verify_trace(trace)
        g = trace.initial
        for e in trace.erased:
            g = erase(g, e)
        assert g == h


def test_erase_to_tree_examples():
    tree = Graph(5, [(0, 1), (1, 2), (1, 3), (3, 4)])
    assert erase_to_tree(tree).erased == ()
    trace = erase_to_tree(complete_graph(3))
    assert trace.erased == ((0, 1),) and trace.final.num_edges == 2
    trace = erase_to_tree(complete_graph(4))
    assert len(trace) == 3 and is_tree(trace.final)
    with pytest.raises(NotChordal):
        erase_to_tree(cycle_graph(5))


def test_erase_to_tree_final_graph():
    for g in random_chordal(150, 12, seed=8):
        final = erase_to_tree(g).final
        assert final.num_edges == g.n - 1 and is_connected(final)
        assert all(is_facet_edge(final, e) and is_bridge(final, e) for e in final.edges())


def test_custom_picker_is_used():
    trace = erase_to_tree(complete_graph(4), picker=lambda g, exposed: max(exposed))
    assert trace.erased[0] == (2, 3)
    assert verify_trace(trace)


@pytest.mark.parametrize("n", range(2, 11))
def test_tree_reduction_length(n):
    assert len(erase_to_tree(complete_graph(n))) == math.comb(n - 1, 2)


def test_verify_trace_examples():
    h = next(random_chordal(1, 9, seed=41, n_min=9))
    assert verify_trace(erasure_sequence_from_complete(h))
    bad = verify_trace(ErasureTrace(path_graph(3), ((0, 1),)))
    assert not bad and bad.step == 0 and "facet" in bad.reason
    assert verify_trace(ErasureTrace(complete_graph(4).remove_edge(0, 2), ()))
    missing = verify_trace(ErasureTrace(path_graph(3), ((0, 2),)))
    assert not missing and missing.step == 0
    assert not verify_trace(ErasureTrace(cycle_graph(4), ()))


def test_verify_trace_reports_first_failure():
    trace = ErasureTrace(complete_graph(4), ((0, 2), (1, 3)))
    verdict = verify_trace(trace)
    assert verdict.step == 1 and "shared" in verdict.reason


def test_erasure_closure():
    for g in random_chordal(100, 9, seed=12):
        for e in exposed_edges(g):
            h = erase(g, e)
            assert is_connected(h) and is_chordal(h)


def test_full_and_incremental_engines_agree():
    for g in random_chordal(60, 12, seed=13):
        a = run_erasures(g, incremental=True)
        b = run_erasures(g, incremental=False)
        assert a == b
        assert classify_edges(a.final) == classify_edges(b.final)
