"""Erasure sequences: descent from the complete graph and reduction to trees."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Optional

from .chordality import is_chordal, is_perfect_elimination_ordering, maximum_cardinality_search
from .errors import AlreadyComplete, NotChordal, NotConnected, NotExposed
from .exposure import EdgeClass, ExposureIndex, edge_class
from .graph import Edge, Graph, complete_graph, is_connected

Picker = Callable[[Graph, "set[Edge]"], Edge]


@dataclass(frozen=True)
class ErasureTrace:
    """A start graph and the edges erased from it, in order."""

    initial: Graph
    erased: tuple[Edge, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "erased", tuple(Edge(*e) for e in self.erased))

    def __len__(self) -> int:
        return len(self.erased)

    def graphs(self) -> Iterator[Graph]:
        """Yield ``G_0, ..., G_m``. Raises ``ValueError`` on a missing edge."""
        g = self.initial
        yield g
        for e in self.erased:
            g = g.remove_edge(*e)
            yield g

    @property
    def final(self) -> Graph:
        g = self.initial
        for e in self.erased:
            g = g.remove_edge(*e)
        return g


@dataclass(frozen=True)
class TraceVerdict:
    ok: bool
    step: Optional[int] = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _require_connected_chordal(g: Graph) -> None:
    if not is_connected(g):
        raise NotConnected("graph is not connected")
    if not is_chordal(g):
        raise NotChordal("graph is not chordal")


def erase(g: Graph, e: Iterable[int]) -> Graph:
    e = Edge(*e)
    if not g.has_edge(*e):
        raise NotExposed(e, "missing")
    cls = edge_class(g, e)
    if cls is not EdgeClass.EXPOSED:
        raise NotExposed(e, cls.value)
    return g.remove_edge(*e)


def extension_step(g: Graph) -> tuple[Graph, Edge]:
    """Add one edge to a connected chordal graph so that it is exposed.

    With ``v_1..v_k`` the search ordering, ``l`` is the largest index such
    that every suffix graph after ``l`` is complete, and ``j`` the smallest
    later index with ``v_l v_j`` missing. The same ordering stays a perfect
    elimination ordering of the enlarged graph.
    """
    if g.is_complete():
        raise AlreadyComplete("graph is already complete")
    _require_connected_chordal(g)
    order = maximum_cardinality_search(g)
    k = len(order)
    # smallest s with the suffix order[s:] a clique
    s = k - 1
    while s > 0 and all(order[t] in g.neighbors(order[s - 1]) for t in range(s, k)):
        s -= 1
    ell = s - 1
    v_l = order[ell]
    j = next(t for t in range(s, k) if order[t] not in g.neighbors(v_l))
    e = Edge(v_l, order[j])
    bigger = g.add_edge(*e)
    assert is_perfect_elimination_ordering(bigger, order)
    assert edge_class(bigger, e) is EdgeClass.EXPOSED
    return bigger, e


def erasure_sequence_from_complete(h: Graph) -> ErasureTrace:
    """Trace from ``K_n`` down to ``h``; exists only for connected chordal ``h``."""
    _require_connected_chordal(h)
    added = []
    g = h
    while not g.is_complete():
        g, e = extension_step(g)
        added.append(e)
    return ErasureTrace(complete_graph(h.n), tuple(reversed(added)))


def lexicographic_picker(g: Graph, exposed: set[Edge]) -> Edge:
    return min(exposed)


def run_erasures(
    g: Graph, picker: Picker = lexicographic_picker, incremental: bool = True
) -> ErasureTrace:
    """Erase picker-chosen exposed edges until none remain."""
    index = ExposureIndex(g, incremental=incremental)
    erased = []
    while index.exposed:
        e = Edge(*picker(index.graph, index.exposed))
        index.erase(e)
        erased.append(e)
    return ErasureTrace(g, tuple(erased))


def erase_to_tree(g: Graph, picker: Picker = lexicographic_picker) -> ErasureTrace:
    _require_connected_chordal(g)
    return run_erasures(g, picker)


def verify_trace(trace: ErasureTrace) -> TraceVerdict:
    """Check every step erases an exposed edge of a connected chordal graph.

    Step ``j`` refers to erasing ``trace.erased[j]`` from ``G_j``; a final
    graph failure is reported as step ``m``.
    """
    g = trace.initial
    for j, e in enumerate(trace.erased):
        verdict = _check_prefix(g, j)
        if not verdict:
            return verdict
        if not g.has_edge(*e):
            return TraceVerdict(False, j, f"{tuple(e)} is not an edge of G_{j}")
        cls = edge_class(g, e)
        if cls is not EdgeClass.EXPOSED:
            return TraceVerdict(False, j, f"{tuple(e)} is {cls.value}, not exposed, in G_{j}")
        g = g.remove_edge(*e)
    return _check_prefix(g, len(trace.erased))


def _check_prefix(g: Graph, j: int) -> TraceVerdict:
    if not is_connected(g):
        return TraceVerdict(False, j, f"G_{j} is not connected")
    if not is_chordal(g):
        return TraceVerdict(False, j, f"G_{j} is not chordal")
    return TraceVerdict(True)
