"""Facet, exposed and shared edges, and cycles of exposed edges.

An edge ``uv`` is classified by its common neighborhood ``C = N(u) & N(v)``:
empty means the edge is a maximal clique by itself (facet); a nonempty
clique means exactly one maximal clique properly contains it (exposed);
anything else means it sits in two or more maximal cliques (shared).
"""

from __future__ import annotations

import enum
from collections import deque
from typing import Iterable

from .chordality import is_chordal
from .errors import NoCycle, NotChordal, NotExposed
from .graph import Edge, Graph, common_neighborhood, is_bridge, is_clique

Cycle = tuple[int, ...]


class EdgeClass(str, enum.Enum):
    FACET = "facet"
    EXPOSED = "exposed"
    SHARED = "shared"

    def __str__(self) -> str:
        return self.value


def _require_edge(g: Graph, e: Iterable[int]) -> Edge:
    e = Edge(*e)
    if not g.has_edge(*e):
        raise ValueError(f"{tuple(e)} is not an edge")
    return e


def _classify(adj, closed, u: int, v: int) -> EdgeClass:
    common = adj[u] & adj[v]
    if not common:
        return EdgeClass.FACET
    for x in common:
        if not common <= closed[x]:
            return EdgeClass.SHARED
    return EdgeClass.EXPOSED


def edge_class(g: Graph, e: Iterable[int]) -> EdgeClass:
    e = _require_edge(g, e)
    common = common_neighborhood(g, *e)
    if not common:
        return EdgeClass.FACET
    return EdgeClass.EXPOSED if is_clique(g, common) else EdgeClass.SHARED


def is_facet_edge(g: Graph, e: Iterable[int]) -> bool:
    return edge_class(g, e) is EdgeClass.FACET


def is_exposed(g: Graph, e: Iterable[int]) -> bool:
    return edge_class(g, e) is EdgeClass.EXPOSED


def classify_edges(g: Graph) -> dict[Edge, EdgeClass]:
    """Class of every edge, keyed in canonical edge order."""
    return {e: edge_class(g, e) for e in g.edges()}


def exposed_edges(g: Graph) -> list[Edge]:
    return [e for e, c in classify_edges(g).items() if c is EdgeClass.EXPOSED]


def incident_exposed_count(g: Graph, v: int) -> int:
    return sum(1 for w in g.neighbors(v) if is_exposed(g, (v, w)))


def is_bridge_equiv_facet_check(g: Graph) -> bool:
    """Every bridge is a facet edge and, for chordal graphs, every facet edge is a bridge."""
    chordal = is_chordal(g)
    for e in g.edges():
        bridge = is_bridge(g, e)
        facet = is_facet_edge(g, e)
        if bridge and not facet:
            return False
        if chordal and facet and not bridge:
            return False
    return True


def exposed_cycle(g: Graph, e: Iterable[int], check_chordal: bool = True) -> Cycle:
    """Shortest cycle through ``e`` that uses exposed edges only.

    The cycle is returned as ``(u, v, ..., )`` starting with the edge's
    endpoints; it closes back to ``u``. Breadth-first search from ``v`` to
    ``u`` in the exposed subgraph minus ``e``, visiting neighbors in
    increasing id order, fixes the result.
    """
    e = _require_edge(g, e)
    if check_chordal and not is_chordal(g):
        raise NotChordal("exposed cycles are only guaranteed in chordal graphs")
    cls = edge_class(g, e)
    if cls is not EdgeClass.EXPOSED:
        raise NotExposed(e, cls.value)
    exposed_adj: dict[int, list[int]] = {}
    for f in exposed_edges(g):
        if f == e:
            continue
        exposed_adj.setdefault(f.u, []).append(f.v)
        exposed_adj.setdefault(f.v, []).append(f.u)
    u, v = e
    parent = {v: v}
    queue = deque([v])
    while queue and u not in parent:
        x = queue.popleft()
        for y in sorted(exposed_adj.get(x, ())):
            if y not in parent:
                parent[y] = x
                queue.append(y)
    if u not in parent:
        raise NoCycle(f"no cycle of exposed edges through {tuple(e)}")
    path = [u]
    while path[-1] != v:
        path.append(parent[path[-1]])
    # path runs u -> ... -> v; the cycle is u, v, then back toward u
    return (u, v) + tuple(reversed(path[1:-1]))


def cycle_edges(cycle: Cycle) -> list[Edge]:
    k = len(cycle)
    return [Edge(cycle[i], cycle[(i + 1) % k]) for i in range(k)]


class ExposureIndex:
    """Edge classes of a graph kept current under successive erasures.

    Erasing ``uv`` can only change edges inside ``W + {u, v}`` where ``W``
    is the common neighborhood of ``u`` and ``v`` before the erasure:
    edges ``uy``/``vy`` with ``y`` in ``W`` lose a common neighbor, and
    exposed edges with both ends in ``W`` now see the non-adjacent pair
    ``u, v`` in their common neighborhood and become shared. With
    ``incremental=False`` every edge is reclassified after each erasure,
    which is the reference behaviour the incremental path must match.
    """

    def __init__(self, g: Graph, incremental: bool = True):
        self.graph = g
        self.incremental = incremental
        self.classes: dict[Edge, EdgeClass] = {}
        self.exposed: set[Edge] = set()
        self._exposed_adj: list[set[int]] = [set() for _ in g.vertices()]
        self._rebuild()

    def _set(self, e: Edge, cls: EdgeClass) -> None:
        old = self.classes.get(e)
        self.classes[e] = cls
        if old is EdgeClass.EXPOSED and cls is not EdgeClass.EXPOSED:
            self.exposed.discard(e)
            self._exposed_adj[e.u].discard(e.v)
            self._exposed_adj[e.v].discard(e.u)
        elif cls is EdgeClass.EXPOSED and old is not EdgeClass.EXPOSED:
            self.exposed.add(e)
            self._exposed_adj[e.u].add(e.v)
            self._exposed_adj[e.v].add(e.u)

    def _rebuild(self) -> None:
        adj = self.graph._adj
        self._closed = [adj[v] | {v} for v in self.graph.vertices()]
        self.classes.clear()
        self.exposed.clear()
        for s in self._exposed_adj:
            s.clear()
        for e in self.graph.edges():
            self._set(e, _classify(adj, self._closed, *e))

    def erase(self, e: Iterable[int]) -> Graph:
        e = Edge(*e)
        cls = self.classes.get(e)
        if cls is not EdgeClass.EXPOSED:
            raise NotExposed(e, cls.value if cls else "missing")
        u, v = e
        old_adj = self.graph._adj
        w = old_adj[u] & old_adj[v]
        self.graph = self.graph.remove_edge(u, v)
        self._set(e, EdgeClass.FACET)
        del self.classes[e]
        if not self.incremental:
            self._rebuild()
            return self.graph
        adj = self.graph._adj
        closed = self._closed
        closed[u] = adj[u] | {u}
        closed[v] = adj[v] | {v}
        for x in w:
            for y in self._exposed_adj[x] & w:
                if x < y:
                    self._set(Edge(x, y), EdgeClass.SHARED)
        for y in w:
            for end in (u, v):
                f = Edge(end, y)
                if self.classes[f] is EdgeClass.EXPOSED:
                    # a subset of a clique is still a clique
                    if not adj[end] & adj[y]:
                        self._set(f, EdgeClass.FACET)
                else:
                    self._set(f, _classify(adj, closed, end, y))
        return self.graph
