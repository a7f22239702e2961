"""Immutable undirected simple graphs on dense integer vertex ids."""

from __future__ import annotations

from collections import deque
from typing import Iterable


class Edge(tuple):
    """An undirected edge stored canonically as ``(u, v)`` with ``u < v``."""

    __slots__ = ()

    def __new__(cls, u: int, v: int) -> "Edge":
        u, v = int(u), int(v)
        if u == v:
            raise ValueError(f"loop at vertex {u} is not an edge")
        if u > v:
            u, v = v, u
        return tuple.__new__(cls, (u, v))

    @property
    def u(self) -> int:
        return self[0]

    @property
    def v(self) -> int:
        return self[1]

    def __repr__(self) -> str:
        return f"Edge({self[0]}, {self[1]})"


class Graph:
    """Undirected simple graph with vertices ``0..n-1``.

    Instances are treated as values: ``add_edge`` and ``remove_edge``
    return new graphs and share the untouched neighbor sets with the
    original.
    """

    __slots__ = ("_n", "_adj", "_m")

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj: list[set[int]] = [set() for _ in range(n)]
        for pair in edges:
            u, v = Edge(*pair)
            if v >= n:
                raise ValueError(f"edge {(u, v)} out of range for n={n}")
            adj[u].add(v)
            adj[v].add(u)
        self._n = n
        self._adj = tuple(frozenset(s) for s in adj)
        self._m = sum(len(s) for s in adj) // 2

    @classmethod
    def _from_adjacency(cls, adj: tuple[frozenset[int], ...], m: int) -> "Graph":
        g = cls.__new__(cls)
        g._n = len(adj)
        g._adj = adj
        g._m = m
        return g

    @property
    def n(self) -> int:
        return self._n

    @property
    def num_edges(self) -> int:
        return self._m

    def vertices(self) -> range:
        return range(self._n)

    def _check(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise IndexError(f"vertex {v} out of range for n={self._n}")

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return v in self._adj[u]

    def edges(self) -> list[Edge]:
        """All edges in canonical (lexicographic) order."""
        return [Edge(u, v) for u in range(self._n) for v in sorted(self._adj[u]) if u < v]

    def neighbors(self, v: int) -> frozenset[int]:
        self._check(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def is_complete(self) -> bool:
        return self._m == self._n * (self._n - 1) // 2

    def add_edge(self, u: int, v: int) -> "Graph":
        e = Edge(u, v)
        self._check(e.v)
        if e.v in self._adj[e.u]:
            return self
        adj = list(self._adj)
        adj[e.u] = adj[e.u] | {e.v}
        adj[e.v] = adj[e.v] | {e.u}
        return Graph._from_adjacency(tuple(adj), self._m + 1)

    def remove_edge(self, u: int, v: int) -> "Graph":
        e = Edge(u, v)
        self._check(e.v)
        if e.v not in self._adj[e.u]:
            raise ValueError(f"{tuple(e)} is not an edge")
        adj = list(self._adj)
        adj[e.u] = adj[e.u] - {e.v}
        adj[e.v] = adj[e.v] - {e.u}
        return Graph._from_adjacency(tuple(adj), self._m - 1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        return hash(self._adj)

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={[tuple(e) for e in self.edges()]})"


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs at least one vertex")
    adj = tuple(frozenset(range(n)) - {v} for v in range(n))
    return Graph._from_adjacency(adj, n * (n - 1) // 2)


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least three vertices")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def open_neighborhood(g: Graph, v: int) -> frozenset[int]:
    return g.neighbors(v)


def closed_neighborhood(g: Graph, v: int) -> frozenset[int]:
    return g.neighbors(v) | {v}


def common_neighborhood(g: Graph, u: int, v: int) -> frozenset[int]:
    """Vertices adjacent to both ``u`` and ``v``; ``uv`` need not be an edge."""
    if u == v:
        raise ValueError("common neighborhood needs two distinct vertices")
    return g.neighbors(u) & g.neighbors(v)


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    """True iff every pair in ``vertices`` is adjacent. Empty sets are cliques."""
    s = frozenset(vertices)
    for v in s:
        g._check(v)
    for v in s:
        if not s <= g._adj[v] | {v}:
            return False
    return True


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Return ``G[A]`` relabeled to ``0..|A|-1`` plus the new-to-old id list.

    New ids follow increasing old ids, so ``mapping[new] == old``.
    """
    mapping = sorted(set(vertices))
    for v in mapping:
        g._check(v)
    index = {old: new for new, old in enumerate(mapping)}
    edges = [
        (index[u], index[w]) for u in mapping for w in g.neighbors(u) if u < w and w in index
    ]
    return Graph(len(mapping), edges), mapping


def _component_from(g: Graph, start: int, skip: Edge | None = None) -> set[int]:
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in g.neighbors(x):
            if y in seen:
                continue
            if skip is not None and (x, y) in (skip, skip[::-1]):
                continue
            seen.add(y)
            queue.append(y)
    return seen


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Components ordered by their smallest vertex."""
    seen: set[int] = set()
    out = []
    for v in g.vertices():
        if v not in seen:
            comp = _component_from(g, v)
            seen |= comp
            out.append(frozenset(comp))
    return out


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return len(_component_from(g, 0)) == g.n


def is_bridge(g: Graph, e: Iterable[int]) -> bool:
    e = Edge(*e)
    if not g.has_edge(*e):
        raise ValueError(f"{tuple(e)} is not an edge")
    return e.v not in _component_from(g, e.u, skip=e)


def is_tree(g: Graph) -> bool:
    return g.num_edges == g.n - 1 and is_connected(g)

