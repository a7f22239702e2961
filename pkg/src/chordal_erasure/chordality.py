"""Chordal graph recognition, perfect elimination orderings and generators."""

from __future__ import annotations

import heapq
import random
from fractions import Fraction
from typing import Sequence

from .graph import Graph, induced_subgraph, is_clique, is_connected

EliminationOrdering = tuple[int, ...]


def is_simplicial(g: Graph, v: int) -> bool:
    return is_clique(g, g.neighbors(v))


def simplicial_vertices(g: Graph) -> frozenset[int]:
    return frozenset(v for v in g.vertices() if is_simplicial(g, v))


def maximum_cardinality_search(g: Graph) -> EliminationOrdering:
    """Return the reverse of the maximum cardinality search visit order.

    The search repeatedly visits the unvisited vertex with the most visited
    neighbors, lowest id first among ties. Reversing the visit order gives
    a perfect elimination ordering whenever ``g`` is chordal.
    """
    weight = [0] * g.n
    visited = [False] * g.n
    heap = [(0, v) for v in g.vertices()]
    heapq.heapify(heap)
    visit: list[int] = []
    while heap:
        w, v = heapq.heappop(heap)
        if visited[v] or -w != weight[v]:
            continue
        visited[v] = True
        visit.append(v)
        for x in g.neighbors(v):
            if not visited[x]:
                weight[x] += 1
                heapq.heappush(heap, (-weight[x], x))
    visit.reverse()
    return tuple(visit)


def _check_permutation(g: Graph, order: Sequence[int]) -> None:
    if sorted(order) != list(g.vertices()):
        raise ValueError("ordering is not a permutation of the vertex set")


def is_perfect_elimination_ordering(g: Graph, order: Sequence[int]) -> bool:
    """Check each vertex's later neighbors against its earliest later neighbor.

    If ``v``'s later neighbors form a clique, then all of them except the
    earliest one (its parent ``p``) must be later neighbors of ``p``; this
    reduces the check to one subset test per vertex.
    """
    _check_permutation(g, order)
    position = {v: i for i, v in enumerate(order)}
    for i, v in enumerate(order):
        later = [x for x in g.neighbors(v) if position[x] > i]
        if not later:
            continue
        parent = min(later, key=position.__getitem__)
        rest = set(later)
        rest.discard(parent)
        if not rest <= g.neighbors(parent):
            return False
    return True


def is_perfect_elimination_ordering_naive(g: Graph, order: Sequence[int]) -> bool:
    """Definition-level check: ``order[i]`` is simplicial in ``G[order[i:]]``."""
    _check_permutation(g, order)
    for i in range(len(order)):
        sub, mapping = induced_subgraph(g, order[i:])
        if not is_simplicial(sub, mapping.index(order[i])):
            return False
    return True


def is_chordal(g: Graph) -> bool:
    return is_perfect_elimination_ordering(g, maximum_cardinality_search(g))


def failed_peo_vertex(g: Graph, order: Sequence[int]) -> int | None:
    """First vertex of ``order`` that is not simplicial in its suffix, if any."""
    position = {v: i for i, v in enumerate(order)}
    for i, v in enumerate(order):
        later = {x for x in g.neighbors(v) if position[x] > i}
        if not is_clique(g, later):
            return v
    return None


def random_connected_chordal_graph(n: int, density=Fraction(1, 2), seed: int = 0) -> Graph:
    """Grow a random connected chordal graph by repeated clique attachment.

    Vertex ``i`` is joined to a random clique of the ``i`` vertices already
    present, grown greedily from a random seed vertex. The target clique
    size is ``max(1, round(density * i))``, so ``density=0`` yields trees
    and ``density=1`` yields the complete graph. Labels are shuffled at the
    end so the attachment order is not the identity.
    """
    if n < 1:
        raise ValueError("n must be positive")
    density = Fraction(density)
    if not 0 <= density <= 1:
        raise ValueError("density must lie in [0, 1]")
    rng = random.Random(seed)
    adj: list[set[int]] = [set() for _ in range(n)]
    for i in range(1, n):
        target = max(1, round(density * i))
        start = rng.randrange(i)
        clique = [start]
        candidates = sorted(adj[start])
        rng.shuffle(candidates)
        for c in candidates:
            if len(clique) >= target:
                break
            if all(c in adj[x] for x in clique):
                clique.append(c)
        for x in clique:
            adj[i].add(x)
            adj[x].add(i)
    relabel = list(range(n))
    rng.shuffle(relabel)
    g = Graph(n, ((relabel[u], relabel[v]) for u in range(n) for v in adj[u] if u < v))
    if not (is_chordal(g) and is_connected(g)):
        raise AssertionError("generator produced a non-chordal or disconnected graph")
    return g
