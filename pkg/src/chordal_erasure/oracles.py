"""Brute-force ground truth for tests and the CLI's ``--oracle`` checks.

Nothing here reuses the production neighborhood, connectivity or
exposure code: each oracle rebuilds its own adjacency matrix from the
edge list and works from the definitions.
"""

from __future__ import annotations

import itertools
import os
from fractions import Fraction
from typing import Iterator

from .errors import SizeLimitExceeded
from .graph import Edge, Graph
from .weighted import MetricSpace, SpanningTree

GRAPH_LIMIT_ENV = "CHORDAL_ERASURE_ORACLE_LIMIT"
MST_LIMIT_ENV = "CHORDAL_ERASURE_MST_ORACLE_LIMIT"


def graph_limit() -> int:
    return int(os.environ.get(GRAPH_LIMIT_ENV, 16))


def mst_limit() -> int:
    return int(os.environ.get(MST_LIMIT_ENV, 9))


def _matrix(g: Graph, limit: int) -> list[list[bool]]:
    if g.n > limit:
        raise SizeLimitExceeded(f"n={g.n} exceeds oracle limit {limit}")
    a = [[False] * g.n for _ in range(g.n)]
    for u, v in g.edges():
        a[u][v] = a[v][u] = True
    return a


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on ``n`` vertices, by edge bitmask."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, (p for i, p in enumerate(pairs) if mask >> i & 1))


def enumerate_maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    """Bron-Kerbosch with pivoting; cliques as sorted tuples, sorted overall."""
    a = _matrix(g, graph_limit())
    nbrs = [{j for j in range(g.n) if a[i][j]} for i in range(g.n)]
    out: list[tuple[int, ...]] = []

    def expand(r: set[int], p: set[int], x: set[int]) -> None:
        if not p and not x:
            out.append(tuple(sorted(r)))
            return
        pivot = max(p | x, key=lambda q: len(nbrs[q] & p))
        for v in sorted(p - nbrs[pivot]):
            expand(r | {v}, p & nbrs[v], x & nbrs[v])
            p = p - {v}
            x = x | {v}

    expand(set(), set(range(g.n)), set())
    return sorted(out)


def naive_exposed(g: Graph, e) -> bool:
    """Exactly one maximal clique contains ``e`` and it has three or more vertices."""
    u, v = Edge(*e)
    if not g.has_edge(u, v):
        raise ValueError(f"{(u, v)} is not an edge")
    hits = [c for c in enumerate_maximal_cliques(g) if u in c and v in c]
    return len(hits) == 1 and len(hits[0]) >= 3


def naive_facet(g: Graph, e) -> bool:
    u, v = Edge(*e)
    return (u, v) in enumerate_maximal_cliques(g)


def _induces_cycle(a: list[list[bool]], subset: tuple[int, ...]) -> bool:
    for x in subset:
        if sum(a[x][y] for y in subset) != 2:
            return False
    # 2-regular; connected means one cycle
    seen = {subset[0]}
    stack = [subset[0]]
    while stack:
        x = stack.pop()
        for y in subset:
            if a[x][y] and y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(subset)


def find_induced_cycle(g: Graph) -> tuple[int, ...] | None:
    """Smallest induced cycle of length >= 4 (lexicographically first subset).

    Returned in walking order from its smallest vertex, stepping to the
    smaller neighbor first.
    """
    a = _matrix(g, graph_limit())
    for size in range(4, g.n + 1):
        for subset in itertools.combinations(range(g.n), size):
            if _induces_cycle(a, subset):
                walk = [subset[0]]
                prev = None
                while len(walk) < size:
                    x = walk[-1]
                    nxt = min(y for y in subset if a[x][y] and y != prev and y not in walk)
                    prev = x
                    walk.append(nxt)
                return tuple(walk)
    return None


def brute_force_chordal(g: Graph) -> bool:
    return find_induced_cycle(g) is None


def _prufer_decode(seq: tuple[int, ...], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(i for i in range(n) if degree[i] == 1)
        edges.append((min(leaf, x), max(leaf, x)))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = (i for i in range(n) if degree[i] == 1)
    edges.append((u, v))
    return sorted(edges)


def enumerate_spanning_trees(n: int) -> Iterator[list[tuple[int, int]]]:
    """All ``n**(n-2)`` labeled spanning trees of ``K_n`` via Prufer codes."""
    if n > mst_limit():
        raise SizeLimitExceeded(f"n={n} exceeds spanning-tree oracle limit {mst_limit()}")
    if n == 1:
        yield []
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield _prufer_decode(seq, n)


def enumerate_all_msts(m: MetricSpace) -> list[SpanningTree]:
    """Every minimum spanning tree of a metric.

    Exhaustive include/exclude search over the pairs in increasing weight
    order, abandoning a branch only when even the cheapest completion is
    strictly heavier than the best tree seen. Ties are therefore kept and
    the output is every optimum, sorted by edge list.
    """
    n = m.n
    if n > mst_limit():
        raise SizeLimitExceeded(f"n={n} exceeds MST oracle limit {mst_limit()}")
    pairs = sorted(((m.d(x, y), x, y) for x, y in itertools.combinations(range(n), 2)))
    weights = [w for w, _, _ in pairs]
    prefix = [Fraction(0)]
    for w in weights:
        prefix.append(prefix[-1] + w)
    best: list = [None]
    found: list[tuple[tuple[int, int], ...]] = []

    def search(i: int, label: list[int], chosen: list, total: Fraction) -> None:
        need = n - 1 - len(chosen)
        if need == 0:
            if best[0] is None or total < best[0]:
                best[0] = total
                found.clear()
            if total == best[0]:
                found.append(tuple(sorted(chosen)))
            return
        if len(pairs) - i < need:
            return
        bound = total + prefix[i + need] - prefix[i]
        if best[0] is not None and bound > best[0]:
            return
        w, x, y = pairs[i]
        if label[x] != label[y]:
            old, new = label[y], label[x]
            merged = [new if c == old else c for c in label]
            search(i + 1, merged, chosen + [(x, y)], total + w)
        search(i + 1, label, chosen, total)

    search(0, list(range(n)), [], Fraction(0))
    return [SpanningTree(frozenset(Edge(*e) for e in tree), best[0]) for tree in sorted(found)]


def minimum_spanning_weight(m: MetricSpace) -> Fraction:
    return enumerate_all_msts(m)[0].weight
