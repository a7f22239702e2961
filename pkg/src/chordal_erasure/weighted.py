"""Finite metric spaces with exact weights, d-erasures and spanning trees."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Optional

from .errors import (
    EpsilonOutOfRange,
    InternalContradiction,
    InvalidTrace,
    MetricViolation,
    NoExposedEdge,
    NotMinimum,
)
from .erasure import ErasureTrace, run_erasures, verify_trace
from .exposure import exposed_cycle, exposed_edges
from .graph import Edge, Graph, complete_graph, is_bridge, is_tree


def to_fraction(value) -> Fraction:
    """Exact rational from an int, Fraction, or decimal/"p/q" string.

    Binary floats are rejected so that no weight is silently rounded.
    """
    if isinstance(value, float):
        raise TypeError("float weights are not accepted; pass a string or Fraction")
    return Fraction(value)


class MetricSpace:
    """Positive symmetric weights on all pairs of ``0..n-1``.

    With ``strict=True`` (the default) the triangle inequality is checked
    exactly on construction and :class:`MetricViolation` is raised if it
    fails. ``strict=False`` accepts any positive weights.
    """

    __slots__ = ("n", "_w")

    def __init__(self, n: int, weights: Mapping, strict: bool = True):
        if n < 1:
            raise ValueError("a metric space needs at least one point")
        w: dict[Edge, Fraction] = {}
        for pair, value in weights.items():
            e = Edge(*pair)
            if e.v >= n:
                raise ValueError(f"pair {tuple(e)} out of range for n={n}")
            if e in w:
                raise ValueError(f"pair {tuple(e)} given twice")
            w[e] = to_fraction(value)
        missing = [e for e in complete_graph(n).edges() if e not in w]
        if missing:
            raise ValueError(f"missing weights for pairs {[tuple(e) for e in missing[:5]]}")
        for e, x in w.items():
            if x <= 0:
                raise MetricViolation(f"weight of {tuple(e)} is not positive: {x}")
        self.n = n
        self._w = w
        if strict:
            verdict = validate_metric(self)
            if not verdict:
                x, z, y = verdict.violation
                raise MetricViolation(
                    f"triangle inequality fails: d({x},{z}) > d({x},{y}) + d({y},{z})"
                )

    def d(self, x: int, y: int) -> Fraction:
        if x == y:
            return Fraction(0)
        return self._w[Edge(x, y)]

    def weight(self, e: Iterable[int]) -> Fraction:
        return self._w[Edge(*e)]

    def items(self):
        return sorted(self._w.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MetricSpace):
            return NotImplemented
        return self.n == other.n and self._w == other._w

    def __repr__(self) -> str:
        return f"MetricSpace(n={self.n})"


@dataclass(frozen=True)
class MetricVerdict:
    ok: bool
    violation: Optional[tuple[int, int, int]] = None

    def __bool__(self) -> bool:
        return self.ok


def validate_metric(m: MetricSpace) -> MetricVerdict:
    """Scan all triples; a violation ``(x, z, y)`` means ``d(x,z) > d(x,y) + d(y,z)``."""
    n = m.n
    for x in range(n):
        for z in range(x + 1, n):
            dxz = m.d(x, z)
            for y in range(n):
                if y != x and y != z and dxz > m.d(x, y) + m.d(y, z):
                    return MetricVerdict(False, (x, z, y))
    return MetricVerdict(True)


def metric_from_function(n: int, f: Callable[[int, int], object], strict: bool = True) -> MetricSpace:
    return MetricSpace(n, {(x, y): f(x, y) for x in range(n) for y in range(x + 1, n)}, strict)


def uniform_metric(n: int, c=1) -> MetricSpace:
    return metric_from_function(n, lambda x, y: c)


def l1_square() -> MetricSpace:
    """Unit square in the l1 norm, corners 0..3 taken around the square."""
    corners = [(0, 0), (1, 0), (1, 1), (0, 1)]
    return metric_from_function(
        4,
        lambda x, y: abs(corners[x][0] - corners[y][0]) + abs(corners[x][1] - corners[y][1]),
    )


def metric_closure(n: int, weights: Mapping[Edge, Fraction]) -> dict[Edge, Fraction]:
    """Shortest-path distances of the complete weighted graph (Floyd-Warshall).

    Runs on integers scaled by the common denominator, then scales back.
    """
    scale = math.lcm(*(Fraction(w).denominator for w in weights.values()))
    d = [[0] * n for _ in range(n)]
    for (x, y), w in weights.items():
        d[x][y] = d[y][x] = int(Fraction(w) * scale)
    for k in range(n):
        dk = d[k]
        for i in range(n):
            dik = d[i][k]
            di = d[i]
            for j in range(n):
                if dik + dk[j] < di[j]:
                    di[j] = dik + dk[j]
    return {Edge(x, y): Fraction(d[x][y], scale) for x in range(n) for y in range(x + 1, n)}


def random_metric(n: int, seed: int = 0, kind: str = "generic") -> MetricSpace:
    """Random metric on ``n`` points.

    ``generic`` draws weights ``k/100`` with ``k`` in ``100..1000`` (ties
    are rare); ``integer`` draws from ``{1, 2, 3, 4}`` (ties everywhere).
    Either way the metric closure is taken so the triangle inequality holds.
    """
    rng = random.Random(seed)
    if kind == "generic":
        draw = lambda: Fraction(rng.randint(100, 1000), 100)  # noqa: E731
    elif kind == "integer":
        draw = lambda: Fraction(rng.randint(1, 4))  # noqa: E731
    else:
        raise ValueError(f"unknown metric kind {kind!r}")
    raw = {Edge(x, y): draw() for x in range(n) for y in range(x + 1, n)}
    return MetricSpace(n, metric_closure(n, raw), strict=False)


@dataclass(frozen=True)
class SpanningTree:
    edges: frozenset[Edge]
    weight: Fraction

    @classmethod
    def from_edges(cls, m: MetricSpace, edges: Iterable[Iterable[int]]) -> "SpanningTree":
        es = frozenset(Edge(*e) for e in edges)
        if not is_tree(Graph(m.n, es)):
            raise ValueError("edges do not form a spanning tree")
        return cls(es, sum((m.weight(e) for e in es), Fraction(0)))

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)


def _max_weight_edge(m: MetricSpace, edges: Iterable[Edge]) -> Edge:
    return min(edges, key=lambda e: (-m.weight(e), e))


def d_erasure_picker(m: MetricSpace):
    """Picker choosing the heaviest exposed edge, smallest edge among ties."""
    order = sorted(complete_graph(m.n).edges(), key=lambda e: (-m.weight(e), e))
    rank = {e: i for i, e in enumerate(order)}

    def pick(g: Graph, exposed: set[Edge]) -> Edge:
        return min(exposed, key=rank.__getitem__)

    return pick


def d_erasure_step(m: MetricSpace, g: Graph) -> tuple[Graph, Edge]:
    """Erase a heaviest exposed edge, lexicographically smallest among ties."""
    if g.n != m.n:
        raise ValueError("graph and metric have different vertex counts")
    exposed = exposed_edges(g)
    if not exposed:
        raise NoExposedEdge("graph has no exposed edge")
    e = _max_weight_edge(m, exposed)
    return g.remove_edge(*e), e


def d_erasure_mst(m: MetricSpace, incremental: bool = True) -> tuple[SpanningTree, ErasureTrace]:
    """Run d-erasures from the complete graph until no exposed edge is left."""
    trace = run_erasures(complete_graph(m.n), d_erasure_picker(m), incremental=incremental)
    return SpanningTree.from_edges(m, trace.final.edges()), trace


def reverse_delete_mst(m: MetricSpace) -> tuple[SpanningTree, tuple[Edge, ...]]:
    """Kruskal's second algorithm: drop heaviest non-bridge edges."""
    g = complete_graph(m.n)
    removed = []
    for e in sorted(g.edges(), key=lambda e: (-m.weight(e), e)):
        if not is_bridge(g, e):
            g = g.remove_edge(*e)
            removed.append(e)
    return SpanningTree.from_edges(m, g.edges()), tuple(removed)


def kruskal_mst(m: MetricSpace) -> SpanningTree:
    """Kruskal's first algorithm with a small union-find."""
    parent = list(range(m.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    chosen = []
    for e in sorted(complete_graph(m.n).edges(), key=lambda e: (m.weight(e), e)):
        a, b = find(e.u), find(e.v)
        if a != b:
            parent[a] = b
            chosen.append(e)
    return SpanningTree.from_edges(m, chosen)


def _tree_side(tree_edges: frozenset[Edge], n: int, cut: Edge) -> set[int]:
    """Vertices on ``cut.u``'s side of the tree once ``cut`` is removed."""
    adj: list[list[int]] = [[] for _ in range(n)]
    for e in tree_edges:
        if e != cut:
            adj[e.u].append(e.v)
            adj[e.v].append(e.u)
    side = {cut.u}
    stack = [cut.u]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in side:
                side.add(y)
                stack.append(y)
    return side


def d_erasure_toward(m: MetricSpace, tree: SpanningTree | Iterable[Iterable[int]]) -> ErasureTrace:
    """A maximal d-erasure sequence whose final graph is the given MST.

    Each step erases a heaviest exposed edge outside the tree. When every
    heaviest exposed edge lies in the tree, the exposed cycle through one
    of them must cross the tree cut at an equally heavy exposed edge that
    is not in the tree; that edge is erased instead.
    """
    if not isinstance(tree, SpanningTree):
        tree = SpanningTree.from_edges(m, tree)
    if tree.weight != kruskal_mst(m).weight:
        raise NotMinimum(f"tree weight {tree.weight} is not minimum")
    target = tree.edges

    def pick(g: Graph, exposed: set[Edge]) -> Edge:
        top = max(m.weight(e) for e in exposed)
        heaviest = sorted(e for e in exposed if m.weight(e) == top)
        outside = [e for e in heaviest if e not in target]
        if outside:
            return outside[0]
        xy = heaviest[0]
        side = _tree_side(target, m.n, xy)
        cycle = exposed_cycle(g, xy, check_chordal=False)
        k = len(cycle)
        for i in range(k):
            zw = Edge(cycle[i], cycle[(i + 1) % k])
            crosses = (zw.u in side) != (zw.v in side)
            if zw != xy and crosses and zw not in target and m.weight(zw) == top:
                return zw
        raise InternalContradiction(f"no equal-weight exposed edge crosses the cut of {tuple(xy)}")

    trace = run_erasures(complete_graph(m.n), pick)
    if frozenset(trace.final.edges()) != target:
        raise InternalContradiction("erasure sequence did not end at the target tree")
    return trace


def is_d_erasure_trace(m: MetricSpace, trace: ErasureTrace) -> bool:
    """Valid erasure trace whose every step removes a heaviest exposed edge."""
    if not verify_trace(trace):
        return False
    g = trace.initial
    for e in trace.erased:
        top = max(m.weight(f) for f in exposed_edges(g))
        if m.weight(e) != top:
            return False
        g = g.remove_edge(*e)
    return True


def metric_from_erasure_trace(trace: ErasureTrace, eps) -> MetricSpace:
    """Weights making ``trace`` a d-erasure sequence.

    Surviving edges get weight 1 and the ``j``-th erased edge gets
    ``2 - j*eps``. Needs ``0 < eps < 1/(m-1)`` for ``m >= 2`` erasures and
    ``0 < eps <= 1`` otherwise. Pairs outside the initial graph also get
    weight 1.
    """
    eps = to_fraction(eps)
    if not verify_trace(trace):
        raise InvalidTrace("trace does not verify")
    count = len(trace.erased)
    if eps <= 0 or (count >= 2 and eps >= Fraction(1, count - 1)) or (count <= 1 and eps > 1):
        raise EpsilonOutOfRange(f"eps={eps} out of range for {count} erasures")
    n = trace.initial.n
    weights = {e: Fraction(1) for e in complete_graph(n).edges()}
    for j, e in enumerate(trace.erased):
        weights[e] = 2 - j * eps
    return MetricSpace(n, weights)
