"""Graphviz DOT rendering with facet, exposed and shared edges styled apart."""

from __future__ import annotations

from typing import Optional, Sequence

from .erasure import ErasureTrace
from .exposure import EdgeClass, classify_edges
from .graph import Edge, Graph

EDGE_STYLE = {
    EdgeClass.FACET: 'color="gray40", style=dashed',
    EdgeClass.EXPOSED: 'color="red3", penwidth=2',
    EdgeClass.SHARED: 'color="blue3"',
}


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def graph_to_dot(
    g: Graph,
    labels: Optional[Sequence[str]] = None,
    name: str = "G",
    highlight: Optional[Edge] = None,
) -> str:
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for v in g.vertices():
        label = labels[v] if labels else str(v)
        lines.append(f"  {v} [label={_quote(label)}];")
    for e, cls in classify_edges(g).items():
        attrs = EDGE_STYLE[cls]
        if highlight is not None and e == highlight:
            attrs += ', label="erase"'
        lines.append(f"  {e.u} -- {e.v} [{attrs}, tooltip={_quote(cls.value)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def trace_to_dot(trace: ErasureTrace, labels: Optional[Sequence[str]] = None) -> str:
    """One DOT graph per prefix ``G_0 .. G_m``; each marks the edge erased next."""
    frames = []
    for j, g in enumerate(trace.graphs()):
        nxt = trace.erased[j] if j < len(trace.erased) else None
        frames.append(graph_to_dot(g, labels, name=f"step_{j}", highlight=nxt))
    return "".join(frames)
