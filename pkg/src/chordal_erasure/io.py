"""JSON documents for graphs, metrics and erasure traces.

Every document is a JSON object with a mandatory ``version`` and a
``kind`` of ``graph``, ``metric`` or ``trace``. Vertices are dense ids
``0..n-1``; optional ``labels`` name them, and edges may refer to
vertices by label on input. Weights are written as exact strings
(``"3/2"``, ``"2"``); decimal literals are read exactly.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Optional, Union

from .erasure import ErasureTrace
from .errors import ErasureError
from .graph import Edge, Graph
from .weighted import MetricSpace

FORMAT_VERSION = 1


class DocumentError(ErasureError):
    """A document is malformed or uses an unsupported version."""


def _check_header(data: Any, kind: str) -> None:
    if not isinstance(data, dict):
        raise DocumentError("document must be a JSON object")
    if "version" not in data:
        raise DocumentError("missing mandatory 'version' field")
    if data["version"] != FORMAT_VERSION:
        raise DocumentError(f"unsupported version {data['version']!r}")
    if data.get("kind") != kind:
        raise DocumentError(f"expected kind {kind!r}, got {data.get('kind')!r}")


def _labels(data: dict, n: int) -> Optional[tuple[str, ...]]:
    labels = data.get("labels")
    if labels is None:
        return None
    if not isinstance(labels, list) or len(labels) != n:
        raise DocumentError("labels must be a list with one entry per vertex")
    labels = tuple(str(x) for x in labels)
    if len(set(labels)) != n:
        raise DocumentError("labels must be unique")
    return labels


def _vertex(x: Any, n: int, labels: Optional[tuple[str, ...]]) -> int:
    if isinstance(x, bool):
        raise DocumentError(f"bad vertex {x!r}")
    if isinstance(x, int):
        if not 0 <= x < n:
            raise DocumentError(f"vertex {x} out of range for n={n}")
        return x
    if isinstance(x, str) and labels is not None and x in labels:
        return labels.index(x)
    raise DocumentError(f"unknown vertex {x!r}")


def _edge(pair: Any, n: int, labels) -> Edge:
    if not isinstance(pair, list) or len(pair) != 2:
        raise DocumentError(f"edge must be a two-element list, got {pair!r}")
    try:
        return Edge(_vertex(pair[0], n, labels), _vertex(pair[1], n, labels))
    except ValueError as exc:
        raise DocumentError(str(exc)) from None


def _n(data: dict) -> int:
    n = data.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DocumentError("'n' must be a positive integer")
    return n


def format_weight(w: Fraction) -> str:
    return str(w)


def parse_weight(x: Any) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (int, str, Fraction)):
        raise DocumentError(f"weight must be an integer or exact string, got {x!r}")
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError):
        raise DocumentError(f"cannot parse weight {x!r}") from None


@dataclass(frozen=True)
class GraphDocument:
    n: int
    edges: tuple[Edge, ...]
    labels: Optional[tuple[str, ...]] = None

    @classmethod
    def from_graph(cls, g: Graph, labels=None) -> "GraphDocument":
        return cls(g.n, tuple(g.edges()), tuple(labels) if labels else None)

    def to_graph(self) -> Graph:
        return Graph(self.n, self.edges)

    def to_dict(self) -> dict:
        out: dict[str, Any] = {"version": FORMAT_VERSION, "kind": "graph", "n": self.n}
        if self.labels is not None:
            out["labels"] = list(self.labels)
        out["edges"] = [list(e) for e in self.edges]
        return out

    @classmethod
    def from_dict(cls, data: Any) -> "GraphDocument":
        _check_header(data, "graph")
        n = _n(data)
        labels = _labels(data, n)
        raw = data.get("edges")
        if not isinstance(raw, list):
            raise DocumentError("'edges' must be a list")
        edges = [_edge(p, n, labels) for p in raw]
        if len(set(edges)) != len(edges):
            raise DocumentError("duplicate edge")
        return cls(n, tuple(sorted(edges)), labels)


@dataclass(frozen=True)
class MetricDocument:
    n: int
    weights: tuple[tuple[Edge, Fraction], ...]
    labels: Optional[tuple[str, ...]] = None

    @classmethod
    def from_metric(cls, m: MetricSpace, labels=None) -> "MetricDocument":
        return cls(m.n, tuple(m.items()), tuple(labels) if labels else None)

    def to_metric(self, strict: bool = True) -> MetricSpace:
        return MetricSpace(self.n, dict(self.weights), strict=strict)

    def to_dict(self) -> dict:
        out: dict[str, Any] = {"version": FORMAT_VERSION, "kind": "metric", "n": self.n}
        if self.labels is not None:
            out["labels"] = list(self.labels)
        out["weights"] = [[e.u, e.v, format_weight(w)] for e, w in self.weights]
        return out

    @classmethod
    def from_dict(cls, data: Any) -> "MetricDocument":
        _check_header(data, "metric")
        n = _n(data)
        labels = _labels(data, n)
        raw = data.get("weights")
        if not isinstance(raw, list):
            raise DocumentError("'weights' must be a list")
        weights: dict[Edge, Fraction] = {}
        for item in raw:
            if not isinstance(item, list) or len(item) != 3:
                raise DocumentError(f"weight entry must be [u, v, w], got {item!r}")
            e = _edge(item[:2], n, labels)
            if e in weights:
                raise DocumentError(f"pair {list(e)} given twice")
            w = parse_weight(item[2])
            if w <= 0:
                raise DocumentError(f"weight of {list(e)} must be positive")
            weights[e] = w
        if len(weights) != n * (n - 1) // 2:
            raise DocumentError("weights must cover every pair exactly once")
        return cls(n, tuple(sorted(weights.items())), labels)


@dataclass(frozen=True)
class TraceDocument:
    initial: GraphDocument
    erased: tuple[Edge, ...]
    annotations: Optional[tuple[dict, ...]] = None
    algorithm: Optional[str] = None

    @classmethod
    def from_trace(cls, trace: ErasureTrace, labels=None, annotations=None, algorithm=None):
        return cls(
            GraphDocument.from_graph(trace.initial, labels),
            tuple(trace.erased),
            tuple(annotations) if annotations is not None else None,
            algorithm,
        )

    def to_trace(self) -> ErasureTrace:
        return ErasureTrace(self.initial.to_graph(), self.erased)

    def to_dict(self) -> dict:
        out: dict[str, Any] = {"version": FORMAT_VERSION, "kind": "trace"}
        if self.algorithm is not None:
            out["algorithm"] = self.algorithm
        out["initial"] = self.initial.to_dict()
        out["erased"] = [list(e) for e in self.erased]
        if self.annotations is not None:
            out["annotations"] = [dict(a) for a in self.annotations]
        return out

    @classmethod
    def from_dict(cls, data: Any) -> "TraceDocument":
        _check_header(data, "trace")
        initial = GraphDocument.from_dict(data.get("initial"))
        raw = data.get("erased")
        if not isinstance(raw, list):
            raise DocumentError("'erased' must be a list")
        erased = tuple(_edge(p, initial.n, initial.labels) for p in raw)
        annotations = data.get("annotations")
        if annotations is not None:
            if not isinstance(annotations, list) or len(annotations) != len(erased):
                raise DocumentError("annotations must have one entry per erased edge")
            annotations = tuple(annotations)
        algorithm = data.get("algorithm")
        return cls(initial, erased, annotations, algorithm)


Document = Union[GraphDocument, MetricDocument, TraceDocument]
_KINDS = {"graph": GraphDocument, "metric": MetricDocument, "trace": TraceDocument}


def loads(text: str) -> Document:
    try:
        data = json.loads(text, parse_float=Fraction)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise DocumentError("document must be a JSON object")
    if "version" not in data:
        raise DocumentError("missing mandatory 'version' field")
    kind = data.get("kind")
    if kind not in _KINDS:
        raise DocumentError(f"unknown document kind {kind!r}")
    return _KINDS[kind].from_dict(data)


def dumps(doc: Document) -> str:
    return json.dumps(doc.to_dict(), indent=2) + "\n"


def read_document(path: Union[str, Path]) -> Document:
    """Read a document from a file path, or from stdin when ``path`` is ``-``."""
    if str(path) == "-":
        return loads(sys.stdin.read())
    return loads(Path(path).read_text())


def write_text(path: Union[str, Path, None], text: str) -> None:
    if path is None or str(path) == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)
