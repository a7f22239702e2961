"""Exception hierarchy shared by the library and the CLI."""

from __future__ import annotations


class ErasureError(Exception):
    """Base class for every error raised by this package."""


class NotChordal(ErasureError):
    pass


class NotConnected(ErasureError):
    pass


class AlreadyComplete(ErasureError):
    pass


class NotExposed(ErasureError):
    """Raised when an erasure targets an edge that is not exposed.

    ``kind`` is ``"facet"`` or ``"shared"``; ``"missing"`` if the edge is
    not in the graph at all.
    """

    def __init__(self, edge, kind: str):
        self.edge = edge
        self.kind = kind
        super().__init__(f"edge {tuple(edge)} is not exposed ({kind})")


class NoExposedEdge(ErasureError):
    pass


class NoCycle(ErasureError):
    pass


class NotMinimum(ErasureError):
    pass


class InternalContradiction(ErasureError):
    pass


class InvalidTrace(ErasureError):
    pass


class EpsilonOutOfRange(ErasureError):
    pass


class MetricViolation(ErasureError):
    pass


class SizeLimitExceeded(ErasureError):
    pass
