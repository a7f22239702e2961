"""Exposed-edge erasures on chordal graphs and d-erasure minimum spanning trees."""

from .chordality import (
    is_chordal,
    is_perfect_elimination_ordering,
    is_simplicial,
    maximum_cardinality_search,
    random_connected_chordal_graph,
    simplicial_vertices,
)
from .erasure import (
    ErasureTrace,
    erase,
    erase_to_tree,
    erasure_sequence_from_complete,
    extension_step,
    verify_trace,
)
from .errors import ErasureError
from .exposure import (
    EdgeClass,
    classify_edges,
    exposed_cycle,
    exposed_edges,
    incident_exposed_count,
    is_exposed,
    is_facet_edge,
)
from .graph import Edge, Graph, complete_graph
from .weighted import (
    MetricSpace,
    SpanningTree,
    d_erasure_mst,
    d_erasure_step,
    d_erasure_toward,
    metric_from_erasure_trace,
    reverse_delete_mst,
    validate_metric,
)

__version__ = "0.1.0"
