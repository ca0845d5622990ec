"""Graph model and formats."""

from pcgraph.core.graph.engine import (
    Edge,
    Graph,
    GraphError,
    LaplacianError,
    LaplacianMatrix,
    normalize_edge,
)
from pcgraph.core.graph.graph_io import (
    GraphParseError,
    graph_from_json,
    graph_to_dot,
    graph_to_json,
    load_graph,
    parse_graph,
    save_graph,
    serialize_graph,
)

__all__ = [
    "Edge",
    "Graph",
    "GraphError",
    "GraphParseError",
    "LaplacianError",
    "LaplacianMatrix",
    "normalize_edge",
    "parse_graph",
    "serialize_graph",
    "graph_to_json",
    "graph_from_json",
    "graph_to_dot",
    "load_graph",
    "save_graph",
]
