"""Graph text formats: edge list, JSON and Graphviz DOT."""

from __future__ import annotations

import json
import re
from collections.abc import Iterable
from pathlib import Path

from pcgraph.core.graph.engine import Edge, Graph, GraphError, normalize_edge

_HEADER = re.compile(r"^n\s*=\s*(-?\d+)$")
_EDGE = re.compile(r"^(-?\d+)\s+(-?\d+)$")

LEADER_NODE_ATTRS = 'shape=doublecircle, style=filled, fillcolor="#f4a261"'


class GraphParseError(GraphError):
    """Raised when an edge-list document is malformed."""

    def __init__(self, line: int, message: str) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}")


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format.

    The first non-comment line is ``n=<count>``; every following line holds
    two node labels separated by whitespace. Lines starting with ``#`` and
    blank lines are ignored.

    Raises:
        GraphParseError: With the offending line number.
    """
    n: int | None = None
    edges: set[Edge] = set()
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            match = _HEADER.match(line)
            if not match:
                raise GraphParseError(lineno, f"expected header 'n=<count>', got {raw.strip()!r}")
            n = int(match.group(1))
            if n < 1:
                raise GraphParseError(lineno, f"node count must be positive, got {n}")
            continue
        match = _EDGE.match(line)
        if not match:
            raise GraphParseError(lineno, f"expected 'i j', got {raw.strip()!r}")
        i, j = int(match.group(1)), int(match.group(2))
        for node in (i, j):
            if not 1 <= node <= n:
                raise GraphParseError(lineno, f"node {node} is outside 1..{n}")
        if i == j:
            raise GraphParseError(lineno, f"self-loop on node {i}")
        edge = normalize_edge(i, j)
        if edge in edges:
            raise GraphParseError(lineno, f"duplicate edge {i} {j}")
        edges.add(edge)
    if n is None:
        raise GraphParseError(max(last_line, 1), "missing header 'n=<count>'")
    return Graph.trusted(n, edges)


def serialize_graph(graph: Graph, comment: str | None = None) -> str:
    """Canonical edge-list text: header, then edges in lexicographic order."""
    lines = [f"# {comment}"] if comment else []
    lines.append(f"n={graph.n}")
    lines.extend(f"{i} {j}" for i, j in graph.sorted_edges())
    return "\n".join(lines) + "\n"


def graph_to_json(graph: Graph) -> str:
    return json.dumps({"n": graph.n, "edges": [list(e) for e in graph.sorted_edges()]})


def graph_from_json(text: str) -> Graph:
    """Parse ``{"n": int, "edges": [[i, j], ...]}``.

    Raises:
        GraphError: If the payload is not valid JSON or violates a graph invariant.
    """
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"invalid JSON: {exc}") from exc
    if not isinstance(payload, dict) or "n" not in payload:
        raise GraphError("JSON graph must be an object with 'n' and 'edges'")
    try:
        n = int(payload["n"])
        edges = [(int(a), int(b)) for a, b in payload.get("edges", [])]
    except (TypeError, ValueError) as exc:
        raise GraphError(f"malformed JSON graph: {exc}") from exc
    return Graph.from_edges(n, edges)


def graph_to_dot(graph: Graph, leaders: Iterable[int] = (), name: str = "G") -> str:
    """Graphviz DOT; leader nodes get a distinguishing shape and fill."""
    leader_set = set(leaders)
    lines = [f"graph {name} {{"]
    for node in graph.nodes:
        if node in leader_set:
            lines.append(f"  {node} [{LEADER_NODE_ATTRS}];")
        else:
            lines.append(f"  {node};")
    lines.extend(f"  {i} -- {j};" for i, j in graph.sorted_edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


def load_graph(path: Path | str) -> Graph:
    """Read a graph file; ``.json`` files use the JSON form, anything else the edge list."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if path.suffix.lower() == ".json":
        return graph_from_json(text)
    return parse_graph(text)


def save_graph(graph: Graph, path: Path | str) -> None:
    path = Path(path)
    if path.suffix.lower() == ".json":
        path.write_text(graph_to_json(graph) + "\n", encoding="utf-8")
    else:
        path.write_text(serialize_graph(graph), encoding="utf-8")
