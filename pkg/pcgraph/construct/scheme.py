"""Double node sets and the two-row schematic used by the construction procedure.

Nodes 1..k form the upper group and k+1..2k the lower group; pair p joins
node p with node k+p. In the schematic the upper node of pair p sits at
(p, 1), the lower one at (p, 0), and satellite nodes (labels above 2k) sit
at declared coordinates.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, model_validator

from pcgraph.core.graph.engine import Edge, Graph, GraphError, normalize_edge

logger = logging.getLogger(__name__)

Point = tuple[float, float]


class SchemeError(ValueError):
    """Raised when a scheme would be malformed."""


class Rule(str, Enum):
    DIFFERENT_GROUPS = "i"
    DIFFERENT_PAIRS = "ii"
    NO_CROSSING = "iii"


class RuleViolation(BaseModel):
    model_config = ConfigDict(frozen=True)

    rule: Rule
    edge: Edge
    blocking_edge: Edge | None = None

    @property
    def code(self) -> str:
        return f"violation:{self.rule.value}"

    def describe(self) -> str:
        u, v = self.edge
        if self.rule is Rule.DIFFERENT_GROUPS:
            return f"edge {u}-{v} joins two nodes of the same group"
        if self.rule is Rule.DIFFERENT_PAIRS:
            return f"edge {u}-{v} stays inside one double node set"
        a, b = self.blocking_edge or (0, 0)
        return f"edge {u}-{v} crosses edge {a}-{b}"


class PairScheme(BaseModel):
    """Immutable description of the k double node sets and their layout."""

    model_config = ConfigDict(frozen=True)

    k: int = Field(ge=1)
    fixed_flags: tuple[bool, ...] = ()
    satellites: tuple[Point, ...] = ()

    @model_validator(mode="after")
    def _check_flags(self) -> "PairScheme":
        if len(self.fixed_flags) != self.k:
            raise ValueError(f"expected {self.k} fixed flags, got {len(self.fixed_flags)}")
        return self

    @property
    def omega1(self) -> tuple[int, ...]:
        return tuple(range(1, self.k + 1))

    @property
    def omega2(self) -> tuple[int, ...]:
        return tuple(range(self.k + 1, 2 * self.k + 1))

    @property
    def pairs(self) -> tuple[Edge, ...]:
        return tuple((p, self.k + p) for p in range(1, self.k + 1))

    @property
    def node_count(self) -> int:
        return 2 * self.k + len(self.satellites)

    def is_pair_node(self, node: int) -> bool:
        return 1 <= node <= 2 * self.k

    def group(self, node: int) -> int | None:
        """1 for the upper group, 2 for the lower group, None for satellites."""
        if 1 <= node <= self.k:
            return 1
        if self.k < node <= 2 * self.k:
            return 2
        return None

    def pair_of(self, node: int) -> int | None:
        if not self.is_pair_node(node):
            return None
        return node if node <= self.k else node - self.k

    def pair(self, p: int) -> Edge:
        self._check_pair(p)
        return (p, self.k + p)

    def coords(self, node: int) -> Point:
        if 1 <= node <= self.k:
            return (float(node), 1.0)
        if self.k < node <= 2 * self.k:
            return (float(node - self.k), 0.0)
        index = node - 2 * self.k - 1
        if 0 <= index < len(self.satellites):
            return self.satellites[index]
        raise SchemeError(f"node {node} has no schematic position")

    def fixed_pairs(self) -> tuple[int, ...]:
        return tuple(p for p, flag in enumerate(self.fixed_flags, start=1) if flag)

    def unfixed_pairs(self) -> tuple[int, ...]:
        return tuple(p for p, flag in enumerate(self.fixed_flags, start=1) if not flag)

    def mark_fixed(self, *pairs: int) -> "PairScheme":
        flags = list(self.fixed_flags)
        for p in pairs:
            self._check_pair(p)
            flags[p - 1] = True
        return self.model_copy(update={"fixed_flags": tuple(flags)})

    def default_satellite_coord(self, index: int) -> Point:
        """Left of the rows for the first satellite, right for the second, then alternating outward."""
        if index % 2 == 0:
            return (float(-(index // 2)), 0.5)
        return (float(self.k + 1 + index // 2), 0.5)

    def with_satellite(self, coord: Point | None = None) -> "PairScheme":
        point = coord if coord is not None else self.default_satellite_coord(len(self.satellites))
        return self.model_copy(update={"satellites": self.satellites + ((float(point[0]), float(point[1])),)})

    def _check_pair(self, p: int) -> None:
        if not 1 <= p <= self.k:
            raise SchemeError(f"pair {p} is outside 1..{self.k}")


def init_scheme(k: int) -> PairScheme:
    """k double node sets, all unfixed.

    Raises:
        SchemeError: If k < 1.
    """
    if k < 1:
        raise SchemeError(f"a scheme needs at least one double node set, got k={k}")
    return PairScheme(k=k, fixed_flags=(False,) * k)


# ----------------------------------------------------------------------
# Geometry
# ----------------------------------------------------------------------


def _orient(a: Point, b: Point, c: Point) -> float:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _sign(value: float) -> int:
    return (value > 0) - (value < 0)


def segments_cross(p1: Point, p2: Point, q1: Point, q2: Point) -> bool:
    """True iff the open segments p1p2 and q1q2 share a point.

    Proper crossings and collinear overlaps of positive length count;
    touching at an endpoint does not.
    """
    d1 = _sign(_orient(q1, q2, p1))
    d2 = _sign(_orient(q1, q2, p2))
    d3 = _sign(_orient(p1, p2, q1))
    d4 = _sign(_orient(p1, p2, q2))
    if d1 * d2 < 0 and d3 * d4 < 0:
        return True
    if d1 == d2 == d3 == d4 == 0:
        axis = 0 if p1[0] != p2[0] else 1
        lo_p, hi_p = sorted((p1[axis], p2[axis]))
        lo_q, hi_q = sorted((q1[axis], q2[axis]))
        return min(hi_p, hi_q) - max(lo_p, lo_q) > 0
    return False


def schematic_edges(graph: Graph, base: Graph | None = None) -> list[Edge]:
    """Edges drawn in the schematic: everything in `graph` that is not a base edge."""
    if base is None:
        return graph.sorted_edges()
    return sorted(graph.edges - base.edges)


def find_crossing(scheme: PairScheme, edges: Iterable[Edge], u: int, v: int) -> Edge | None:
    """First edge (in the given order) whose drawing crosses the segment u-v."""
    pu, pv = scheme.coords(u), scheme.coords(v)
    for a, b in edges:
        if {a, b} & {u, v}:
            continue
        if segments_cross(pu, pv, scheme.coords(a), scheme.coords(b)):
            return (a, b)
    return None


def check_no_crossing(
    scheme: PairScheme, graph: Graph, u: int, v: int, base: Graph | None = None
) -> RuleViolation | None:
    """Only the non-crossing rule; used for satellite edges."""
    edge = normalize_edge(u, v)
    others = [e for e in schematic_edges(graph, base) if e != edge]
    blocking = find_crossing(scheme, others, u, v)
    if blocking is not None:
        return RuleViolation(rule=Rule.NO_CROSSING, edge=edge, blocking_edge=blocking)
    return None


def validate_cross_edge(
    scheme: PairScheme, graph: Graph, u: int, v: int, base: Graph | None = None
) -> RuleViolation | None:
    """Check a candidate cross edge against the three construction rules.

    Args:
        scheme: Current scheme.
        graph: Graph the edge would be added to.
        u: Endpoint in 1..2k.
        v: Endpoint in 1..2k.
        base: Base graph whose edges are not part of the schematic.

    Returns:
        None when the edge is legal, otherwise the first failed rule.

    Raises:
        SchemeError: If an endpoint is not a pair node.
    """
    for node in (u, v):
        if not scheme.is_pair_node(node):
            raise SchemeError(f"node {node} is not in a double node set")
    edge = normalize_edge(u, v)
    if scheme.group(u) == scheme.group(v):
        return RuleViolation(rule=Rule.DIFFERENT_GROUPS, edge=edge)
    if scheme.pair_of(u) == scheme.pair_of(v):
        return RuleViolation(rule=Rule.DIFFERENT_PAIRS, edge=edge)
    return check_no_crossing(scheme, graph, u, v, base)


# ----------------------------------------------------------------------
# Graph operations
# ----------------------------------------------------------------------


def add_intra_pair_edges(scheme: PairScheme, graph: Graph, which: Iterable[int]) -> Graph:
    """Join both members of each selected pair.

    Raises:
        GraphError: If a selected pair is already joined.
    """
    for p in which:
        u, v = scheme.pair(p)
        if graph.has_edge(u, v):
            raise GraphError(f"pair {p} already has its intra-pair edge {u}-{v}")
        graph = graph.add_edge(u, v)
    return graph


def add_satellite(
    scheme: PairScheme, graph: Graph, attach: Iterable[int], coord: Point | None = None
) -> tuple[PairScheme, Graph]:
    """Append a new node joined to every node in `attach`.

    Raises:
        SchemeError: On an empty attach list or a graph/scheme size mismatch.
        GraphError: On an unknown or repeated attach node.
    """
    targets = list(attach)
    if not targets:
        raise SchemeError("a satellite needs at least one attach node")
    if graph.n != scheme.node_count:
        raise SchemeError(f"graph has {graph.n} nodes but the scheme lays out {scheme.node_count}")
    for node in targets:
        graph.check_node(node)
    new_scheme = scheme.with_satellite(coord)
    new_node = graph.n + 1
    grown = graph.add_nodes(1)
    for node in targets:
        grown = grown.add_edge(new_node, node)
    logger.debug("Satellite %d attached to %s at %s", new_node, targets, new_scheme.coords(new_node))
    return new_scheme, grown
