"""Construction scripts: an ordered list of operations replayed over a base graph.

Text form, one operation per line::

    pairs k=4
    intra 1 2 4
    cross 4 7
    sat 1 2 at=0,0.5
    fix 3

``#`` starts a comment. Rule violations are logged and execution goes on;
structural problems (duplicate edges, unknown nodes) abort with the position
of the failing operation.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from pydantic import BaseModel, ConfigDict

from pcgraph.construct.scheme import (
    PairScheme,
    Point,
    RuleViolation,
    SchemeError,
    add_intra_pair_edges,
    add_satellite,
    check_no_crossing,
    init_scheme,
    validate_cross_edge,
)
from pcgraph.core.graph.engine import Graph, GraphError

logger = logging.getLogger(__name__)

_AT = re.compile(r"^at=(-?[\d.]+),(-?[\d.]+)$")
_K = re.compile(r"^k=(\d+)$")


class ScriptError(ValueError):
    """Structural script failure, located by op position or source line."""

    def __init__(self, message: str, position: int | None = None, line: int | None = None) -> None:
        self.position = position
        self.line = line
        where = f"line {line}: " if line is not None else f"op {position}: " if position is not None else ""
        super().__init__(f"{where}{message}")


class OpKind(str, Enum):
    PAIRS = "pairs"
    INTRA = "intra"
    CROSS = "cross"
    SATELLITE = "sat"
    MARK_FIXED = "fix"


class ConstructionOp(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: OpKind
    k: int | None = None
    pairs: tuple[int, ...] = ()
    edge: tuple[int, int] | None = None
    attach: tuple[int, ...] = ()
    coord: Point | None = None

    @classmethod
    def init(cls, k: int) -> "ConstructionOp":
        return cls(kind=OpKind.PAIRS, k=k)

    @classmethod
    def intra(cls, *pairs: int) -> "ConstructionOp":
        return cls(kind=OpKind.INTRA, pairs=pairs)

    @classmethod
    def cross(cls, u: int, v: int) -> "ConstructionOp":
        return cls(kind=OpKind.CROSS, edge=(u, v))

    @classmethod
    def satellite(cls, *attach: int, coord: Point | None = None) -> "ConstructionOp":
        return cls(kind=OpKind.SATELLITE, attach=attach, coord=coord)

    @classmethod
    def mark_fixed(cls, *pairs: int) -> "ConstructionOp":
        return cls(kind=OpKind.MARK_FIXED, pairs=pairs)

    def to_line(self) -> str:
        if self.kind is OpKind.PAIRS:
            return f"pairs k={self.k}"
        if self.kind is OpKind.CROSS and self.edge is not None:
            return f"cross {self.edge[0]} {self.edge[1]}"
        if self.kind is OpKind.SATELLITE:
            text = "sat " + " ".join(str(a) for a in self.attach)
            if self.coord is not None:
                text += f" at={self.coord[0]:g},{self.coord[1]:g}"
            return text
        return f"{self.kind.value} " + " ".join(str(p) for p in self.pairs)


class ConstructionScript(BaseModel):
    model_config = ConfigDict(frozen=True)

    base: Graph
    ops: tuple[ConstructionOp, ...] = ()

    def to_text(self) -> str:
        return "".join(op.to_line() + "\n" for op in self.ops)


@dataclass(frozen=True)
class LogEntry:
    """Validation record for one operation."""

    position: int
    op: str
    violations: tuple[RuleViolation, ...] = ()

    @property
    def status(self) -> str:
        return self.violations[0].code if self.violations else "ok"

    def render(self) -> str:
        detail = "; ".join(v.describe() for v in self.violations)
        return f"{self.position} {self.status}" + (f" ({detail})" if detail else "")


class ScriptRun(BaseModel):
    """Final graph and scheme of a replayed script with its validation log."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    graph: Graph
    scheme: PairScheme | None
    log: tuple[LogEntry, ...]

    @property
    def violations(self) -> list[RuleViolation]:
        return [v for entry in self.log for v in entry.violations]

    def render_log(self) -> str:
        return "\n".join(entry.render() for entry in self.log)


def run_script(script: ConstructionScript) -> ScriptRun:
    """Replay `script.ops` over `script.base`.

    The first cross edge joining two different pairs fixes both pairs when
    no pair is fixed yet.

    Raises:
        ScriptError: On the first structural failure, with its position.
    """
    graph = script.base
    scheme: PairScheme | None = None
    log: list[LogEntry] = []

    for position, op in enumerate(script.ops, start=1):
        try:
            if op.kind is OpKind.PAIRS:
                if scheme is not None:
                    raise ScriptError("scheme already initialised", position=position)
                scheme = init_scheme(op.k or 0)
                if graph.n != scheme.node_count:
                    raise ScriptError(
                        f"base graph has {graph.n} nodes, k={scheme.k} needs {scheme.node_count}",
                        position=position,
                    )
                violations: tuple[RuleViolation, ...] = ()
            else:
                if scheme is None:
                    raise ScriptError("'pairs k=<int>' must come first", position=position)
                scheme, graph, violations = _apply(scheme, graph, op, script.base)
        except (GraphError, SchemeError) as exc:
            raise ScriptError(str(exc), position=position) from exc

        for violation in violations:
            logger.warning("op %d (%s): %s", position, op.to_line(), violation.describe())
        log.append(LogEntry(position=position, op=op.to_line(), violations=violations))

    return ScriptRun(graph=graph, scheme=scheme, log=tuple(log))


def _apply(
    scheme: PairScheme, graph: Graph, op: ConstructionOp, base: Graph
) -> tuple[PairScheme, Graph, tuple[RuleViolation, ...]]:
    if op.kind is OpKind.INTRA:
        return scheme, add_intra_pair_edges(scheme, graph, op.pairs), ()

    if op.kind is OpKind.MARK_FIXED:
        return scheme.mark_fixed(*op.pairs), graph, ()

    if op.kind is OpKind.SATELLITE:
        scheme, graph = add_satellite(scheme, graph, op.attach, op.coord)
        new_node = graph.n
        found = [check_no_crossing(scheme, graph, new_node, a, base) for a in op.attach]
        return scheme, graph, tuple(v for v in found if v is not None)

    assert op.edge is not None
    u, v = op.edge
    graph.check_node(u)
    graph.check_node(v)
    if scheme.is_pair_node(u) and scheme.is_pair_node(v):
        violation = validate_cross_edge(scheme, graph, u, v, base)
        graph = graph.add_edge(u, v)
        pu, pv = scheme.pair_of(u), scheme.pair_of(v)
        if pu != pv and not scheme.fixed_pairs():
            scheme = scheme.mark_fixed(pu or 0, pv or 0)
            logger.info("Pairs %d and %d fixed by edge %d-%d", pu, pv, u, v)
    else:
        violation = check_no_crossing(scheme, graph, u, v, base)
        graph = graph.add_edge(u, v)
    return scheme, graph, (violation,) if violation else ()


def _ints(tokens: list[str], lineno: int) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in tokens)
    except ValueError as exc:
        raise ScriptError(f"expected integers, got {' '.join(tokens)!r}", line=lineno) from exc


def parse_script(text: str, base: Graph) -> ConstructionScript:
    """Parse the line-oriented script format.

    Raises:
        ScriptError: With the offending source line.
    """
    ops: list[ConstructionOp] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        word, *rest = line.split()
        if word == OpKind.PAIRS.value:
            match = _K.match(rest[0]) if len(rest) == 1 else None
            if not match:
                raise ScriptError("expected 'pairs k=<int>'", line=lineno)
            ops.append(ConstructionOp.init(int(match.group(1))))
        elif word == OpKind.INTRA.value:
            if not rest:
                raise ScriptError("'intra' needs at least one pair", line=lineno)
            ops.append(ConstructionOp.intra(*_ints(rest, lineno)))
        elif word == OpKind.CROSS.value:
            if len(rest) != 2:
                raise ScriptError("expected 'cross <u> <v>'", line=lineno)
            u, v = _ints(rest, lineno)
            ops.append(ConstructionOp.cross(u, v))
        elif word == OpKind.SATELLITE.value:
            coord: Point | None = None
            if rest and rest[-1].startswith("at="):
                match = _AT.match(rest.pop())
                if not match:
                    raise ScriptError("expected 'at=<x>,<y>'", line=lineno)
                coord = (float(match.group(1)), float(match.group(2)))
            if not rest:
                raise ScriptError("'sat' needs at least one attach node", line=lineno)
            ops.append(ConstructionOp.satellite(*_ints(rest, lineno), coord=coord))
        elif word == OpKind.MARK_FIXED.value:
            if not rest:
                raise ScriptError("'fix' needs at least one pair", line=lineno)
            ops.append(ConstructionOp.mark_fixed(*_ints(rest, lineno)))
        else:
            raise ScriptError(f"unknown operation {word!r}", line=lineno)
    return ConstructionScript(base=base, ops=tuple(ops))


def load_script(path: Path | str, base: Graph) -> ConstructionScript:
    return parse_script(Path(path).read_text(encoding="utf-8"), base)
