"""Enumeration of the graphs reachable by one legal choice at a construction stage.

Stages ``step3``, ``step4a`` and ``step6`` choose cross edges and keep only
candidates that satisfy all three rules. Stages ``step4b``, ``step4c``,
``step5`` and ``step7`` are prescriptive: they emit every pattern and record
non-crossing violations in the variant log.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from enum import Enum
from string import ascii_lowercase

from pydantic import BaseModel, ConfigDict

from pcgraph.construct.scheme import (
    PairScheme,
    RuleViolation,
    add_satellite,
    check_no_crossing,
    schematic_edges,
    validate_cross_edge,
)
from pcgraph.construct.script import ConstructionOp
from pcgraph.core.exact.certify import is_perfect_exact
from pcgraph.core.graph.engine import Edge, Graph, normalize_edge

logger = logging.getLogger(__name__)


class Stage(str, Enum):
    STEP3 = "step3"
    STEP4A = "step4a"
    STEP4B = "step4b"
    STEP4C = "step4c"
    STEP5 = "step5"
    STEP6 = "step6"
    STEP7 = "step7"


class InapplicableStageError(ValueError):
    """Raised when a stage cannot run on the given configuration."""


class ConstructionVariant(BaseModel):
    """One enumerated graph with the ops that produced it and its validation record."""

    model_config = ConfigDict(frozen=True)

    label: str
    stage: Stage
    graph: Graph
    scheme: PairScheme
    ops: tuple[ConstructionOp, ...]
    violations: tuple[RuleViolation, ...] = ()
    perfect: bool | None = None

    def describe(self) -> str:
        ops = "; ".join(op.to_line() for op in self.ops)
        verdict = "unverified" if self.perfect is None else "perfect" if self.perfect else "not-perfect"
        return f"({self.label}) {ops} -> {verdict}"


# ----------------------------------------------------------------------
# Configuration helpers
# ----------------------------------------------------------------------


def _require_pairs_covered(scheme: PairScheme, graph: Graph) -> None:
    if graph.n != scheme.node_count:
        raise InapplicableStageError(
            f"graph has {graph.n} nodes but the scheme lays out {scheme.node_count}"
        )


def _cross_pair_edges(scheme: PairScheme, edges: Iterable[Edge]) -> list[Edge]:
    out = []
    for u, v in edges:
        pu, pv = scheme.pair_of(u), scheme.pair_of(v)
        if pu is not None and pv is not None and pu != pv:
            out.append((u, v))
    return out


def _resolve_fixed(scheme: PairScheme, graph: Graph, base: Graph | None) -> PairScheme:
    """Scheme with fixed pairs set, inferring them from a lone cross edge if needed."""
    if scheme.fixed_pairs():
        return scheme
    cross = _cross_pair_edges(scheme, schematic_edges(graph, base))
    if len(cross) != 1:
        raise InapplicableStageError("no fixed pairs declared and no single cross edge to infer them from")
    u, v = cross[0]
    return scheme.mark_fixed(scheme.pair_of(u) or 0, scheme.pair_of(v) or 0)


def _two_unfixed(scheme: PairScheme) -> tuple[int, int]:
    unfixed = scheme.unfixed_pairs()
    if len(unfixed) != 2:
        raise InapplicableStageError(f"stage needs exactly two unfixed pairs, found {list(unfixed)}")
    return unfixed[0], unfixed[1]


def _fixed_cross_edge(scheme: PairScheme, graph: Graph, base: Graph | None) -> Edge:
    """The edge joining the two fixed pairs, oriented (upper node, lower node)."""
    fixed = set(scheme.fixed_pairs())
    for u, v in _cross_pair_edges(scheme, schematic_edges(graph, base)):
        if {scheme.pair_of(u), scheme.pair_of(v)} == fixed:
            return (u, v) if scheme.group(u) == 1 else (v, u)
    raise InapplicableStageError("no edge joins the fixed pairs")


def _legal_edges(
    scheme: PairScheme, graph: Graph, base: Graph | None, candidates: Iterable[tuple[int, int]]
) -> list[Edge]:
    legal: list[Edge] = []
    for u, v in candidates:
        edge = normalize_edge(u, v)
        if graph.has_edge(*edge) or edge in legal:
            continue
        violation = validate_cross_edge(scheme, graph, u, v, base)
        if violation is None:
            legal.append(edge)
        else:
            logger.debug("Candidate %s rejected: %s", edge, violation.describe())
    return legal


def _between_pairs(scheme: PairScheme, a: int, b: int) -> list[tuple[int, int]]:
    """Opposite-group edges between pair a and pair b."""
    ua, la = scheme.pair(a)
    ub, lb = scheme.pair(b)
    return [(ua, lb), (ub, la)]


def _crossing_log(scheme: PairScheme, graph: Graph, base: Graph | None, edges: Sequence[Edge]) -> list[RuleViolation]:
    found = [check_no_crossing(scheme, graph, u, v, base) for u, v in edges]
    return [v for v in found if v is not None]


def _dedupe(variants: list[ConstructionVariant]) -> list[ConstructionVariant]:
    seen: set[Graph] = set()
    out = []
    for variant in variants:
        if variant.graph not in seen:
            seen.add(variant.graph)
            out.append(variant)
    return out


# ----------------------------------------------------------------------
# Stages
# ----------------------------------------------------------------------


def _step3(scheme: PairScheme, graph: Graph, base: Graph | None) -> list[ConstructionVariant]:
    open_pairs = [p for p in range(1, scheme.k + 1) if not graph.has_edge(*scheme.pair(p))]
    if not open_pairs:
        raise InapplicableStageError("every pair already has its intra-pair edge")
    candidates = []
    for p in open_pairs:
        upper, lower = scheme.pair(p)
        candidates += [(upper, z) for z in scheme.omega2 if z != lower]
        candidates += [(lower, z) for z in scheme.omega1 if z != upper]
    variants = []
    for u, v in sorted(_legal_edges(scheme, graph, base, candidates)):
        fixed = scheme.mark_fixed(scheme.pair_of(u) or 0, scheme.pair_of(v) or 0)
        variants.append(
            ConstructionVariant(
                label=f"e{u},{v}",
                stage=Stage.STEP3,
                graph=graph.add_edge(u, v),
                scheme=fixed,
                ops=(ConstructionOp.cross(u, v),),
            )
        )
    return variants


def _step4a(scheme: PairScheme, graph: Graph, base: Graph | None) -> list[ConstructionVariant]:
    scheme = _resolve_fixed(scheme, graph, base)
    a, b = _two_unfixed(scheme)
    return [
        ConstructionVariant(
            label=f"e{u},{v}",
            stage=Stage.STEP4A,
            graph=graph.add_edge(u, v),
            scheme=scheme,
            ops=(ConstructionOp.cross(u, v),),
        )
        for u, v in sorted(_legal_edges(scheme, graph, base, _between_pairs(scheme, a, b)))
    ]


def satellite_patterns(scheme: PairScheme) -> list[tuple[int, int]]:
    """The six two-node attachments of a new node to the unfixed pairs.

    Same-group nodes of the two pairs, the two opposite-group non-pair
    choices, then each full pair.
    """
    a, b = _two_unfixed(scheme)
    ua, la = scheme.pair(a)
    ub, lb = scheme.pair(b)
    return [(ua, ub), (la, lb), (ua, lb), (ub, la), (ua, la), (ub, lb)]


def _satellite_variant(
    scheme: PairScheme,
    graph: Graph,
    base: Graph | None,
    attach: Sequence[int],
    label: str,
    stage: Stage,
    extra_ops: tuple[ConstructionOp, ...] = (),
) -> ConstructionVariant:
    new_scheme, grown = add_satellite(scheme, graph, attach)
    node = grown.n
    violations = _crossing_log(new_scheme, grown, base, [(node, a) for a in attach])
    return ConstructionVariant(
        label=label,
        stage=stage,
        graph=grown,
        scheme=new_scheme,
        ops=extra_ops + (ConstructionOp.satellite(*attach),),
        violations=tuple(violations),
    )


def _step4b(scheme: PairScheme, graph: Graph, base: Graph | None) -> list[ConstructionVariant]:
    scheme = _resolve_fixed(scheme, graph, base)
    return [
        _satellite_variant(scheme, graph, base, attach, ascii_lowercase[i], Stage.STEP4B)
        for i, attach in enumerate(satellite_patterns(scheme))
    ]


def _step4c(scheme: PairScheme, graph: Graph, base: Graph | None) -> list[ConstructionVariant]:
    scheme = _resolve_fixed(scheme, graph, base)
    a, b = _two_unfixed(scheme)
    variants = []
    for full, other in ((a, b), (b, a)):
        for third in scheme.pair(other):
            attach = (*scheme.pair(full), third)
            label = ascii_lowercase[len(variants)]
            variants.append(_satellite_variant(scheme, graph, base, attach, label, Stage.STEP4C))
    return variants


def _step5(scheme: PairScheme, graph: Graph, base: Graph | None) -> list[ConstructionVariant]:
    cross_edges = [v.ops[0].edge for v in _step4a(scheme, graph, base)]
    scheme = _resolve_fixed(scheme, graph, base)
    variants = []
    for attach in satellite_patterns(scheme):
        for edge in cross_edges:
            assert edge is not None
            u, v = edge
            label = ascii_lowercase[len(variants)]
            crossed = graph.add_edge(u, v)
            variant = _satellite_variant(
                scheme, crossed, base, attach, label, Stage.STEP5, (ConstructionOp.cross(u, v),)
            )
            edge_log = _crossing_log(variant.scheme, variant.graph, base, [(u, v)])
            variants.append(variant.model_copy(update={"violations": tuple(edge_log) + variant.violations}))
    return _dedupe(variants)


def _step6(scheme: PairScheme, graph: Graph, base: Graph | None) -> list[ConstructionVariant]:
    variants = []
    for source in _step4c(scheme, graph, base):
        a, b = _two_unfixed(source.scheme)
        for u, v in sorted(
            _legal_edges(source.scheme, source.graph, base, _between_pairs(source.scheme, a, b))
        ):
            variants.append(
                ConstructionVariant(
                    label=f"{source.label}+e{u},{v}",
                    stage=Stage.STEP6,
                    graph=source.graph.add_edge(u, v),
                    scheme=source.scheme,
                    ops=source.ops + (ConstructionOp.cross(u, v),),
                    violations=source.violations,
                )
            )
    return _dedupe(variants)


def _step7(scheme: PairScheme, graph: Graph, base: Graph | None) -> list[ConstructionVariant]:
    """Eight extensions by a new node joined to a fixed pair's same-group nodes.

    (a) upper fixed nodes; (b), (c) add an upper unfixed node; (d) lower fixed
    nodes; (e), (f) add a lower unfixed node; (g), (h) add the opposite
    endpoint of the edge joining the fixed pairs. The last two only go
    through the non-crossing check.
    """
    scheme = _resolve_fixed(scheme, graph, base)
    fixed = scheme.fixed_pairs()
    if len(fixed) != 2:
        raise InapplicableStageError(f"stage needs exactly two fixed pairs, found {list(fixed)}")
    a, b = _two_unfixed(scheme)
    upper_end, lower_end = _fixed_cross_edge(scheme, graph, base)
    f1, f2 = fixed
    upper_fixed = (scheme.pair(f1)[0], scheme.pair(f2)[0])
    lower_fixed = (scheme.pair(f1)[1], scheme.pair(f2)[1])
    upper_free = (scheme.pair(a)[0], scheme.pair(b)[0])
    lower_free = (scheme.pair(a)[1], scheme.pair(b)[1])

    patterns = [
        upper_fixed,
        (*upper_fixed, upper_free[0]),
        (*upper_fixed, upper_free[1]),
        lower_fixed,
        (*lower_fixed, lower_free[0]),
        (*lower_fixed, lower_free[1]),
        (*upper_fixed, lower_end),
        (*lower_fixed, upper_end),
    ]
    logger.debug("Patterns g and h reach across to nodes %d and %d (non-crossing rule only)", lower_end, upper_end)
    return [
        _satellite_variant(scheme, graph, base, attach, ascii_lowercase[i], Stage.STEP7)
        for i, attach in enumerate(patterns)
    ]


_STAGES = {
    Stage.STEP3: _step3,
    Stage.STEP4A: _step4a,
    Stage.STEP4B: _step4b,
    Stage.STEP4C: _step4c,
    Stage.STEP5: _step5,
    Stage.STEP6: _step6,
    Stage.STEP7: _step7,
}


def enumerate_variants(
    scheme: PairScheme, graph: Graph, stage: Stage | str, base: Graph | None = None
) -> list[ConstructionVariant]:
    """All graphs reachable by one legal choice at `stage`, deduplicated.

    Args:
        scheme: Scheme describing the configuration of `graph`.
        graph: Current graph.
        stage: Stage identifier such as ``"step3"``.
        base: Base graph; its edges are not part of the schematic.

    Raises:
        InapplicableStageError: If the stage does not apply to the configuration.
    """
    try:
        stage = Stage(stage)
    except ValueError as exc:
        raise InapplicableStageError(f"unknown stage {stage!r}") from exc
    _require_pairs_covered(scheme, graph)
    variants = _dedupe(_STAGES[stage](scheme, graph, base))
    logger.info("Stage %s produced %d variant(s)", stage.value, len(variants))
    return variants


def verify_variants(variants: Iterable[ConstructionVariant]) -> list[ConstructionVariant]:
    """Attach the exact perfect-controllability verdict to each variant."""
    verified = []
    for variant in variants:
        perfect = is_perfect_exact(variant.graph)
        logger.debug("Variant %s: %s", variant.label, "perfect" if perfect else "not-perfect")
        verified.append(variant.model_copy(update={"perfect": perfect}))
    return verified


STEP7_SOURCE_STAGES = (Stage.STEP4B, Stage.STEP4C, Stage.STEP5, Stage.STEP6)


class Step7Row(BaseModel):
    """One step-7 extension of one source graph, with both exact verdicts."""

    model_config = ConfigDict(frozen=True)

    source_stage: Stage
    source_label: str
    source_perfect: bool
    label: str
    perfect: bool
    graph: Graph


class Step7Batch(BaseModel):
    model_config = ConfigDict(frozen=True)

    rows: tuple[Step7Row, ...]

    @property
    def source_count(self) -> int:
        return len({(r.source_stage, r.source_label) for r in self.rows})

    def perfect_count(self) -> int:
        return sum(1 for r in self.rows if r.perfect)

    def failures(self) -> list[Step7Row]:
        return [r for r in self.rows if not r.perfect]

    def render(self) -> str:
        lines = [
            f"# step7 batch: {self.source_count} source graph(s), {len(self.rows)} extension(s), "
            f"{self.perfect_count()} perfectly controllable",
            f"{'source':<20} {'source verdict':<14} {'variant':<8} verdict",
        ]
        for row in self.rows:
            source = f"{row.source_stage.value}:{row.source_label}"
            source_verdict = "perfect" if row.source_perfect else "not-perfect"
            verdict = "perfect" if row.perfect else "not-perfect"
            lines.append(f"{source:<20} {source_verdict:<14} {row.label:<8} {verdict}")
        return "\n".join(lines)


def step7_batch(
    scheme: PairScheme,
    graph: Graph,
    base: Graph | None = None,
    sources: Sequence[Stage | str] = STEP7_SOURCE_STAGES,
) -> Step7Batch:
    """Run step 7 on every graph the source stages produce and verify each result.

    Args:
        scheme: Scheme after steps 1-3.
        graph: Graph after steps 1-3.
        base: Base graph; its edges are not part of the schematic.
        sources: Stages whose variants feed step 7.

    Raises:
        InapplicableStageError: If a source stage does not apply.
    """
    rows = []
    for stage in sources:
        for source in verify_variants(enumerate_variants(scheme, graph, stage, base=base)):
            assert source.perfect is not None
            extensions = verify_variants(enumerate_variants(source.scheme, source.graph, Stage.STEP7, base=base))
            for ext in extensions:
                assert ext.perfect is not None
                rows.append(
                    Step7Row(
                        source_stage=source.stage,
                        source_label=source.label,
                        source_perfect=source.perfect,
                        label=ext.label,
                        perfect=ext.perfect,
                        graph=ext.graph,
                    )
                )
    batch = Step7Batch(rows=tuple(rows))
    logger.info(
        "Step 7 batch: %d extensions of %d sources, %d perfect",
        len(rows),
        batch.source_count,
        batch.perfect_count(),
    )
    return batch
