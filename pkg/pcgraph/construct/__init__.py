"""Step-by-step construction of perfectly controllable graphs over double node sets."""

from pcgraph.construct.scheme import (
    PairScheme,
    Rule,
    RuleViolation,
    SchemeError,
    add_intra_pair_edges,
    add_satellite,
    check_no_crossing,
    init_scheme,
    schematic_edges,
    segments_cross,
    validate_cross_edge,
)
from pcgraph.construct.script import (
    ConstructionOp,
    ConstructionScript,
    LogEntry,
    OpKind,
    ScriptError,
    ScriptRun,
    load_script,
    parse_script,
    run_script,
)
from pcgraph.construct.variants import (
    ConstructionVariant,
    InapplicableStageError,
    Stage,
    Step7Batch,
    Step7Row,
    enumerate_variants,
    satellite_patterns,
    step7_batch,
    verify_variants,
)

__all__ = [
    "ConstructionOp",
    "ConstructionScript",
    "ConstructionVariant",
    "InapplicableStageError",
    "LogEntry",
    "OpKind",
    "PairScheme",
    "Rule",
    "RuleViolation",
    "SchemeError",
    "ScriptError",
    "ScriptRun",
    "Stage",
    "Step7Batch",
    "Step7Row",
    "add_intra_pair_edges",
    "add_satellite",
    "check_no_crossing",
    "enumerate_variants",
    "init_scheme",
    "load_script",
    "parse_script",
    "run_script",
    "satellite_patterns",
    "schematic_edges",
    "segments_cross",
    "step7_batch",
    "validate_cross_edge",
    "verify_variants",
]
