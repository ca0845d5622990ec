"""Leader selection and controllability tests."""

from pcgraph.core.leaders.controllability import (
    PbhResult,
    SizeGuardError,
    all_leader_sets,
    classify_all_leader_sets,
    controllability_matrix,
    controllable_singletons,
    exact_controllability_rank,
    is_controllable,
    kalman_controllable,
    monotonicity_violations,
    numeric_controllability_rank,
    pbh_controllable,
    pbh_test,
    perfect_by_definition,
    render_classification,
    uncontrollable_sets,
)
from pcgraph.core.leaders.partition import (
    LeaderSet,
    LeaderSetError,
    PartitionedLaplacian,
    partition_laplacian,
)

__all__ = [
    "LeaderSet",
    "LeaderSetError",
    "PartitionedLaplacian",
    "PbhResult",
    "SizeGuardError",
    "all_leader_sets",
    "classify_all_leader_sets",
    "controllability_matrix",
    "controllable_singletons",
    "exact_controllability_rank",
    "is_controllable",
    "kalman_controllable",
    "monotonicity_violations",
    "numeric_controllability_rank",
    "partition_laplacian",
    "pbh_controllable",
    "pbh_test",
    "perfect_by_definition",
    "render_classification",
    "uncontrollable_sets",
]
