"""Controllability of leader-follower consensus networks.

Followers obey dx_f/dt = A x_f + B x_l with A = -L_f and B = -L_fl. Two
tests are offered: the Kalman rank of [B, AB, ..., A^(n_f-1) B] and the
eigenvector (PBH) test, under which a leader set is uncontrollable iff some
Laplacian eigenvector vanishes on every leader.
"""

from __future__ import annotations

import logging
from collections.abc import Mapping
from itertools import combinations
from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix

from pcgraph.config import get_settings
from pcgraph.core.graph.engine import Graph
from pcgraph.core.leaders.partition import LeaderSet, PartitionedLaplacian, partition_laplacian
from pcgraph.core.spectral.analysis import eigendecompose

logger = logging.getLogger(__name__)

KalmanMethod = Literal["auto", "exact", "numeric"]
Classification = dict[LeaderSet, bool]


class SizeGuardError(ValueError):
    """Raised when an exhaustive enumeration would exceed its size guard."""


def controllability_matrix(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """[B, AB, A^2 B, ..., A^(n-1) B] in floating point."""
    A = np.asarray(A, dtype=float)
    B = np.asarray(B, dtype=float)
    blocks = [B]
    for _ in range(1, A.shape[0]):
        blocks.append(A @ blocks[-1])
    return np.hstack(blocks)


def _to_domain(arr: np.ndarray) -> DomainMatrix:
    rows, cols = arr.shape
    return DomainMatrix([[ZZ(int(v)) for v in row] for row in arr], (rows, cols), ZZ)


def exact_controllability_rank(A: np.ndarray, B: np.ndarray) -> int:
    """Rank of the controllability matrix computed over the rationals."""
    n = A.shape[0]
    if n == 0:
        return 0
    dA = _to_domain(np.asarray(A))
    blocks = [_to_domain(np.asarray(B))]
    for _ in range(1, n):
        blocks.append(dA.matmul(blocks[-1]))
    ctrb = blocks[0].hstack(*blocks[1:]) if len(blocks) > 1 else blocks[0]
    return int(ctrb.to_field().rank())


def numeric_controllability_rank(A: np.ndarray, B: np.ndarray) -> int:
    """Singular-value rank with threshold n * eps * sigma_max."""
    n = A.shape[0]
    if n == 0:
        return 0
    sigma = np.linalg.svd(controllability_matrix(A, B), compute_uv=False)
    if sigma.size == 0 or sigma[0] == 0.0:
        return 0
    threshold = n * np.finfo(float).eps * sigma[0]
    return int(np.count_nonzero(sigma > threshold))


def kalman_controllable(partition: PartitionedLaplacian, method: KalmanMethod = "auto") -> bool:
    """Kalman rank test on the follower dynamics.

    ``auto`` uses exact rational rank up to ``exact_rank_max_n`` followers
    and the SVD rank beyond. No followers means vacuously controllable.
    """
    n_f = partition.n_f
    if n_f == 0:
        return True
    if method == "auto":
        method = "exact" if n_f <= get_settings().exact_rank_max_n else "numeric"
    A = -partition.L_f
    B = -partition.L_fl
    rank = exact_controllability_rank(A, B) if method == "exact" else numeric_controllability_rank(A, B)
    return rank == n_f


class PbhResult(BaseModel):
    """Outcome of the eigenvector test, with the offending eigenvalue on failure."""

    model_config = ConfigDict(frozen=True)

    controllable: bool
    witness_eigenvalue: float | None = None
    eigenspace_dim: int | None = None

    def __bool__(self) -> bool:
        return self.controllable


def eigenvalue_clusters(values: np.ndarray, tol: float) -> list[list[int]]:
    """Group indices of sorted eigenvalues whose consecutive gaps are <= tol."""
    clusters: list[list[int]] = []
    for idx in range(values.shape[0]):
        if clusters and values[idx] - values[clusters[-1][-1]] <= tol:
            clusters[-1].append(idx)
        else:
            clusters.append([idx])
    return clusters


def pbh_test(graph: Graph, leaders: LeaderSet, tol: float | None = None) -> PbhResult:
    """Eigenspace test for a leader set.

    For every eigenvalue, the rows of an orthonormal eigenspace basis at the
    leader nodes must have full column rank; otherwise some combination of
    eigenvectors vanishes on all leaders.
    """
    settings = get_settings()
    tol = settings.pbh_rank_tol if tol is None else tol
    leaders.check_range(graph.n)
    report = eigendecompose(graph.laplacian())
    values = report.eigenvalues
    rows = np.asarray(leaders.nodes, dtype=np.intp) - 1
    for cluster in eigenvalue_clusters(values, settings.tol_gap(float(values[-1]))):
        basis = report.eigenvectors[:, cluster]
        leader_rows = basis[rows, :]
        dim = len(cluster)
        if leader_rows.shape[0] < dim:
            ok = False
        else:
            sigma = np.linalg.svd(leader_rows, compute_uv=False)
            ok = bool(sigma.min() > tol)
        if not ok:
            witness = float(values[cluster[0]])
            logger.debug("Leaders %s fail at eigenvalue %.4f (multiplicity %d)", leaders, witness, dim)
            return PbhResult(controllable=False, witness_eigenvalue=witness, eigenspace_dim=dim)
    return PbhResult(controllable=True)


def pbh_controllable(graph: Graph, leaders: LeaderSet, tol: float | None = None) -> bool:
    return pbh_test(graph, leaders, tol).controllable


def is_controllable(graph: Graph, leaders: LeaderSet, method: KalmanMethod = "auto") -> bool:
    leaders.check_range(graph.n)
    return kalman_controllable(partition_laplacian(graph.laplacian(), leaders), method)


def _check_guard(graph: Graph) -> None:
    guard = get_settings().subset_guard
    if graph.n > guard:
        raise SizeGuardError(f"refusing to enumerate 2^{graph.n} leader sets (guard n <= {guard})")


def all_leader_sets(n: int) -> list[LeaderSet]:
    """Every nonempty subset of 1..n, by size then lexicographically."""
    nodes = range(1, n + 1)
    return [LeaderSet.of(*combo) for size in nodes for combo in combinations(nodes, size)]


def classify_all_leader_sets(graph: Graph, method: KalmanMethod = "auto") -> Classification:
    """Kalman verdict for every nonempty leader set.

    Raises:
        SizeGuardError: If n exceeds the configured subset guard.
    """
    _check_guard(graph)
    L = graph.laplacian()
    return {s: kalman_controllable(partition_laplacian(L, s), method) for s in all_leader_sets(graph.n)}


def perfect_by_definition(graph: Graph, method: KalmanMethod = "auto") -> bool:
    """True iff every leader selection yields a controllable follower system."""
    return all(classify_all_leader_sets(graph, method).values())


def controllable_singletons(graph: Graph, method: KalmanMethod = "auto") -> dict[int, bool]:
    """Kalman verdict for each single-leader selection.

    By leader monotonicity these decide perfect controllability with n tests
    instead of 2^n - 1.
    """
    L = graph.laplacian()
    return {v: kalman_controllable(partition_laplacian(L, LeaderSet.of(v)), method) for v in graph.nodes}


def monotonicity_violations(classification: Mapping[LeaderSet, bool]) -> list[tuple[LeaderSet, LeaderSet]]:
    """Pairs (S, S + {v}) where S is controllable but the larger set is not.

    Checking one-node extensions suffices: a violation between any S and a
    superset implies one along a chain of single-node extensions.
    """
    violations: list[tuple[LeaderSet, LeaderSet]] = []
    if not classification:
        return violations
    n = max(max(s.members) for s in classification)
    for subset, ok in classification.items():
        if not ok:
            continue
        for v in range(1, n + 1):
            if v in subset.members:
                continue
            bigger = LeaderSet.of(*subset.members, v)
            if classification.get(bigger) is False:
                violations.append((subset, bigger))
    return violations


def uncontrollable_sets(classification: Mapping[LeaderSet, bool]) -> list[LeaderSet]:
    return sorted(s for s, ok in classification.items() if not ok)


def render_classification(classification: Mapping[LeaderSet, bool]) -> str:
    """One line per leader set plus a summary line."""
    lines = [
        f"{s.label()} {'controllable' if ok else 'uncontrollable'}"
        for s, ok in sorted(classification.items(), key=lambda item: item[0])
    ]
    bad = sum(1 for ok in classification.values() if not ok)
    lines.append(
        f"summary: {len(classification)} sets, {len(classification) - bad} controllable, {bad} uncontrollable"
    )
    return "\n".join(lines)
