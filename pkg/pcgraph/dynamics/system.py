"""Follower dynamics dx_f/dt = A x_f + B x_l with A = -L_f and B = -L_fl."""

from __future__ import annotations

from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, PrivateAttr, model_validator

from pcgraph.core.graph.engine import Graph
from pcgraph.core.leaders.partition import LeaderSet, PartitionedLaplacian, partition_laplacian


class DimensionError(ValueError):
    """Raised when a state or input vector has the wrong length."""


class FollowerSystem(BaseModel):
    """Linear follower system with the leader states as inputs.

    A is symmetric negative semidefinite, so the propagator e^{At} is
    evaluated through one eigendecomposition cached at construction.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    A: np.ndarray
    B: np.ndarray
    follower_order: tuple[int, ...]
    leader_order: tuple[int, ...]

    _evals: np.ndarray = PrivateAttr()
    _evecs: np.ndarray = PrivateAttr()

    @model_validator(mode="after")
    def _check_shape(self) -> "FollowerSystem":
        n_f = len(self.follower_order)
        if self.A.shape != (n_f, n_f) or self.B.shape != (n_f, len(self.leader_order)):
            raise ValueError("A and B shapes do not match the node orders")
        if not np.allclose(self.A, self.A.T):
            raise ValueError("A must be symmetric")
        return self

    def model_post_init(self, __context: Any) -> None:
        evals, evecs = np.linalg.eigh(self.A) if self.n_f else (np.zeros(0), np.zeros((0, 0)))
        if evals.size and evals.max() > 1e-9 * max(1.0, float(np.abs(evals).max())):
            raise ValueError("A must be negative semidefinite")
        self._evals = evals
        self._evecs = evecs

    @classmethod
    def from_partition(cls, partition: PartitionedLaplacian) -> "FollowerSystem":
        return cls(
            A=-partition.L_f.astype(float),
            B=-partition.L_fl.astype(float),
            follower_order=partition.follower_order,
            leader_order=partition.leader_order,
        )

    @classmethod
    def from_graph(cls, graph: Graph, leaders: LeaderSet) -> "FollowerSystem":
        return cls.from_partition(partition_laplacian(graph.laplacian(), leaders))

    @property
    def n_f(self) -> int:
        return len(self.follower_order)

    @property
    def l(self) -> int:  # noqa: E743
        return len(self.leader_order)

    @property
    def eigenvalues(self) -> np.ndarray:
        return self._evals

    @property
    def eigenvectors(self) -> np.ndarray:
        return self._evecs

    def propagator(self, t: float) -> np.ndarray:
        """e^{At} by spectral decomposition."""
        Q = self._evecs
        return (Q * np.exp(self._evals * t)) @ Q.T

    def rhs(self, x: np.ndarray, u: np.ndarray) -> np.ndarray:
        return self.A @ x + self.B @ u

    def check_state(self, x: np.ndarray, name: str = "state") -> np.ndarray:
        arr = np.asarray(x, dtype=float).reshape(-1)
        if arr.shape[0] != self.n_f:
            raise DimensionError(f"{name} has length {arr.shape[0]}, expected {self.n_f} followers")
        return arr
