"""Leader sets and the leader/follower partition of a Laplacian."""

from __future__ import annotations

import re
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator

from pcgraph.core.graph.engine import LaplacianMatrix


class LeaderSetError(ValueError):
    """Raised for empty, duplicated or out-of-range leader selections."""


class LeaderSet(BaseModel):
    """Nonempty set of leader nodes."""

    model_config = ConfigDict(frozen=True)

    members: frozenset[int]

    @field_validator("members", mode="before")
    @classmethod
    def _validate_members(cls, value: Any) -> frozenset[int]:
        items = [int(v) for v in value]
        if not items:
            raise ValueError("leader set must be nonempty")
        if len(set(items)) != len(items):
            raise ValueError(f"duplicate leader in {sorted(items)}")
        if min(items) < 1:
            raise ValueError("leader labels start at 1")
        return frozenset(items)

    @classmethod
    def of(cls, *nodes: int) -> "LeaderSet":
        try:
            return cls(members=list(nodes))
        except ValueError as exc:
            raise LeaderSetError(str(exc)) from exc

    @classmethod
    def parse(cls, text: str) -> "LeaderSet":
        """Parse ``"1,3"`` or ``"1 3"``.

        Raises:
            LeaderSetError: On empty or malformed input.
        """
        tokens = [t for t in re.split(r"[\s,]+", text.strip().strip("{}[]")) if t]
        if not tokens:
            raise LeaderSetError("leader set must be nonempty")
        try:
            nodes = [int(t) for t in tokens]
        except ValueError as exc:
            raise LeaderSetError(f"invalid leader list {text!r}") from exc
        return cls.of(*nodes)

    @property
    def nodes(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    @property
    def size(self) -> int:
        return len(self.members)

    def check_range(self, n: int) -> None:
        bad = [v for v in self.nodes if v > n]
        if bad:
            raise LeaderSetError(f"leader(s) {bad} outside 1..{n}")

    def label(self) -> str:
        return "{" + ",".join(str(v) for v in self.nodes) + "}"

    def __str__(self) -> str:
        return self.label()

    def __lt__(self, other: "LeaderSet") -> bool:
        return (self.size, self.nodes) < (other.size, other.nodes)


class PartitionedLaplacian(BaseModel):
    """Laplacian blocks after moving leaders last.

    With followers f and leaders l the follower dynamics read
    dx_f/dt = -L_f x_f - L_fl x_l.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    L_f: np.ndarray
    L_fl: np.ndarray
    L_lf: np.ndarray
    L_l: np.ndarray
    follower_order: tuple[int, ...]
    leader_order: tuple[int, ...]

    @property
    def n_f(self) -> int:
        return len(self.follower_order)

    @property
    def l(self) -> int:  # noqa: E743
        return len(self.leader_order)

    def reassemble(self) -> np.ndarray:
        """The original L, with rows and columns back in node order."""
        n = self.n_f + self.l
        order = np.asarray(self.follower_order + self.leader_order, dtype=np.intp) - 1
        permuted = np.block([[self.L_f, self.L_fl], [self.L_lf, self.L_l]]) if n else np.zeros((0, 0))
        out = np.zeros((n, n), dtype=permuted.dtype)
        out[np.ix_(order, order)] = permuted
        return out


def partition_laplacian(L: LaplacianMatrix | np.ndarray, leaders: LeaderSet) -> PartitionedLaplacian:
    """Split L into follower/leader blocks.

    Raises:
        LeaderSetError: If a leader is not a node of L.
    """
    arr = L.to_numpy() if isinstance(L, LaplacianMatrix) else np.asarray(L)
    n = arr.shape[0]
    leaders.check_range(n)
    leader_order = leaders.nodes
    follower_order = tuple(v for v in range(1, n + 1) if v not in leaders.members)
    f = np.asarray(follower_order, dtype=np.intp) - 1
    ld = np.asarray(leader_order, dtype=np.intp) - 1
    return PartitionedLaplacian(
        L_f=arr[np.ix_(f, f)],
        L_fl=arr[np.ix_(f, ld)],
        L_lf=arr[np.ix_(ld, f)],
        L_l=arr[np.ix_(ld, ld)],
        follower_order=follower_order,
        leader_order=leader_order,
    )
