"""Undirected simple graphs on labeled agents and their Laplacian matrices."""

from __future__ import annotations

import logging
from collections.abc import Iterable, Mapping, Sequence
from itertools import combinations
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components as _csgraph_components

logger = logging.getLogger(__name__)

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised when an operation would break a graph invariant."""


class LaplacianError(ValueError):
    """Raised when a matrix is not a valid graph Laplacian."""


def normalize_edge(i: int, j: int) -> Edge:
    """Return the unordered pair {i, j} as an ascending tuple."""
    return (i, j) if i < j else (j, i)


def _require_nodes(n: int) -> None:
    if n < 1:
        raise GraphError(f"a graph needs at least one node, got n={n}")


class Graph(BaseModel):
    """Immutable undirected simple graph on nodes 1..n.

    Mutating operations return new graphs so construction scripts can be
    replayed and diffed.
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    edges: frozenset[Edge] = frozenset()

    @field_validator("edges", mode="before")
    @classmethod
    def _normalize_edges(cls, value: Any) -> frozenset[Edge]:
        seen: set[Edge] = set()
        for raw in value:
            i, j = (int(v) for v in raw)
            if i == j:
                raise ValueError(f"self-loop on node {i}")
            edge = normalize_edge(i, j)
            if edge in seen:
                raise ValueError(f"duplicate edge {edge}")
            seen.add(edge)
        return frozenset(seen)

    @model_validator(mode="after")
    def _check_range(self) -> "Graph":
        for i, j in self.edges:
            if i < 1 or j > self.n:
                raise ValueError(f"edge ({i}, {j}) references a node outside 1..{self.n}")
        return self

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def empty(cls, n: int) -> "Graph":
        """Graph with n isolated nodes."""
        _require_nodes(n)
        return cls.model_construct(n=n, edges=frozenset())

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """Build a graph by adding edges one at a time with full validation."""
        graph = cls.empty(n)
        for i, j in edges:
            graph = graph.add_edge(i, j)
        return graph

    @classmethod
    def trusted(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        """Build a graph from already-normalized edges without validation.

        Used by the enumeration hot paths, which generate edges from the
        canonical pair list and never produce invalid input.
        """
        return cls.model_construct(n=n, edges=frozenset(edges))

    @classmethod
    def path(cls, n: int) -> "Graph":
        _require_nodes(n)
        return cls.trusted(n, ((i, i + 1) for i in range(1, n)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise GraphError("a cycle needs at least three nodes")
        return cls.trusted(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])

    @classmethod
    def complete(cls, n: int) -> "Graph":
        _require_nodes(n)
        return cls.trusted(n, combinations(range(1, n + 1), 2))

    # ------------------------------------------------------------------
    # Mutation (returns new graphs)
    # ------------------------------------------------------------------

    def check_node(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise GraphError(f"node {i} is outside 1..{self.n}")

    def add_edge(self, i: int, j: int) -> "Graph":
        """Return a copy with the edge {i, j} added.

        Raises:
            GraphError: On a self-loop, a duplicate edge, or an unknown node.
        """
        self.check_node(i)
        self.check_node(j)
        if i == j:
            raise GraphError(f"self-loop on node {i} is not allowed")
        edge = normalize_edge(i, j)
        if edge in self.edges:
            raise GraphError(f"edge {edge} already present")
        return Graph.trusted(self.n, self.edges | {edge})

    def add_nodes(self, count: int = 1) -> "Graph":
        """Return a copy with `count` new isolated nodes labeled n+1, n+2, ..."""
        if count < 0:
            raise GraphError("cannot add a negative number of nodes")
        return Graph.trusted(self.n + count, self.edges)

    def with_edges(self, edges: Iterable[Sequence[int]]) -> "Graph":
        """Return a copy with every edge in `edges` added (validated)."""
        graph = self
        for i, j in edges:
            graph = graph.add_edge(i, j)
        return graph

    def relabel(self, perm: Mapping[int, int] | Sequence[int]) -> "Graph":
        """Apply a node relabeling; a sequence maps node i to perm[i-1]."""
        mapping = dict(perm) if isinstance(perm, Mapping) else {i + 1: p for i, p in enumerate(perm)}
        if sorted(mapping) != list(range(1, self.n + 1)) or sorted(mapping.values()) != list(
            range(1, self.n + 1)
        ):
            raise GraphError("relabeling must be a permutation of 1..n")
        return Graph.trusted(self.n, (normalize_edge(mapping[i], mapping[j]) for i, j in self.edges))

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def nodes(self) -> range:
        return range(1, self.n + 1)

    def has_edge(self, i: int, j: int) -> bool:
        return normalize_edge(i, j) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def neighbors(self, i: int) -> tuple[int, ...]:
        self.check_node(i)
        return tuple(sorted(b if a == i else a for a, b in self.edges if i in (a, b)))

    def degree(self, i: int) -> int:
        """Number of neighbors of node i (the diagonal Laplacian entry)."""
        self.check_node(i)
        return sum(1 for edge in self.edges if i in edge)

    def adjacency(self) -> np.ndarray:
        """0/1 adjacency matrix A with a_ij = 1 iff {i, j} is an edge."""
        adj = np.zeros((self.n, self.n), dtype=np.int64)
        if self.edges:
            idx = np.asarray(sorted(self.edges), dtype=np.intp) - 1
            adj[idx[:, 0], idx[:, 1]] = 1
            adj[idx[:, 1], idx[:, 0]] = 1
        return adj

    def laplacian_array(self) -> np.ndarray:
        """Integer Laplacian L = Δ - A as a numpy array."""
        adj = self.adjacency()
        return np.diag(adj.sum(axis=1)) - adj

    def laplacian(self) -> "LaplacianMatrix":
        return LaplacianMatrix.from_array(self.laplacian_array())

    def connected_components(self) -> list[tuple[int, ...]]:
        """Connected components, each sorted, ordered by smallest member."""
        count, labels = _csgraph_components(csr_matrix(self.adjacency()), directed=False)
        groups: list[list[int]] = [[] for _ in range(count)]
        for node, label in enumerate(labels, start=1):
            groups[label].append(node)
        return sorted(tuple(group) for group in groups)

    def is_connected(self) -> bool:
        return len(self.connected_components()) == 1


def _laplacian_violation(arr: np.ndarray) -> str | None:
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        return f"expected a square matrix, got shape {arr.shape}"
    if not np.array_equal(arr, arr.T):
        return "matrix is not symmetric"
    off = arr - np.diag(np.diag(arr))
    if not np.isin(off, (0, -1)).all():
        return "off-diagonal entries must be 0 or -1"
    if arr.size and np.any(arr.sum(axis=1) != 0):
        return "rows must sum to zero"
    return None


class LaplacianMatrix(BaseModel):
    """Symmetric integer matrix L = Δ - A of an undirected simple graph."""

    model_config = ConfigDict(frozen=True)

    entries: tuple[tuple[int, ...], ...]

    @model_validator(mode="after")
    def _check_invariants(self) -> "LaplacianMatrix":
        problem = _laplacian_violation(np.asarray(self.entries, dtype=np.int64).reshape(self.n, -1))
        if problem:
            raise ValueError(problem)
        return self

    @classmethod
    def from_array(cls, arr: np.ndarray) -> "LaplacianMatrix":
        """Wrap an integer array, checking the Laplacian invariants.

        Raises:
            LaplacianError: If the array is not a graph Laplacian.
        """
        arr = np.asarray(arr)
        if not np.issubdtype(arr.dtype, np.integer):
            if not np.array_equal(arr, np.round(arr)):
                raise LaplacianError("Laplacian entries must be integers")
            arr = arr.astype(np.int64)
        problem = _laplacian_violation(arr)
        if problem:
            raise LaplacianError(problem)
        return cls.model_construct(entries=tuple(tuple(int(v) for v in row) for row in arr))

    @property
    def n(self) -> int:
        return len(self.entries)

    def to_numpy(self, dtype: Any = np.int64) -> np.ndarray:
        return np.asarray(self.entries, dtype=dtype).reshape(self.n, self.n)

    def principal_submatrix(self, node: int) -> np.ndarray:
        """L with row and column `node` (1-based) deleted."""
        arr = self.to_numpy()
        keep = [i for i in range(self.n) if i != node - 1]
        return arr[np.ix_(keep, keep)]

    def to_graph(self) -> Graph:
        arr = self.to_numpy()
        return Graph.trusted(
            self.n,
            ((i + 1, j + 1) for i in range(self.n) for j in range(i + 1, self.n) if arr[i, j] == -1),
        )
