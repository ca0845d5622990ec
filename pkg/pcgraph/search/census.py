"""Perfect-controllability censuses over labeled graphs.

Exhaustive mode walks every edge mask over the lexicographic pair list
(bit b set means pair b is an edge). Work splits into contiguous mask
ranges so any worker count yields the same row.
"""

from __future__ import annotations

import asyncio
import logging
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from pcgraph.config import get_settings
from pcgraph.core.exact.certify import is_perfect_exact
from pcgraph.core.graph.engine import Edge, Graph
from pcgraph.core.graph.graph_io import serialize_graph
from pcgraph.core.leaders.controllability import SizeGuardError
from pcgraph.utils.parallel import gather_in_processes, run_parallel

logger = logging.getLogger(__name__)

MAX_EXEMPLARS = 5
CSV_HEADER = "n,total,connected,perfect"


@dataclass
class CensusRow:
    """Counts for one node count; exemplars are canonical edge lists."""

    n: int
    total_graphs: int = 0
    connected_graphs: int = 0
    perfect_graphs: int = 0
    exemplars: list[str] = field(default_factory=list)
    sampled: bool = False
    seed: int | None = None
    edge_prob: float | None = None

    def __post_init__(self) -> None:
        if not self.perfect_graphs <= self.connected_graphs <= self.total_graphs:
            raise ValueError(
                f"inconsistent census counts: perfect={self.perfect_graphs} "
                f"connected={self.connected_graphs} total={self.total_graphs}"
            )

    @property
    def fraction_perfect(self) -> float:
        return self.perfect_graphs / self.total_graphs if self.total_graphs else 0.0

    def to_csv_row(self) -> str:
        return f"{self.n},{self.total_graphs},{self.connected_graphs},{self.perfect_graphs}"

    def to_dict(self) -> dict[str, object]:
        return {
            "n": self.n,
            "total": self.total_graphs,
            "connected": self.connected_graphs,
            "perfect": self.perfect_graphs,
            "fraction_perfect": self.fraction_perfect,
            "sampled": self.sampled,
            "seed": self.seed,
            "edge_prob": self.edge_prob,
            "exemplars": list(self.exemplars),
        }


def all_pairs(n: int) -> list[Edge]:
    return list(combinations(range(1, n + 1), 2))


def graph_from_mask(n: int, pairs: list[Edge], mask: int) -> Graph:
    return Graph.trusted(n, (pair for bit, pair in enumerate(pairs) if mask >> bit & 1))


def _tally(row: CensusRow, graph: Graph) -> None:
    row.total_graphs += 1
    if not graph.is_connected():
        return
    row.connected_graphs += 1
    if is_perfect_exact(graph):
        row.perfect_graphs += 1
        if len(row.exemplars) < MAX_EXEMPLARS:
            row.exemplars.append(serialize_graph(graph))


def census_chunk(n: int, start: int, stop: int) -> CensusRow:
    """Census over edge masks in [start, stop)."""
    pairs = all_pairs(n)
    row = CensusRow(n=n)
    for mask in range(start, stop):
        _tally(row, graph_from_mask(n, pairs, mask))
    return row


def merge_rows(rows: list[CensusRow]) -> CensusRow:
    """Combine chunk rows in chunk order; exemplars keep the first five overall."""
    merged = CensusRow(n=rows[0].n)
    for row in rows:
        merged.total_graphs += row.total_graphs
        merged.connected_graphs += row.connected_graphs
        merged.perfect_graphs += row.perfect_graphs
        merged.exemplars.extend(row.exemplars)
    merged.exemplars = merged.exemplars[:MAX_EXEMPLARS]
    return merged


def _chunks(n: int, workers: int) -> list[tuple[int, int, int]]:
    total = 1 << (n * (n - 1) // 2)
    parts = max(1, min(total, workers * 4))
    bounds = np.linspace(0, total, parts + 1, dtype=np.int64)
    return [(n, int(lo), int(hi)) for lo, hi in zip(bounds[:-1], bounds[1:]) if hi > lo]


def _check_census_guard(n: int) -> None:
    guard = get_settings().census_guard
    if n < 1:
        raise ValueError(f"node count must be positive, got {n}")
    if n > guard:
        raise SizeGuardError(f"exhaustive census is limited to n <= {guard}, got n={n}")


def pc_census(n: int, workers: int | None = None) -> CensusRow:
    """Exhaustive labeled census of perfectly controllable graphs on n nodes.

    Raises:
        SizeGuardError: If n exceeds the census guard.
    """
    _check_census_guard(n)
    workers = workers or get_settings().workers
    logger.info("Census n=%d over %d graphs with %d worker(s)", n, 1 << (n * (n - 1) // 2), workers)
    return merge_rows(run_parallel(census_chunk, _chunks(n, workers), workers))


async def pc_census_async(n: int, workers: int | None = None) -> CensusRow:
    """pc_census for callers already inside an event loop."""
    _check_census_guard(n)
    workers = workers or get_settings().workers
    if workers <= 1:
        return await asyncio.to_thread(pc_census, n, 1)
    return merge_rows(await gather_in_processes(census_chunk, _chunks(n, workers), workers))


def random_census(n: int, edge_prob: float, sample_count: int, seed: int) -> CensusRow:
    """Census over Erdős–Rényi samples drawn from ``numpy.random.default_rng(seed)``.

    Raises:
        ValueError: If the probability lies outside [0, 1].
        SizeGuardError: If n exceeds the sampled-census guard.
    """
    if not 0.0 <= edge_prob <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {edge_prob}")
    if sample_count < 0:
        raise ValueError("sample count must be non-negative")
    guard = get_settings().random_census_max_n
    if not 1 <= n <= guard:
        raise SizeGuardError(f"sampled census is limited to 1 <= n <= {guard}, got n={n}")

    rng = np.random.default_rng(seed)
    pairs = all_pairs(n)
    row = CensusRow(n=n, sampled=True, seed=seed, edge_prob=edge_prob)
    for _ in range(sample_count):
        picks = rng.random(len(pairs)) < edge_prob
        _tally(row, Graph.trusted(n, (pair for pair, keep in zip(pairs, picks) if keep)))
    logger.info("Sampled census n=%d: %d/%d perfect", n, row.perfect_graphs, row.total_graphs)
    return row
