"""Recover base topologies from a published Laplacian spectrum.

Given target eigenvalues and a fixed overlay of known edges, every base edge
set E0 of the implied size is tried and kept when the spectrum of
E0 + overlay matches the target. The trace identity sum(eigenvalues) = 2|E|
fixes |E0|; the second-moment identity sum(eigenvalues**2) = sum(d_i**2) + 2|E|
prunes most candidates before any eigenvalue is computed.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator
from itertools import combinations, islice
from pathlib import Path
from typing import Any

import numpy as np
import yaml
from pydantic import BaseModel, ConfigDict, Field, field_validator

from pcgraph.config import get_settings
from pcgraph.construct.scheme import PairScheme, find_crossing, init_scheme
from pcgraph.core.exact.certify import is_perfect_exact
from pcgraph.core.graph.engine import Edge, Graph
from pcgraph.core.graph.graph_io import serialize_graph
from pcgraph.core.spectral.analysis import eigendecompose, render_spectrum

logger = logging.getLogger(__name__)


class SpectrumInconsistencyError(ValueError):
    """Raised when a target spectrum cannot belong to any simple graph of the requested shape."""


class SpectrumTarget(BaseModel):
    """Target Laplacian eigenvalues (sorted ascending) with an absolute tolerance."""

    model_config = ConfigDict(frozen=True)

    values: tuple[float, ...]
    tolerance: float = Field(default=1e-3, gt=0)
    base_nodes: int | None = None

    @field_validator("values", mode="before")
    @classmethod
    def _sort(cls, value: Any) -> tuple[float, ...]:
        values = sorted(float(v) for v in value)
        if not values:
            raise ValueError("target spectrum is empty")
        return tuple(values)

    @property
    def node_count(self) -> int:
        return len(self.values)

    def implied_edge_count(self) -> int:
        """|E| from the trace identity.

        Raises:
            SpectrumInconsistencyError: If half the eigenvalue sum is not an integer within tolerance.
        """
        half = sum(self.values) / 2.0
        count = round(half)
        if abs(half - count) > self.node_count * self.tolerance:
            raise SpectrumInconsistencyError(
                f"eigenvalue sum {2 * half:.4f} is not twice an integer edge count"
            )
        return int(count)

    def second_moment(self) -> tuple[float, float]:
        """sum(eigenvalues**2) and the largest deviation the tolerance allows."""
        values = np.asarray(self.values)
        slack = float(np.sum(2.0 * np.abs(values) * self.tolerance + self.tolerance**2))
        return float(np.sum(values**2)), slack

    def matches(self, spectrum: Iterable[float]) -> bool:
        return _max_deviation(self.values, spectrum) <= self.tolerance

    @classmethod
    def load(cls, path: Path | str, tolerance: float | None = None) -> "SpectrumTarget":
        """Read a YAML mapping (values/tolerance/base_nodes) or whitespace-separated numbers."""
        text = Path(path).read_text(encoding="utf-8")
        payload = yaml.safe_load(text)
        if isinstance(payload, dict):
            data = dict(payload)
        elif isinstance(payload, list):
            data = {"values": payload}
        else:
            data = {"values": [float(tok) for tok in text.replace(",", " ").split() if not tok.startswith("#")]}
        if tolerance is not None:
            data["tolerance"] = tolerance
        data.setdefault("tolerance", get_settings().spectrum_match_tol)
        return cls(**data)


def _max_deviation(target: Iterable[float], spectrum: Iterable[float]) -> float:
    a = np.asarray(list(target), dtype=float)
    b = np.sort(np.asarray(list(spectrum), dtype=float))
    if a.shape != b.shape:
        return float("inf")
    return float(np.abs(a - b).max())


class ReconstructionCandidate(BaseModel):
    model_config = ConfigDict(frozen=True)

    base: Graph
    combined: Graph
    spectrum: tuple[float, ...]
    max_deviation: float
    perfect: bool
    respects_layout: bool | None = None


class ReconstructionReport(BaseModel):
    """All spectrum-consistent bases, ordered by their sorted edge lists."""

    model_config = ConfigDict(frozen=True)

    target: SpectrumTarget
    overlay: tuple[Edge, ...]
    base_nodes: int
    base_edge_count: int
    searched: int
    pruned: int
    candidates: tuple[ReconstructionCandidate, ...]

    @property
    def reproducible(self) -> bool:
        return bool(self.candidates)

    @property
    def pinned(self) -> ReconstructionCandidate | None:
        """Lexicographically smallest candidate. Ties between candidates are broken by this order alone."""
        return self.candidates[0] if self.candidates else None

    def render(self) -> str:
        lines = [
            f"target: {render_spectrum(self.target.values)} (tol {self.target.tolerance:g})",
            f"overlay: {' '.join(f'{u}-{v}' for u, v in self.overlay) or '(none)'}",
            f"base: {self.base_edge_count} edges on nodes 1..{self.base_nodes}; "
            f"{self.searched} edge sets searched, {self.pruned} passed the moment filter",
            f"candidates: {len(self.candidates)}",
        ]
        for index, cand in enumerate(self.candidates, start=1):
            layout = "" if cand.respects_layout is None else f", layout {'ok' if cand.respects_layout else 'crossing'}"
            lines.append(
                f"# candidate {index}: {'perfect' if cand.perfect else 'not-perfect'}, "
                f"max deviation {cand.max_deviation:.2e}{layout}"
            )
            lines.append(serialize_graph(cand.base).rstrip("\n"))
            lines.append(f"spectrum: {render_spectrum(cand.spectrum)}")
        if self.pinned is None:
            lines.append("no spectrum-consistent base found: the target is irreproducible with this overlay")
        else:
            edges = " ".join(f"{u}-{v}" for u, v in self.pinned.base.sorted_edges())
            lines.append(f"pinned (lexicographically smallest, a choice not a fact): {edges}")
        return "\n".join(lines)


def _batched(iterable: Iterator[tuple[int, ...]], size: int) -> Iterator[np.ndarray]:
    while True:
        chunk = list(islice(iterable, size))
        if not chunk:
            return
        yield np.asarray(chunk, dtype=np.intp)


def _layout_ok(scheme: PairScheme, combined: Graph, base: Graph) -> bool:
    drawn = combined.sorted_edges()
    for u, v in base.sorted_edges():
        others = [e for e in drawn if e != (u, v)]
        if find_crossing(scheme, others, u, v) is not None:
            return False
    return True


def reconstruct_base(
    target: SpectrumTarget,
    overlay: Iterable[Edge],
    node_count: int,
    base_nodes: int | None = None,
    scheme: PairScheme | None = None,
    respect_layout: bool = False,
    batch_size: int = 8192,
) -> ReconstructionReport:
    """Search base edge sets whose union with `overlay` has the target spectrum.

    Args:
        target: Eigenvalues to match.
        overlay: Known edges on nodes 1..node_count.
        node_count: Nodes in the combined graph.
        base_nodes: Base edges live on 1..base_nodes (default: all nodes).
        scheme: Layout used to flag candidates whose base edges cross the drawing.
        respect_layout: Drop candidates that cross the layout (needs `scheme`).
        batch_size: Edge sets per vectorized eigenvalue batch.

    Returns:
        ReconstructionReport; an empty candidate list is a legitimate outcome.

    Raises:
        SpectrumInconsistencyError: On a trace mismatch or an impossible edge count.
    """
    if target.node_count != node_count:
        raise SpectrumInconsistencyError(
            f"target has {target.node_count} eigenvalues but the graph has {node_count} nodes"
        )
    base_nodes = base_nodes or target.base_nodes or node_count
    overlay_graph = Graph.from_edges(node_count, overlay)
    total_edges = target.implied_edge_count()
    m = total_edges - overlay_graph.num_edges
    available = [e for e in combinations(range(1, base_nodes + 1), 2) if e not in overlay_graph.edges]
    if m < 0 or m > len(available):
        raise SpectrumInconsistencyError(
            f"trace implies {total_edges} edges; the overlay has {overlay_graph.num_edges} "
            f"and only {len(available)} base pairs are free"
        )
    logger.info("Searching %d-edge bases among %d free pairs", m, len(available))

    moment, slack = target.second_moment()
    L0 = overlay_graph.laplacian_array().astype(float)
    deg0 = np.diag(L0).astype(np.int64)
    pu = np.asarray([u - 1 for u, _ in available], dtype=np.intp)
    pv = np.asarray([v - 1 for _, v in available], dtype=np.intp)
    target_arr = np.asarray(target.values)

    searched = pruned = 0
    hits: list[tuple[Edge, ...]] = []
    for idx in _batched(combinations(range(len(available)), m), batch_size):
        rows = idx.shape[0]
        searched += rows
        if m:
            deg = np.tile(deg0, (rows, 1))
            row_ids = np.repeat(np.arange(rows), m)
            np.add.at(deg, (row_ids, pu[idx].ravel()), 1)
            np.add.at(deg, (row_ids, pv[idx].ravel()), 1)
        else:
            deg = deg0[None, :].repeat(rows, axis=0)
        keep = np.abs((deg**2).sum(axis=1) + 2 * total_edges - moment) <= slack
        if not keep.any():
            continue
        idx = idx[keep]
        pruned += idx.shape[0]
        lap = np.repeat(L0[None, :, :], idx.shape[0], axis=0)
        batch = np.arange(idx.shape[0])
        for col in range(m):
            u, v = pu[idx[:, col]], pv[idx[:, col]]
            lap[batch, u, v] -= 1.0
            lap[batch, v, u] -= 1.0
            lap[batch, u, u] += 1.0
            lap[batch, v, v] += 1.0
        spectra = np.linalg.eigvalsh(lap)
        ok = np.abs(spectra - target_arr).max(axis=1) <= target.tolerance
        for row in idx[ok]:
            hits.append(tuple(available[i] for i in row))

    candidates = []
    for edges in sorted(hits):
        base = Graph.trusted(base_nodes, edges)
        combined = Graph.trusted(node_count, overlay_graph.edges | base.edges)
        spectrum = eigendecompose(combined.laplacian()).eigenvalues
        deviation = _max_deviation(target.values, spectrum)
        if deviation > target.tolerance:
            logger.debug("Dropping %s on re-verification (deviation %.2e)", edges, deviation)
            continue
        layout = _layout_ok(scheme, combined, base) if scheme is not None else None
        if respect_layout and layout is False:
            continue
        candidates.append(
            ReconstructionCandidate(
                base=base,
                combined=combined,
                spectrum=tuple(float(v) for v in spectrum),
                max_deviation=deviation,
                perfect=is_perfect_exact(combined),
                respects_layout=layout,
            )
        )

    if not candidates:
        logger.warning("No base edge set reproduces the target spectrum")
    return ReconstructionReport(
        target=target,
        overlay=tuple(overlay_graph.sorted_edges()),
        base_nodes=base_nodes,
        base_edge_count=m,
        searched=searched,
        pruned=pruned,
        candidates=tuple(candidates),
    )


def layout_scheme(k: int, satellites: int = 0) -> PairScheme:
    """Default two-row layout for k pairs plus satellites at their default positions."""
    scheme = init_scheme(k)
    for _ in range(satellites):
        scheme = scheme.with_satellite()
    return scheme
