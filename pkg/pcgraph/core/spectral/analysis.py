"""Floating-point eigendecomposition and the numeric perfect-controllability test.

A connected graph is perfectly controllable exactly when its Laplacian has
simple eigenvalues and no eigenvector has a zero entry. The numeric test
below checks both conditions with explicit tolerances and refuses to decide
near either threshold; those cases are left to the exact certifier.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable
from enum import Enum

import numpy as np
from pydantic import BaseModel, ConfigDict

from pcgraph.config import get_settings
from pcgraph.core.graph.engine import Graph, LaplacianError, LaplacianMatrix

logger = logging.getLogger(__name__)

_EPS = float(np.finfo(float).eps)


class Verdict(str, Enum):
    PERFECT = "perfect"
    NOT_PERFECT = "not-perfect"
    INDETERMINATE = "indeterminate-numeric"


class VerdictReason(str, Enum):
    REPEATED_EIGENVALUE = "repeated-eigenvalue"
    ZERO_ENTRY = "zero-eigenvector-entry"
    OK = "ok"


class SpectralReport(BaseModel):
    """Eigenvalues (ascending) with eigenvectors as the columns of `eigenvectors`."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    min_gap: float
    min_abs_entry: float
    zero_flags: np.ndarray
    max_residual: float
    residual_bound: float
    tol_zero: float

    @property
    def n(self) -> int:
        return int(self.eigenvalues.shape[0])

    def gap_index(self) -> int | None:
        """Index k such that eigenvalues[k+1] - eigenvalues[k] is the smallest gap."""
        if self.n < 2:
            return None
        return int(np.argmin(np.diff(self.eigenvalues)))

    def relative_entries(self) -> np.ndarray:
        """|v_jk| / ||v_k||_inf, indexed [k, j] (eigenvector, entry)."""
        mags = np.abs(self.eigenvectors)
        return (mags / mags.max(axis=0, keepdims=True)).T

    def smallest_relative_entry(self) -> tuple[float, int, int]:
        """Smallest relative entry with its (eigenvector index, entry index)."""
        rel = self.relative_entries()
        k, j = np.unravel_index(int(np.argmin(rel)), rel.shape)
        return float(rel[k, j]), int(k), int(j)

    def render(self) -> str:
        lines = [f"eigenvalues: {render_spectrum(self.eigenvalues)}"]
        lines.append(f"min gap: {self.min_gap:.4e}")
        lines.append(f"min |entry|: {self.min_abs_entry:.4e}")
        return "\n".join(lines)


class Witness(BaseModel):
    """Evidence for a not-perfect verdict.

    A repeated eigenvalue sets `eigenvalue` and `other_eigenvalue`; a zero
    entry sets `eigenvalue` and the 1-based `node`.
    """

    model_config = ConfigDict(frozen=True)

    eigenvalue: float
    other_eigenvalue: float | None = None
    node: int | None = None

    def describe(self) -> str:
        if self.node is not None:
            return f"eigenvalue {_fmt(self.eigenvalue)}, node {self.node}"
        return f"eigenvalues {_fmt(self.eigenvalue)} and {_fmt(self.other_eigenvalue or 0.0)}"


class PcVerdict(BaseModel):
    model_config = ConfigDict(frozen=True)

    verdict: Verdict
    reason: VerdictReason
    witness: Witness | None = None
    margin: float
    tol_gap: float
    tol_zero: float

    @property
    def decided(self) -> bool:
        return self.verdict is not Verdict.INDETERMINATE

    @property
    def is_perfect(self) -> bool:
        return self.verdict is Verdict.PERFECT

    def render(self) -> str:
        lines = [f"numeric verdict: {self.verdict.value} ({self.reason.value})"]
        if self.witness is not None:
            lines.append(f"witness: {self.witness.describe()}")
        lines.append(f"margin: {self.margin:.4e} (tol_gap={self.tol_gap:.1e}, tol_zero={self.tol_zero:.1e})")
        return "\n".join(lines)


def _fmt(value: float) -> str:
    text = f"{value:.4f}"
    return "0.0000" if text == "-0.0000" else text


def render_spectrum(values: Iterable[float]) -> str:
    """Eigenvalues to 4 decimals, comma separated."""
    return ", ".join(_fmt(float(v)) for v in values)


def _as_symmetric_array(L: LaplacianMatrix | np.ndarray) -> np.ndarray:
    if isinstance(L, LaplacianMatrix):
        return L.to_numpy(dtype=float)
    arr = np.asarray(L, dtype=float)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise LaplacianError(f"expected a square matrix, got shape {arr.shape}")
    if not np.array_equal(arr, arr.T):
        raise LaplacianError("matrix is not symmetric")
    return arr


def _normalize_signs(vectors: np.ndarray, tol_zero: float) -> np.ndarray:
    vectors = vectors.copy()
    for k in range(vectors.shape[1]):
        col = vectors[:, k]
        floor = tol_zero * np.abs(col).max()
        nonzero = np.flatnonzero(np.abs(col) > floor)
        if nonzero.size and col[nonzero[0]] < 0:
            vectors[:, k] = -col
    return vectors


def eigendecompose(L: LaplacianMatrix | np.ndarray, tol_zero: float | None = None) -> SpectralReport:
    """Symmetric eigendecomposition of a Laplacian.

    Args:
        L: Laplacian as a validated matrix or a symmetric array.
        tol_zero: Relative threshold for flagging an eigenvector entry as zero.

    Returns:
        SpectralReport with ascending eigenvalues and sign-normalized eigenvectors.

    Raises:
        LaplacianError: If the input is not square and symmetric.
    """
    tol_zero = get_settings().tol_zero if tol_zero is None else tol_zero
    arr = _as_symmetric_array(L)
    n = arr.shape[0]

    values, vectors = np.linalg.eigh(arr)
    vectors = _normalize_signs(vectors, tol_zero)

    residual = float(np.abs(arr @ vectors - vectors * values).max()) if n else 0.0
    rho = float(np.abs(values).max()) if n else 0.0
    bound = 64 * n * _EPS * (1.0 + rho)
    if residual > bound:
        logger.warning("Eigen residual %.3e exceeds bound %.3e", residual, bound)

    mags = np.abs(vectors)
    zero_flags = (mags <= tol_zero * mags.max(axis=0, keepdims=True)).T
    return SpectralReport(
        eigenvalues=values,
        eigenvectors=vectors,
        min_gap=float(np.diff(values).min()) if n > 1 else float("inf"),
        min_abs_entry=float(mags.min()),
        zero_flags=zero_flags,
        max_residual=residual,
        residual_bound=bound,
        tol_zero=tol_zero,
    )


def check_perfect_numeric(
    graph: Graph,
    tol_gap: float | None = None,
    tol_zero: float | None = None,
) -> PcVerdict:
    """Numeric test of simple spectrum plus nowhere-zero eigenvectors.

    The eigengap is judged first, then eigenvector entries. A quantity within
    the indeterminate band (a factor around its tolerance) yields
    ``indeterminate-numeric`` instead of a guess.
    """
    settings = get_settings()
    tol_zero = settings.tol_zero if tol_zero is None else tol_zero
    report = eigendecompose(graph.laplacian(), tol_zero=tol_zero)
    values = report.eigenvalues
    tol_gap = settings.tol_gap(float(values[-1])) if tol_gap is None else tol_gap
    band = settings.indeterminate_factor
    margin = min(report.min_gap, report.min_abs_entry)

    def verdict(kind: Verdict, reason: VerdictReason, witness: Witness | None = None) -> PcVerdict:
        return PcVerdict(
            verdict=kind, reason=reason, witness=witness, margin=margin, tol_gap=tol_gap, tol_zero=tol_zero
        )

    k = report.gap_index()
    if k is not None:
        gap = report.min_gap
        witness = Witness(eigenvalue=float(values[k]), other_eigenvalue=float(values[k + 1]))
        if gap <= tol_gap / band:
            return verdict(Verdict.NOT_PERFECT, VerdictReason.REPEATED_EIGENVALUE, witness)
        if gap <= tol_gap * band:
            logger.info("Eigengap %.3e is within the indeterminate band", gap)
            return verdict(Verdict.INDETERMINATE, VerdictReason.REPEATED_EIGENVALUE)

    ratio, vec, entry = report.smallest_relative_entry()
    if ratio <= tol_zero / band:
        witness = Witness(eigenvalue=float(values[vec]), node=entry + 1)
        return verdict(Verdict.NOT_PERFECT, VerdictReason.ZERO_ENTRY, witness)
    if ratio <= tol_zero * band:
        logger.info("Eigenvector entry ratio %.3e is within the indeterminate band", ratio)
        return verdict(Verdict.INDETERMINATE, VerdictReason.ZERO_ENTRY)
    return verdict(Verdict.PERFECT, VerdictReason.OK)
