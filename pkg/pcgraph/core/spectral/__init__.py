"""Numeric spectral analysis."""

from pcgraph.core.spectral.analysis import (
    PcVerdict,
    SpectralReport,
    Verdict,
    VerdictReason,
    Witness,
    check_perfect_numeric,
    eigendecompose,
    render_spectrum,
)

__all__ = [
    "PcVerdict",
    "SpectralReport",
    "Verdict",
    "VerdictReason",
    "Witness",
    "check_perfect_numeric",
    "eigendecompose",
    "render_spectrum",
]
