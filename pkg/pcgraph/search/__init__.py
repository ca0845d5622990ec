"""Censuses and spectrum-driven reconstruction."""

from pcgraph.search.census import (
    CSV_HEADER,
    CensusRow,
    census_chunk,
    merge_rows,
    pc_census,
    pc_census_async,
    random_census,
)
from pcgraph.search.reconstruct import (
    ReconstructionCandidate,
    ReconstructionReport,
    SpectrumInconsistencyError,
    SpectrumTarget,
    layout_scheme,
    reconstruct_base,
)

__all__ = [
    "CSV_HEADER",
    "CensusRow",
    "ReconstructionCandidate",
    "ReconstructionReport",
    "SpectrumInconsistencyError",
    "SpectrumTarget",
    "census_chunk",
    "layout_scheme",
    "merge_rows",
    "pc_census",
    "pc_census_async",
    "random_census",
    "reconstruct_base",
]
