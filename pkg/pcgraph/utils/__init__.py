"""Shared helpers."""

from pcgraph.utils.logging import configure_logging
from pcgraph.utils.parallel import gather_in_processes, run_parallel

__all__ = ["configure_logging", "gather_in_processes", "run_parallel"]
