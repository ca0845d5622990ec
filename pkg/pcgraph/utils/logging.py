"""Logging setup for the command line."""

from __future__ import annotations

import logging

from rich.console import Console
from rich.logging import RichHandler

from pcgraph.config import get_settings


def configure_logging(verbosity: int = 0) -> None:
    """Install a rich handler on stderr.

    Level comes from settings; each ``-v`` lowers it one step (INFO, then DEBUG).
    """
    base = logging.getLevelName(get_settings().log_level.upper())
    if not isinstance(base, int):
        base = logging.WARNING
    level = max(logging.DEBUG, base - 10 * verbosity)
    logging.basicConfig(
        level=level,
        format="%(name)s - %(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )
