"""Shared helpers for CLI commands."""

from __future__ import annotations

from pathlib import Path

import click
import numpy as np
from rich.console import Console

from pcgraph.core.graph import Graph, GraphError, load_graph
from pcgraph.core.leaders import LeaderSet, LeaderSetError

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_INDETERMINATE = 3
EXIT_DISAGREE = 4

err_console = Console(stderr=True)

GRAPH_PATH = click.Path(exists=True, dir_okay=False, path_type=Path)


class InputError(click.ClickException):
    """Bad user input; exits with status 2."""

    exit_code = EXIT_INPUT


def read_graph(path: Path) -> Graph:
    try:
        return load_graph(path)
    except (GraphError, OSError, UnicodeDecodeError) as exc:
        raise InputError(f"{path}: {exc}") from exc


def parse_leaders(text: str, n: int) -> LeaderSet:
    try:
        leaders = LeaderSet.parse(text)
        leaders.check_range(n)
    except LeaderSetError as exc:
        raise InputError(f"invalid leader set {text!r}: {exc}") from exc
    return leaders


def parse_vector(text: str, name: str) -> np.ndarray:
    tokens = [t for t in text.replace(",", " ").split() if t]
    try:
        return np.asarray([float(t) for t in tokens], dtype=float)
    except ValueError as exc:
        raise InputError(f"{name} must be a comma-separated list of numbers, got {text!r}") from exc
