"""Integration test fixtures and configuration."""

from pathlib import Path

import pytest
from click.testing import CliRunner

from pcgraph.core.graph import Graph, save_graph


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture
def graph_file(tmp_path: Path):
    """Write a graph as an edge list and return its path."""

    def _make(graph: Graph, name: str = "graph.txt") -> Path:
        path = tmp_path / name
        save_graph(graph, path)
        return path

    return _make
