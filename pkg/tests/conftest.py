"""Global test configuration."""

from pathlib import Path

import pytest

from pcgraph.config.settings import reset_settings
from pcgraph.core.graph import Graph, save_graph


@pytest.fixture(autouse=True)
def isolated_settings(monkeypatch: pytest.MonkeyPatch):
    """Reset cached settings so PCGRAPH_* variables never leak between tests."""
    for name in ("PCGRAPH_TOL_ZERO", "PCGRAPH_TOL_GAP_REL", "PCGRAPH_WORKERS", "PCGRAPH_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)
    reset_settings()
    yield
    reset_settings()


@pytest.fixture
def path3() -> Graph:
    return Graph.path(3)


@pytest.fixture
def path4() -> Graph:
    return Graph.path(4)


@pytest.fixture
def triangle() -> Graph:
    return Graph.complete(3)


@pytest.fixture
def write_graph(tmp_path: Path):
    """Save a graph under tmp_path and return the file path."""

    def _write(graph: Graph, name: str = "graph.txt") -> Path:
        path = tmp_path / name
        save_graph(graph, path)
        return path

    return _write
