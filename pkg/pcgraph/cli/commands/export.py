"""Graphviz export."""

from __future__ import annotations

from pathlib import Path

import click

from pcgraph.cli.commands._common import GRAPH_PATH, InputError, parse_leaders, read_graph
from pcgraph.core.graph import graph_to_dot


@click.command("export")
@click.argument("graph_path", type=GRAPH_PATH)
@click.option("--dot", "dot_path", type=click.Path(dir_okay=False, path_type=Path), required=True)
@click.option("--leaders", "leader_text", default=None, help="Leader nodes to highlight")
def export(graph_path: Path, dot_path: Path, leader_text: str | None) -> None:
    """Write GRAPH_PATH as a DOT file."""
    graph = read_graph(graph_path)
    leaders = parse_leaders(leader_text, graph.n).nodes if leader_text else ()
    try:
        dot_path.write_text(graph_to_dot(graph, leaders), encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot write {dot_path}: {exc}") from exc
    click.echo(f"wrote {dot_path}")
