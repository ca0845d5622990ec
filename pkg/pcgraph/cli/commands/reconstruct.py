"""Spectrum-driven reconstruction of a base topology."""

from __future__ import annotations

from pathlib import Path

import click

from pcgraph.cli.commands._common import GRAPH_PATH, InputError, read_graph
from pcgraph.core.graph import GraphError
from pcgraph.data import PUBLISHED_SPECTRUM, STEP4_OVERLAY
from pcgraph.search import SpectrumInconsistencyError, SpectrumTarget, layout_scheme, reconstruct_base


@click.command("reconstruct")
@click.option("--target-spectrum", "target_path", type=GRAPH_PATH, default=None, help="YAML or plain list of eigenvalues")
@click.option("--overlay", "overlay_path", type=GRAPH_PATH, default=None, help="Edge-list file of known edges")
@click.option("--tol", type=click.FloatRange(min=0, min_open=True), default=None, help="Per-eigenvalue tolerance")
@click.option("--base-nodes", type=click.IntRange(min=1), default=None, help="Base edges live on nodes 1..N")
@click.option("--layout", is_flag=True, help="Flag candidates whose base edges cross the two-row layout")
def reconstruct(
    target_path: Path | None,
    overlay_path: Path | None,
    tol: float | None,
    base_nodes: int | None,
    layout: bool,
) -> None:
    """Find base edge sets whose union with the overlay has the target spectrum.

    Without options the shipped published spectrum and its overlay are used.
    """
    if target_path is None:
        target_path = PUBLISHED_SPECTRUM
        overlay_path = overlay_path or STEP4_OVERLAY
    try:
        target = SpectrumTarget.load(target_path, tolerance=tol)
    except (ValueError, OSError) as exc:
        raise InputError(f"{target_path}: {exc}") from exc

    node_count = target.node_count
    overlay_edges: list[tuple[int, int]] = []
    if overlay_path is not None:
        overlay = read_graph(overlay_path)
        if overlay.n != node_count:
            raise InputError(f"overlay has {overlay.n} nodes but the target has {node_count} eigenvalues")
        overlay_edges = overlay.sorted_edges()

    scheme = None
    nodes = base_nodes or target.base_nodes or node_count
    if layout:
        if nodes % 2:
            raise InputError("--layout needs an even number of base nodes")
        scheme = layout_scheme(nodes // 2, node_count - nodes)

    try:
        report = reconstruct_base(target, overlay_edges, node_count, base_nodes=nodes, scheme=scheme)
    except (SpectrumInconsistencyError, GraphError) as exc:
        raise InputError(str(exc)) from exc
    click.echo(report.render())
