"""Perfect-controllability check of a single graph."""

from __future__ import annotations

from pathlib import Path

import click

from pcgraph.cli.commands._common import (
    EXIT_DISAGREE,
    EXIT_INDETERMINATE,
    EXIT_NEGATIVE,
    EXIT_OK,
    GRAPH_PATH,
    err_console,
    read_graph,
)
from pcgraph.core.exact import check_perfect_exact
from pcgraph.core.spectral import Verdict, check_perfect_numeric, eigendecompose, render_spectrum


@click.command("check")
@click.argument("graph_path", type=GRAPH_PATH)
@click.option(
    "--mode",
    type=click.Choice(["exact", "numeric", "both"]),
    default="both",
    show_default=True,
    help="Which checker decides the exit code",
)
@click.option("--tol-gap", type=click.FloatRange(min=0, min_open=True), default=None, help="Absolute eigengap tolerance")
@click.option("--tol-zero", type=click.FloatRange(min=0, min_open=True), default=None, help="Relative zero-entry tolerance")
@click.pass_context
def check(ctx: click.Context, graph_path: Path, mode: str, tol_gap: float | None, tol_zero: float | None) -> None:
    """Decide whether GRAPH_PATH is perfectly controllable.

    Exit codes: 0 perfect, 1 not perfect, 2 input error, 3 numeric
    verdict indeterminate, 4 exact and numeric verdicts disagree.
    """
    graph = read_graph(graph_path)
    click.echo(f"graph: n={graph.n}, edges={graph.num_edges}")
    click.echo(f"spectrum: {render_spectrum(eigendecompose(graph.laplacian()).eigenvalues)}")

    numeric = None
    if mode in ("numeric", "both"):
        numeric = check_perfect_numeric(graph, tol_gap=tol_gap, tol_zero=tol_zero)
        click.echo(numeric.render())
    exact = None
    if mode in ("exact", "both"):
        exact = check_perfect_exact(graph)
        click.echo(exact.render())

    if exact is None:
        assert numeric is not None
        if numeric.verdict is Verdict.INDETERMINATE:
            ctx.exit(EXIT_INDETERMINATE)
        ctx.exit(EXIT_OK if numeric.is_perfect else EXIT_NEGATIVE)

    if numeric is not None and numeric.decided and numeric.is_perfect != exact.perfect:
        err_console.print("[red]exact and numeric verdicts disagree[/red]")
        ctx.exit(EXIT_DISAGREE)
    ctx.exit(EXIT_OK if exact.perfect else EXIT_NEGATIVE)
