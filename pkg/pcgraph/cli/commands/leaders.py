"""Leader-set controllability reports."""

from __future__ import annotations

from pathlib import Path

import click

from pcgraph.cli.commands._common import GRAPH_PATH, InputError, parse_leaders, read_graph
from pcgraph.core.leaders import (
    SizeGuardError,
    classify_all_leader_sets,
    controllable_singletons,
    is_controllable,
    pbh_test,
    render_classification,
)


@click.command("leaders")
@click.argument("graph_path", type=GRAPH_PATH)
@click.option("--set", "leader_set", default=None, help='Leader nodes, e.g. "1,3"')
@click.option("--all", "all_sets", is_flag=True, help="Classify every nonempty leader set")
@click.option("--singletons", is_flag=True, help="Classify single leaders and conclude perfect controllability")
@click.option(
    "--method",
    type=click.Choice(["auto", "exact", "numeric", "pbh"]),
    default="auto",
    show_default=True,
    help="Kalman rank (auto/exact/numeric) or the eigenvector test",
)
def leaders(graph_path: Path, leader_set: str | None, all_sets: bool, singletons: bool, method: str) -> None:
    """Report which leader selections make GRAPH_PATH controllable."""
    if sum([leader_set is not None, all_sets, singletons]) != 1:
        raise click.UsageError("choose exactly one of --set, --all, --singletons")
    graph = read_graph(graph_path)

    if leader_set is not None:
        if not leader_set.strip():
            raise click.UsageError("--set needs at least one leader")
        chosen = parse_leaders(leader_set, graph.n)
        if method == "pbh":
            result = pbh_test(graph, chosen)
            ok = result.controllable
        else:
            ok = is_controllable(graph, chosen, method)  # type: ignore[arg-type]
        click.echo(f"{chosen.label()} {'controllable' if ok else 'uncontrollable'}")
        if method == "pbh" and not ok:
            click.echo(f"witness eigenvalue: {result.witness_eigenvalue:.4f}")
        return

    kalman = "auto" if method == "pbh" else method
    if all_sets:
        try:
            classification = classify_all_leader_sets(graph, kalman)  # type: ignore[arg-type]
        except SizeGuardError as exc:
            raise InputError(str(exc)) from exc
        click.echo(render_classification(classification))
        return

    verdicts = controllable_singletons(graph, kalman)  # type: ignore[arg-type]
    for node, ok in verdicts.items():
        click.echo(f"{{{node}}} {'controllable' if ok else 'uncontrollable'}")
    # Leader monotonicity: singletons decide every larger selection.
    click.echo(f"perfectly controllable: {'yes' if all(verdicts.values()) else 'no'}")
