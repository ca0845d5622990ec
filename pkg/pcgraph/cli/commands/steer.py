"""Minimum-energy steering of the followers."""

from __future__ import annotations

from pathlib import Path

import click
import numpy as np

from pcgraph.cli.commands._common import (
    EXIT_NEGATIVE,
    EXIT_OK,
    GRAPH_PATH,
    InputError,
    parse_leaders,
    parse_vector,
    read_graph,
)
from pcgraph.dynamics import DimensionError, FollowerSystem, steer


@click.command("steer")
@click.argument("graph_path", type=GRAPH_PATH)
@click.option("--leaders", "leader_text", required=True, help='Leader nodes, e.g. "1"')
@click.option("--target", "target_text", required=True, help="Follower target state, comma separated")
@click.option("--x0", "x0_text", default=None, help="Follower initial state (default zeros)")
@click.option("--T", "horizon", type=click.FloatRange(min=0, min_open=True), default=5.0, show_default=True)
@click.option("--steps", type=click.IntRange(min=2), default=None, help="RK4 steps for re-simulation")
@click.option("--trajectory", "trajectory_path", type=click.Path(dir_okay=False, path_type=Path), default=None,
              help="Write the leader input trajectory as CSV")
@click.option("--states", "states_path", type=click.Path(dir_okay=False, path_type=Path), default=None,
              help="Write the re-simulated follower states as CSV (t,x_<node>...)")
@click.pass_context
def steer_command(
    ctx: click.Context,
    graph_path: Path,
    leader_text: str,
    target_text: str,
    x0_text: str | None,
    horizon: float,
    steps: int | None,
    trajectory_path: Path | None,
    states_path: Path | None,
) -> None:
    """Steer the followers of GRAPH_PATH to --target with the leaders as inputs.

    Exit codes: 0 steered, 1 uncontrollable detected, 2 input error.
    """
    graph = read_graph(graph_path)
    chosen = parse_leaders(leader_text, graph.n)
    system = FollowerSystem.from_graph(graph, chosen)
    target = parse_vector(target_text, "--target")
    x0 = parse_vector(x0_text, "--x0") if x0_text is not None else np.zeros(system.n_f)

    try:
        result = steer(system, x0, target, horizon, steps)
    except DimensionError as exc:
        raise InputError(str(exc)) from exc

    click.echo(f"followers: {', '.join(map(str, system.follower_order)) or '(none)'}")
    click.echo(f"leaders: {chosen.label()}")
    click.echo(result.render())

    for path, trajectory in ((trajectory_path, result.input_as_trajectory()), (states_path, result.states_as_trajectory())):
        if path is None or trajectory is None:
            continue
        try:
            path.write_text(trajectory.to_csv(), encoding="utf-8")
        except OSError as exc:
            raise InputError(f"cannot write {path}: {exc}") from exc
    ctx.exit(EXIT_OK if result.steered else EXIT_NEGATIVE)
