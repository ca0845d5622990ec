"""Replay construction scripts and enumerate stage variants."""

from __future__ import annotations

from pathlib import Path

import click

from pcgraph.cli.commands._common import GRAPH_PATH, InputError, read_graph
from pcgraph.construct import (
    InapplicableStageError,
    ScriptError,
    Stage,
    enumerate_variants,
    load_script,
    run_script,
    step7_batch,
    verify_variants,
)
from pcgraph.core.graph import serialize_graph


@click.command("construct")
@click.argument("script_path", type=GRAPH_PATH)
@click.argument("base_path", type=GRAPH_PATH)
@click.option(
    "--enumerate",
    "stage",
    type=click.Choice([s.value for s in Stage]),
    default=None,
    help="After the script, list every variant of this stage with its exact verdict",
)
@click.option(
    "--step7-batch",
    "batch",
    is_flag=True,
    help="Extend every step4b, step4c, step5 and step6 graph by step 7 and print a verdict table",
)
def construct(script_path: Path, base_path: Path, stage: str | None, batch: bool) -> None:
    """Run SCRIPT_PATH over the base graph BASE_PATH."""
    if stage is not None and batch:
        raise click.UsageError("--enumerate and --step7-batch are mutually exclusive")
    base = read_graph(base_path)
    try:
        script = load_script(script_path, base)
        run = run_script(script)
    except ScriptError as exc:
        raise InputError(f"{script_path}: {exc}") from exc

    click.echo(run.render_log())
    if batch:
        if run.scheme is None:
            raise InputError("--step7-batch needs a script that starts with 'pairs k=<int>'")
        try:
            table = step7_batch(run.scheme, run.graph, base=base)
        except InapplicableStageError as exc:
            raise InputError(str(exc)) from exc
        click.echo(table.render())
        return
    if stage is None:
        click.echo(serialize_graph(run.graph), nl=False)
        return

    if run.scheme is None:
        raise InputError("--enumerate needs a script that starts with 'pairs k=<int>'")
    try:
        variants = verify_variants(enumerate_variants(run.scheme, run.graph, stage, base=base))
    except InapplicableStageError as exc:
        raise InputError(str(exc)) from exc

    perfect = sum(1 for v in variants if v.perfect)
    click.echo(f"# {stage}: {len(variants)} variant(s), {perfect} perfectly controllable")
    for variant in variants:
        click.echo(f"# {variant.describe()}")
        for violation in variant.violations:
            click.echo(f"#   {violation.code}: {violation.describe()}")
        click.echo(serialize_graph(variant.graph), nl=False)
