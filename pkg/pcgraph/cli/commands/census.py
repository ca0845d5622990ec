"""Census of perfectly controllable graphs."""

from __future__ import annotations

import click

from pcgraph.cli.commands._common import InputError, err_console
from pcgraph.core.leaders import SizeGuardError
from pcgraph.search import CSV_HEADER, pc_census, random_census


def _parse_random(text: str) -> tuple[int, float, int, int]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 4:
        raise click.BadParameter("expected n,p,count,seed", param_hint="--random")
    try:
        return int(parts[0]), float(parts[1]), int(parts[2]), int(parts[3])
    except ValueError as exc:
        raise click.BadParameter(str(exc), param_hint="--random") from exc


@click.command("census")
@click.option("--n", "n", type=int, default=None, help="Exhaustive census over all labeled graphs on n nodes")
@click.option("--random", "random_spec", default=None, help="Sampled census: n,p,count,seed")
@click.option("--workers", type=click.IntRange(min=1), default=None, help="Worker processes")
@click.option("--exemplars", is_flag=True, help="Print up to five perfect exemplars after the row")
def census(n: int | None, random_spec: str | None, workers: int | None, exemplars: bool) -> None:
    """Count perfectly controllable graphs; prints n,total,connected,perfect."""
    if (n is None) == (random_spec is None):
        raise click.UsageError("choose exactly one of --n and --random")
    try:
        if random_spec is not None:
            size, prob, count, seed = _parse_random(random_spec)
            row = random_census(size, prob, count, seed)
        else:
            assert n is not None
            row = pc_census(n, workers)
    except (SizeGuardError, ValueError) as exc:
        raise InputError(str(exc)) from exc

    click.echo(CSV_HEADER)
    click.echo(row.to_csv_row())
    if row.sampled:
        err_console.print(f"fraction perfect: {row.fraction_perfect:.4f} (seed {row.seed})")
    if exemplars:
        for index, text in enumerate(row.exemplars, start=1):
            click.echo(f"# exemplar {index}")
            click.echo(text, nl=False)
