"""pcgraph CLI.

Check, construct, search and steer perfectly controllable interaction graphs
from the command line.
"""

from __future__ import annotations

import click

from pcgraph import __version__
from pcgraph.cli.commands import census, check, construct, export, leaders, reconstruct, steer_command
from pcgraph.utils.logging import configure_logging


@click.group()
@click.version_option(version=__version__, prog_name="pcgraph")
@click.option("-v", "--verbose", count=True, help="More log output (-v info, -vv debug)")
def cli(verbose: int) -> None:
    """Perfect controllability of multi-agent interaction graphs."""
    configure_logging(verbose)


cli.add_command(check)
cli.add_command(leaders)
cli.add_command(construct)
cli.add_command(census)
cli.add_command(reconstruct)
cli.add_command(steer_command, name="steer")
cli.add_command(export)


def main() -> None:
    """Console script entry point."""

    cli()


if __name__ == "__main__":
    main()
