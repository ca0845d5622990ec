"""CLI subcommands."""

from __future__ import annotations

from pcgraph.cli.commands.census import census
from pcgraph.cli.commands.check import check
from pcgraph.cli.commands.construct import construct
from pcgraph.cli.commands.export import export
from pcgraph.cli.commands.leaders import leaders
from pcgraph.cli.commands.reconstruct import reconstruct
from pcgraph.cli.commands.steer import steer_command

__all__ = ["census", "check", "construct", "export", "leaders", "reconstruct", "steer_command"]
