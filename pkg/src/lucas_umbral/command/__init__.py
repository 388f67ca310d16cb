"""
Subcommands for lucas_umbral.

Each module in this package contains a single subcommand for the lucas_umbral
command line interface (CLI). The subcommands are implemented as functions
decorated with `@click.command()` and are registered with the main command in
`src/lucas_umbral/cli.py`.
"""

from lucas_umbral.command.act import act
from lucas_umbral.command.arith import inv, mul
from lucas_umbral.command.check import check
from lucas_umbral.command.dirac import dirac_cmd
from lucas_umbral.command.explore import explore
from lucas_umbral.command.gen import gen
from lucas_umbral.command.pellarin import pellarin
from lucas_umbral.command.version import version

__all__ = [
    "act",
    "check",
    "dirac_cmd",
    "explore",
    "gen",
    "inv",
    "mul",
    "pellarin",
    "version",
]
