"""
CLI entry point for lucas_umbral.
"""

import logging
import random

import rich_click as click
from click_option_group import MutuallyExclusiveOptionGroup, optgroup
from rich.logging import RichHandler

logger = logging.getLogger(__name__)


def setup_logging(verbose: int, quiet: int) -> None:
    """
    Set up logging for the application.

    Args:
        verbose:
            The verbosity level. Higher values indicate more verbose output.

        quiet:
            The quietness level. Higher values indicate less output.
    """
    level = logging.WARNING - (verbose - quiet) * 10
    logging.basicConfig(
        level=level,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(rich_tracebacks=True)],
    )
    logger.debug("Debug logging enabled.")


@click.group()
@optgroup.group("Logging Options", cls=MutuallyExclusiveOptionGroup)
@optgroup.option(
    "-v",
    "--verbose",
    count=True,
    help="Increase verbosity. Can be used multiple times.",
)
@optgroup.option(  # type: ignore[arg-type]
    "-q",
    "--quiet",
    count=True,
    help="Decrease verbosity. Can be used multiple times.",
)
@click.option(
    "--seed",
    type=int,
    default=0,
    show_default=True,
    help="Seed for every random choice made by a subcommand.",
)
@click.pass_context
def main(
    ctx: click.Context,
    *,
    verbose: int,
    quiet: int,
    seed: int,
) -> None:
    """
    lucas-umbral.

    Exact computations with sequences of binomial type in characteristic p.

    Sequences and their generating functions in the divided power ring are
    built, multiplied, inverted and checked for the binomial identity. The
    Carlitz construction, the null-sequence construction, the digit
    permutation actions and the Carlitz module over F_q[th] are available as
    subcommands, together with an exhaustive explorer over small prime fields.
    """
    setup_logging(verbose, quiet)

    ctx.ensure_object(dict)
    ctx.obj["rng"] = random.Random(seed)  # noqa: S311


import lucas_umbral.command  # noqa: E402

main.add_command(lucas_umbral.command.version)  # type: ignore[arg-type]
main.add_command(lucas_umbral.command.check)  # type: ignore[arg-type]
main.add_command(lucas_umbral.command.gen)  # type: ignore[arg-type]
main.add_command(lucas_umbral.command.mul)  # type: ignore[arg-type]
main.add_command(lucas_umbral.command.inv)  # type: ignore[arg-type]
main.add_command(lucas_umbral.command.act)  # type: ignore[arg-type]
main.add_command(lucas_umbral.command.dirac_cmd)  # type: ignore[arg-type]
main.add_command(lucas_umbral.command.pellarin)  # type: ignore[arg-type]
main.add_command(lucas_umbral.command.explore)  # type: ignore[arg-type]
