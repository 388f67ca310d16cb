"""
Subcommands for multiplying and inverting divided elements.
"""

from __future__ import annotations

import logging
from pathlib import Path

import rich_click as click

from lucas_umbral.algebra.field import FieldCtx
from lucas_umbral.divided import dp_inverse, dp_mul
from lucas_umbral.util import emit, field_options, output_option, read_divided

logger = logging.getLogger(__name__)

_INPUT = click.Path(exists=True, dir_okay=False, path_type=Path)


@click.command()
@click.argument("a", type=_INPUT)
@click.argument("b", type=_INPUT)
@output_option
@field_options
@click.pass_context
def mul(
    ctx: click.Context,
    *,
    a: Path,
    b: Path,
    output: Path | None,
    fld: FieldCtx,
) -> None:
    """
    Multiply two divided elements.

    The product is truncated at the smaller of the two truncation orders.
    Sequence files are read as their generating functions.
    """
    f = read_divided(a, fld)
    g = read_divided(b, fld)
    try:
        product = dp_mul(f, g)
    except TypeError as err:
        raise click.BadParameter(str(err), ctx=ctx, param_hint="A/B") from err
    logger.info("Multiplied %s by %s.", a, b)
    emit(product.to_text(), output)


@click.command()
@click.argument("a", type=_INPUT)
@output_option
@field_options
@click.pass_context
def inv(
    ctx: click.Context,
    *,
    a: Path,
    output: Path | None,
    fld: FieldCtx,
) -> None:
    """
    Invert a divided element with constant coefficient 1.
    """
    f = read_divided(a, fld)
    try:
        inverse = dp_inverse(f)
    except ValueError as err:
        raise click.BadParameter(str(err), ctx=ctx, param_hint="A") from err
    logger.info("Inverted %s.", a)
    emit(inverse.to_text(), output)
