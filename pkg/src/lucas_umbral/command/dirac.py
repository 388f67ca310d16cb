"""
Subcommand to compute Dirac elements over `A = F_q[th]`.
"""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING

import rich_click as click

from lucas_umbral.carlitz import CarlitzCtx, dirac, dirac_factorization
from lucas_umbral.divided import dp_product
from lucas_umbral.util import emit, field_options, output_option, parse_value

if TYPE_CHECKING:
    from pathlib import Path

    from lucas_umbral.algebra.field import FieldCtx

logger = logging.getLogger(__name__)


@click.command(name="dirac")
@click.argument("alpha")
@click.option(
    "--N",
    "n",
    type=click.IntRange(min=1),
    default=8,
    show_default=True,
    help="The truncation order.",
)
@click.option(
    "--factor",
    is_flag=True,
    help="Also check that the digit factors multiply back to the element.",
)
@output_option
@field_options
@click.pass_context
def dirac_cmd(
    ctx: click.Context,
    *,
    alpha: str,
    n: int,
    factor: bool,
    output: Path | None,
    fld: FieldCtx,
) -> None:
    """
    Compute the Dirac element of a point ALPHA of F_q[th].

    The coefficient of D_i is G_i(ALPHA), the i-th Carlitz polynomial
    evaluated at ALPHA, which always lies in F_q[th]. ALPHA is written in the
    variable `th`, for example 'th^2+1'.
    """
    carlitz = CarlitzCtx.for_window(fld, n)
    point = parse_value(alpha, carlitz.a_ring, "ALPHA")
    try:
        element = dirac(carlitz, point, n)
    except ArithmeticError as err:
        logger.error("Integrality fails: %s", err)  # noqa: TRY400
        ctx.exit(1)
    emit(element.to_text(), output)

    if factor:
        factors = dirac_factorization(carlitz, point, n)
        product = dp_product(factors, carlitz.a_ring, n)
        if product != element:
            logger.error("The %d digit factors do not multiply to the element.", len(factors))
            ctx.exit(1)
        logger.info("Verified the factorisation into %d digit factors.", len(factors))
