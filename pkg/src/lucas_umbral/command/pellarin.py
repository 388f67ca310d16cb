"""
Subcommand for the Carlitz module and its image in `A[t]`.
"""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING

import rich_click as click

from lucas_umbral.carlitz import CarlitzCtx, carlitz_action, pellarin_map, theta_to_t
from lucas_umbral.util import field_options, parse_value

if TYPE_CHECKING:
    from lucas_umbral.algebra.field import FieldCtx
    from lucas_umbral.algebra.poly import Poly

logger = logging.getLogger(__name__)

SAMPLE_DEGREE = 4


def _verify(carlitz: CarlitzCtx, a: Poly) -> bool:
    image = pellarin_map(carlitz, carlitz_action(carlitz, a))
    ok = image == theta_to_t(carlitz, a)
    if not ok:
        logger.error("Image of C_%s is %s, not %s.", a, image, theta_to_t(carlitz, a))
    return ok


@click.command()
@click.argument("a")
@click.option(
    "--samples",
    type=click.IntRange(min=0),
    default=0,
    show_default=True,
    help="Also check this many random elements of degree at most 4.",
)
@field_options
@click.pass_context
def pellarin(
    ctx: click.Context,
    *,
    a: str,
    samples: int,
    fld: FieldCtx,
) -> None:
    """
    Show the Carlitz module element C_A and its image in A[t].

    C_th = th + tau, and tau^j is sent to b_j(t), the product of
    (t - th^{q^e}) over e < j. The image of C_A is checked to be A with th
    replaced by t.
    """
    carlitz = CarlitzCtx(fld, max_t=0)
    element = parse_value(a, carlitz.a_ring, "A")
    c_a = carlitz_action(carlitz, element)
    click.echo(f"C_a = {c_a}")
    click.echo(f"image = {pellarin_map(carlitz, c_a)}")
    ok = _verify(carlitz, element)  # type: ignore[arg-type]

    rng = ctx.obj["rng"]
    for _ in range(samples):
        sample = carlitz.a_ring.from_coefficients(
            fld.random(rng) for _ in range(SAMPLE_DEGREE + 1)
        )
        ok = _verify(carlitz, sample) and ok
    if samples:
        logger.info("Checked %d random elements.", samples)

    click.echo(f"check: {'pass' if ok else 'fail'}")
    if not ok:
        ctx.exit(1)
