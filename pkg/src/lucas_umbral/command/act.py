"""
Subcommand to apply the digit permutation and endomorphism actions.
"""

from __future__ import annotations

import logging
from pathlib import Path

import rich_click as click

from lucas_umbral.actions import (
    Action,
    DigitPerm,
    DilationAction,
    EvaluationAction,
    FrobeniusAction,
    SigmaAction,
    stability_report,
)
from lucas_umbral.algebra.field import FieldCtx
from lucas_umbral.algebra.poly import PolyRing
from lucas_umbral.util import emit, field_options, output_option, parse_value, read_divided

logger = logging.getLogger(__name__)


def _action(
    ctx: click.Context,
    kind: str,
    perm: str | None,
    window: int | None,
    r: str | None,
    q: int,
    ring: object,
) -> Action:
    if kind == "sigma":
        if perm is None or window is None:
            msg = "sigma needs --perm and --K."
            raise click.UsageError(msg, ctx=ctx)
        try:
            return SigmaAction(DigitPerm.parse(perm, q, window))
        except ValueError as err:
            raise click.BadParameter(str(err), ctx=ctx, param_hint="--perm") from err
    if kind == "pi3":
        if r is None:
            msg = "pi3 needs --r."
            raise click.UsageError(msg, ctx=ctx)
        return EvaluationAction(parse_value(r, ring, "--r"))  # type: ignore[arg-type]
    if kind == "pi1":
        return FrobeniusAction()
    return DilationAction()


@click.command()
@click.argument("kind", type=click.Choice(["sigma", "pi1", "pi2", "pi3"]))
@click.argument("file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--perm", help="Digit permutation such as '0>1,1>0' (sigma).")
@click.option(
    "--K",
    "window",
    type=click.IntRange(min=1),
    help="Number of permuted digit positions; the element must have trunc q^K (sigma).",
)
@click.option("--r", help="The scaling value r (pi3).")
@output_option
@field_options
@click.pass_context
def act(  # noqa: PLR0913
    ctx: click.Context,
    *,
    kind: str,
    file: Path,
    perm: str | None,
    window: int | None,
    r: str | None,
    output: Path | None,
    fld: FieldCtx,
) -> None:
    """
    Apply an action to a divided element.

    `sigma` permutes the q-adic digit positions of the indices, `pi1` raises
    coefficients to the p-th power, `pi2` sends D_i to D_{pi} and `pi3` scales
    D_i by r^i. The image is written out and the effect on multiplicativity
    and Carlitz membership is reported; the exit code is 1 when a
    multiplicative input loses multiplicativity.
    """
    f = read_divided(file, fld)
    action = _action(ctx, kind, perm, window, r, fld.q, f.ring)
    q = fld.q if isinstance(f.ring, PolyRing) else None
    try:
        report = stability_report(action, f, q)
    except (TypeError, ValueError) as err:
        raise click.BadParameter(str(err), ctx=ctx, param_hint="FILE") from err

    logger.info(
        "Membership before %s, after %s.",
        report.membership_before,
        report.membership_after,
    )
    emit(report.image.to_text(), output)
    if not report.keeps_multiplicativity:
        logger.error(
            "%s breaks multiplicativity: %s.", action, report.multiplicative_after
        )
        ctx.exit(1)
