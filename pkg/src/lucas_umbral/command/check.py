"""
Subcommand to check the binomial identity on a sequence or divided element.
"""

from __future__ import annotations

import logging
from pathlib import Path

import rich_click as click

from lucas_umbral.algebra.field import FieldCtx
from lucas_umbral.algebra.poly import PolyRing
from lucas_umbral.carlitz import is_in_carlitz_image
from lucas_umbral.explorer import classify
from lucas_umbral.sequence import (
    PolySeq,
    check_binomial,
    check_multiplicative,
    structural_checks,
)
from lucas_umbral.util import field_options, file_kind, read_divided

logger = logging.getLogger(__name__)


def _check_sequence(ctx: click.Context, text: str, fld: FieldCtx, *, structural: bool) -> bool:
    try:
        seq = PolySeq.from_text(text, fld)
    except ValueError as err:
        raise click.BadParameter(str(err), ctx=ctx, param_hint="FILE") from err
    report = check_binomial(seq)
    click.echo(f"binomial: {report}")
    ok = report.passed
    if not ok:
        logger.error("Binomial identity fails at n=%s.", report.index)
    if structural:
        extra = structural_checks(seq)
        click.echo(f"structural: {'pass' if extra.passed else '; '.join(extra.notes)}")
        ok = ok and extra.passed
    return ok


@click.command()
@click.argument("file", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option(
    "--structural",
    is_flag=True,
    help="Also check the structural consequences on a sequence file.",
)
@click.option(
    "--carlitz",
    "carlitz_q",
    type=click.IntRange(min=2),
    help="Also decide membership in the Carlitz image for this q.",
)
@click.option(
    "--classify",
    "classify_q",
    type=click.IntRange(min=2),
    help="Also classify a multiplicative element against both constructions.",
)
@field_options
@click.pass_context
def check(
    ctx: click.Context,
    *,
    file: Path,
    structural: bool,
    carlitz_q: int | None,
    classify_q: int | None,
    fld: FieldCtx,
) -> None:
    """
    Check a sequence file or a divided element file.

    Sequence files are checked against the binomial identity; divided element
    files are checked for multiplicativity. The exit code is 1 when a
    property fails.
    """
    text = file.read_text(encoding="utf-8")
    try:
        kind = file_kind(text)
    except ValueError as err:
        raise click.BadParameter(str(err), ctx=ctx, param_hint="FILE") from err

    if kind == "sequence":
        ok = _check_sequence(ctx, text, fld, structural=structural)
        if not ok:
            ctx.exit(1)
        return
    if kind != "divided":
        msg = f"Cannot check a {kind} file; expected a sequence or divided element."
        raise click.BadParameter(msg, ctx=ctx, param_hint="FILE")

    f = read_divided(file, fld)
    if not (isinstance(f.ring, PolyRing) and f.ring.var == "x"):
        msg = f"Multiplicativity is checked in the variable x; the file is over {f.ring.tag}."
        raise click.BadParameter(msg, ctx=ctx, param_hint="FILE")
    report = check_multiplicative(f)
    click.echo(f"multiplicative: {report}")
    if not report.passed:
        logger.error("Multiplicativity fails at index %s.", report.index)
        ctx.exit(1)

    if carlitz_q is not None:
        if f.coeff(0) != 1:
            click.echo("carlitz: not applicable, constant coefficient is not 1")
        else:
            click.echo(f"carlitz: {is_in_carlitz_image(f, carlitz_q)}")
    if classify_q is not None:
        if report.status != "pass":
            click.echo("classification: not applicable")
        else:
            result = classify(f, classify_q)
            click.echo(
                f"classification: {result} "
                f"(union={result.union_reading}, group={result.group_reading})"
            )
