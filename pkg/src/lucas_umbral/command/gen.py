"""
Subcommand to generate sequences and generating functions.
"""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING

import rich_click as click

from lucas_umbral.algebra.poly import PolyRing
from lucas_umbral.carlitz import LinearSeq, carlitz_sequence
from lucas_umbral.second import NullSeq, build_second
from lucas_umbral.sequence import BUILTINS, builtin, gen_function, sequence_of
from lucas_umbral.util import emit, field_options, output_option, parse_value

if TYPE_CHECKING:
    from pathlib import Path

    from lucas_umbral.algebra.field import FieldCtx
    from lucas_umbral.sequence import PolySeq

logger = logging.getLogger(__name__)

NAMES = (*BUILTINS, "carlitz", "second")


def _carlitz(
    ctx: click.Context,
    ring: PolyRing,
    entries: tuple[str, ...],
    length: int | None,
    n: int,
) -> PolySeq:
    if length is not None and entries:
        msg = "--random cannot be combined with --entry."
        raise click.UsageError(msg, ctx=ctx)
    q = ring.field.q
    if length is not None:
        seq = LinearSeq.random(ring, q, length, ctx.obj["rng"])
        logger.info("Random entries: %s.", ", ".join(map(str, seq.entries)))
    elif entries:
        polys = tuple(parse_value(e, ring, "--entry") for e in entries)
        try:
            seq = LinearSeq(ring, q, polys)  # type: ignore[arg-type]
        except ValueError as err:
            raise click.BadParameter(str(err), ctx=ctx, param_hint="--entry") from err
    else:
        msg = "The carlitz sequence needs --entry or --random."
        raise click.UsageError(msg, ctx=ctx)
    return carlitz_sequence(seq, n)


def _second(
    ctx: click.Context,
    ring: PolyRing,
    indices: str | None,
    entries: tuple[str, ...],
    n: int,
) -> PolySeq:
    if not indices:
        msg = "The second construction needs --indices."
        raise click.UsageError(msg, ctx=ctx)
    try:
        values = tuple(int(i) for i in indices.split(",") if i.strip())
        x = NullSeq(ring.characteristic, values)
        polys = [parse_value(e, ring, "--entry") for e in entries]
        f = build_second(x, polys, ring=ring, trunc=n)  # type: ignore[arg-type]
    except ValueError as err:
        raise click.BadParameter(str(err), ctx=ctx, param_hint="--indices/--entry") from err
    return sequence_of(f)


@click.command()
@click.argument("name", type=click.Choice(NAMES))
@click.option(
    "--N",
    "n",
    type=click.IntRange(min=1),
    default=8,
    show_default=True,
    help="The truncation order.",
)
@click.option(
    "--entry",
    "entries",
    multiple=True,
    help="An entry of the input sequence (carlitz, second). Can be repeated.",
)
@click.option(
    "--random",
    "length",
    type=click.IntRange(min=1),
    help="Draw this many random q-linear entries (carlitz).",
)
@click.option(
    "--indices",
    help="Comma-separated null sequence, for example '1,3,7' (second).",
)
@click.option(
    "--divided",
    is_flag=True,
    help="Emit the generating function instead of the sequence.",
)
@output_option
@field_options
@click.pass_context
def gen(  # noqa: PLR0913
    ctx: click.Context,
    *,
    name: str,
    n: int,
    entries: tuple[str, ...],
    length: int | None,
    indices: str | None,
    divided: bool,
    output: Path | None,
    fld: FieldCtx,
) -> None:
    """
    Generate a named sequence.

    The builtin sequences are the monomials, the Pochhammer symbols, the
    digit-sum sequence and the trivial sequence. The carlitz sequence applies
    the Carlitz construction to q-linear entries, and the second sequence
    builds `1 + sum_j e_j D_{i_j}` over a null sequence.
    """
    ring = PolyRing(fld, "x")
    if name == "carlitz":
        seq = _carlitz(ctx, ring, entries, length, n)
    elif name == "second":
        seq = _second(ctx, ring, indices, entries, n)
    else:
        seq = builtin(name, fld, n)
    logger.info("Generated %s up to N=%d over %s.", name, n, fld.name)
    emit(gen_function(seq).to_text() if divided else seq.to_text(), output)
