"""
Subcommand to enumerate binomial-type sequences over a prime field.
"""

from __future__ import annotations

import csv
import io
import logging
from pathlib import Path
from typing import TYPE_CHECKING

import rich_click as click
from rich.console import Console
from rich.table import Table

from lucas_umbral.explorer import Explorer, classify
from lucas_umbral.sequence import check_binomial, gen_function
from lucas_umbral.util import emit, field_options, output_option

if TYPE_CHECKING:
    from lucas_umbral.algebra.field import FieldCtx

logger = logging.getLogger(__name__)

COLUMNS = ("id", "classification", "kernel_dims", "sequence")


def _rows(explorer: Explorer) -> list[dict[str, str]]:
    """
    Enumerate, revalidate and classify every sequence.

    Raises:
        RuntimeError: If an emitted sequence fails the binomial identity.
    """
    rows = []
    for k, found in enumerate(explorer.walk()):
        seq = found.sequence
        report = check_binomial(seq)
        if not report.passed:
            msg = f"Sequence {k} fails revalidation: {report}."
            raise RuntimeError(msg)
        kind = classify(gen_function(seq)).kind
        rows.append({
            "id": f"{k:05d}",
            "classification": kind,
            "kernel_dims": ";".join(map(str, found.kernel_dims)),
            "sequence": ", ".join(str(e) for e in seq.entries),
            "text": seq.to_text(),
        })
    return rows


def _write_csv(rows: list[dict[str, str]]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, COLUMNS, extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buffer.getvalue()


@click.command()
@click.option(
    "--N",
    "n",
    type=click.IntRange(min=1),
    default=4,
    show_default=True,
    help="The truncation order of the sequences.",
)
@click.option(
    "--d",
    "degree",
    type=click.IntRange(min=1),
    default=2,
    show_default=True,
    help="The degree bound on every entry.",
)
@click.option(
    "--budget",
    type=click.IntRange(min=1),
    help="Stop after this many sequences.",
)
@click.option(
    "--workers",
    type=click.IntRange(min=1),
    default=1,
    show_default=True,
    help="Search the first-level branches on this many processes.",
)
@click.option(
    "--emit",
    "emit_dir",
    type=click.Path(file_okay=False, path_type=Path),
    help="Write every sequence and a summary.csv into this directory.",
)
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["text", "csv"]),
    default="text",
    show_default=True,
    help="The format of the summary.",
)
@output_option
@field_options
@click.pass_context
def explore(  # noqa: PLR0913
    ctx: click.Context,
    *,
    n: int,
    degree: int,
    budget: int | None,
    workers: int,
    emit_dir: Path | None,
    fmt: str,
    output: Path | None,
    fld: FieldCtx,
) -> None:
    """
    Enumerate every binomial-type sequence of length N and degree at most D.

    Each step solves a linear system for the next entry and branches over
    its solutions. Every sequence is revalidated and classified against the
    Carlitz construction and the null-sequence construction.
    """
    if fld.lam != 1:
        msg = "explore runs over prime fields only; use --p."
        raise click.UsageError(msg, ctx=ctx)

    explorer = Explorer(fld, n, degree, budget, workers)
    try:
        rows = _rows(explorer)
    except RuntimeError as err:
        logger.error("%s", err)  # noqa: TRY400
        ctx.exit(1)
    logger.info("Found %d sequences.", len(rows))

    if emit_dir is not None:
        emit_dir.mkdir(parents=True, exist_ok=True)
        for row in rows:
            (emit_dir / f"seq_{row['id']}.seq").write_text(row["text"], encoding="utf-8")
        (emit_dir / "summary.csv").write_text(_write_csv(rows), encoding="utf-8")
        logger.info("Wrote %d sequences to %s.", len(rows), emit_dir)

    if fmt == "csv" or output is not None:
        emit(_write_csv(rows), output)
        return

    table = Table(
        title=f"Sequences over {fld.name}, N={n}, d={degree}",
        show_header=True,
        header_style="bold magenta",
    )
    table.add_column("Id", no_wrap=True)
    table.add_column("Classification")
    table.add_column("Kernel dims")
    table.add_column("Sequence", overflow="fold")
    for row in rows:
        table.add_row(row["id"], row["classification"], row["kernel_dims"], row["sequence"])
    Console().print(table)
    if explorer.exhausted:
        click.echo(f"Budget of {budget} exhausted; the enumeration is incomplete.")
