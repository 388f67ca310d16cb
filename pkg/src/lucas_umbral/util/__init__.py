"""
Utility functions shared by the lucas_umbral subcommands.
"""

from __future__ import annotations

import functools
import logging
from pathlib import Path
from typing import TYPE_CHECKING, Any, Literal, TypeVar

import rich_click as click
from click_option_group import MutuallyExclusiveOptionGroup, optgroup

from lucas_umbral.algebra.field import GEN, FieldCtx, field, field_of_order
from lucas_umbral.algebra.parse import ParseError
from lucas_umbral.algebra.poly import PolyRing
from lucas_umbral.divided import DividedElem
from lucas_umbral.sequence import PolySeq

if TYPE_CHECKING:
    from collections.abc import Callable

    from lucas_umbral.algebra.ring import Element, Ring

logger = logging.getLogger(__name__)

F = TypeVar("F", bound="Callable[..., Any]")

FileKind = Literal["sequence", "divided", "linear", "null"]

_KINDS: dict[str, FileKind] = {
    "N=": "sequence",
    "trunc=": "divided",
    "q=": "linear",
    "p=": "null",
}


def build_field(
    p: int | None,
    q: int | None,
    lam: int,
    modulus: str | None,
) -> FieldCtx:
    """
    Build the coefficient field from the field options.

    Args:
        p:
            The characteristic.

        q:
            The order of the field, as a shorthand for `p^lambda` with the
            default modulus.

        lam:
            The degree of the extension over `F_p`.

        modulus:
            A monic irreducible polynomial in `u` of degree `lam`.

    Returns:
        The field `F_{p^lam}`; `F_2` when neither `p` nor `q` is given.

    Raises:
        click.UsageError: If `--q` is combined with `--lambda` or `--modulus`.
        click.BadParameter: If the options do not describe a field.
    """
    if q is not None:
        if lam != 1 or modulus is not None:
            msg = "--q cannot be combined with --lambda or --modulus."
            raise click.UsageError(msg)
        try:
            return field_of_order(q)
        except ValueError as err:
            raise click.BadParameter(str(err), param_hint="--q") from err

    p = 2 if p is None else p
    coeffs = None
    if modulus is not None:
        try:
            prime = field(p)
            poly = PolyRing(prime, GEN).parse(modulus)
        except ValueError as err:
            raise click.BadParameter(str(err), param_hint="--modulus") from err
        coeffs = tuple(int(c) for c in poly.coeffs)
    try:
        return field(p, lam, coeffs)
    except ValueError as err:
        raise click.BadParameter(str(err), param_hint="--p/--lambda/--modulus") from err


def field_options(func: F) -> F:
    """
    Add the field options to a subcommand.

    The decorated function receives the constructed field as `fld` in place of
    the individual `p`, `q`, `lam` and `modulus` options.
    """

    @functools.wraps(func)
    def wrapper(
        *args: Any,  # noqa: ANN401
        p: int | None,
        q: int | None,
        lam: int,
        modulus: str | None,
        **kwargs: Any,  # noqa: ANN401
    ) -> Any:  # noqa: ANN401
        kwargs["fld"] = build_field(p, q, lam, modulus)
        logger.debug("Working over %s.", kwargs["fld"].name)
        return func(*args, **kwargs)

    decorators = [
        optgroup.group("Field Options", cls=MutuallyExclusiveOptionGroup),
        optgroup.option("--p", "p", type=int, help="The characteristic (default: 2)."),
        optgroup.option(
            "--q",
            "q",
            type=int,
            help="The field order p^lambda, with the default modulus.",
        ),
        optgroup.group("Extension Options"),
        optgroup.option(
            "--lambda",
            "lam",
            type=click.IntRange(min=1),
            default=1,
            show_default=True,
            help="The degree of the extension over F_p.",
        ),
        optgroup.option(
            "--modulus",
            type=str,
            help="A monic irreducible polynomial in u, for example 'u^2+u+1'.",
        ),
    ]
    for decorator in reversed(decorators):
        wrapper = decorator(wrapper)
    return wrapper  # type: ignore[return-value]


def output_option(func: F) -> F:
    """
    Add the `--output` option, passed to the subcommand as `output`.
    """
    return click.option(
        "--output",
        type=click.Path(dir_okay=False, writable=True, path_type=Path),
        help="Write the result to this file instead of standard output.",
    )(func)


def file_kind(text: str) -> FileKind:
    """
    Identify a file format from its header line.

    Raises:
        ParseError: If the header is not recognised.
    """
    header = text.lstrip()
    for prefix, kind in _KINDS.items():
        if header.startswith(prefix):
            return kind
    msg = "Unrecognised file header; expected 'N=', 'trunc=', 'q=' or 'p='."
    raise ParseError(msg)


def read_divided(path: Path, fld: FieldCtx) -> DividedElem:
    """
    Read a divided element, accepting sequence files as generating functions.

    Raises:
        click.BadParameter: If the file cannot be parsed.
    """
    text = Path(path).read_text(encoding="utf-8")
    try:
        if file_kind(text) == "sequence":
            seq = PolySeq.from_text(text, fld)
            return DividedElem.from_coefficients(seq.ring, seq.entries)
        return DividedElem.from_text(text, fld)
    except ValueError as err:
        raise click.BadParameter(str(err), param_hint=str(path)) from err


def parse_value(text: str, ring: Ring, hint: str) -> Element:
    """
    Parse an element of `ring` given on the command line.

    Raises:
        click.BadParameter: If the text does not parse.
    """
    try:
        return ring.parse(text)
    except ValueError as err:
        raise click.BadParameter(str(err), param_hint=hint) from err


def emit(text: str, output: Path | None) -> None:
    """
    Write `text` to `output`, or to standard output when `output` is `None`.
    """
    if output is None:
        click.echo(text, nl=False)
        return
    Path(output).write_text(text, encoding="utf-8")
    logger.info("Wrote %s.", output)
