"""
Affine linear systems over a finite field.

Row reduction is delegated to `galois`: each `FieldCtx` is mirrored by a
`galois.GF` class built from the same modulus, so that the integer
representation of an element is its coefficient vector read in base `p`.
"""

from __future__ import annotations

import functools
import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING

import galois
import numpy as np

from lucas_umbral.algebra.digits import digits, from_digits

if TYPE_CHECKING:
    from collections.abc import Sequence

    from lucas_umbral.algebra.field import FieldCtx, FieldElem

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AffineSolution:
    """
    The solution set `particular + span(kernel)` of `rows * v = rhs`.
    """

    particular: tuple[FieldElem, ...]
    kernel: tuple[tuple[FieldElem, ...], ...]

    @property
    def dimension(self) -> int:
        """
        The dimension of the solution space.
        """
        return len(self.kernel)


@functools.cache
def galois_field(field: FieldCtx) -> type[galois.FieldArray]:
    """
    The `galois` array class for `field`, with the same modulus.
    """
    if field.lam == 1:
        return galois.GF(field.p)
    # galois lists coefficients from the leading term down.
    return galois.GF(field.q, irreducible_poly=list(reversed(field.modulus)))


def _to_int(value: FieldElem) -> int:
    return from_digits(value.rep, value.ctx.p)


def _from_int(value: int, field: FieldCtx) -> FieldElem:
    return field.element(digits(value, field.p))


def solve_affine_system(
    rows: Sequence[Sequence[object]],
    rhs: Sequence[object],
    field: FieldCtx,
    ncols: int | None = None,
) -> AffineSolution | None:
    """
    Solve `rows * v = rhs` through the reduced row echelon form.

    The reduced form is unique, so the result is deterministic. Free
    variables are set to zero in the particular solution, and the kernel has
    one basis vector per free variable, in column order.

    Args:
        rows:
            The coefficient matrix; entries must be coercible into `field`.

        rhs:
            The right-hand side, one entry per row.

        field:
            The field to solve over.

        ncols:
            The number of unknowns. Required only when `rows` is empty.

    Returns:
        The solution, or `None` if the system is inconsistent.

    Raises:
        ValueError: If the dimensions do not match.
    """
    if len(rows) != len(rhs):
        msg = f"Got {len(rows)} rows but {len(rhs)} right-hand side entries."
        raise ValueError(msg)
    width = ncols if ncols is not None else (len(rows[0]) if rows else 0)
    if any(len(r) != width for r in rows):
        msg = f"Every row must have {width} entries."
        raise ValueError(msg)

    gf = galois_field(field)
    reduced = gf.Zeros((0, width + 1))
    if rows:
        augmented = gf([
            [_to_int(field.coerce(c)) for c in row] + [_to_int(field.coerce(b))]
            for row, b in zip(rows, rhs)
        ])
        reduced = augmented.row_reduce()

    pivots: list[int] = []
    for row in reduced:
        nonzero = np.nonzero(row)[0]
        if nonzero.size == 0:
            break
        col = int(nonzero[0])
        if col == width:
            logger.debug("Inconsistent system: %d rows, %d unknowns.", len(rows), width)
            return None
        pivots.append(col)
    logger.debug("Pivot columns %s of %d.", pivots, width)

    zero = field.zero
    particular = [zero] * width
    for i, col in enumerate(pivots):
        particular[col] = _from_int(int(reduced[i, width]), field)

    kernel = []
    for free in (c for c in range(width) if c not in pivots):
        vec = [zero] * width
        vec[free] = field.one
        for i, col in enumerate(pivots):
            vec[col] = -_from_int(int(reduced[i, free]), field)
        kernel.append(tuple(vec))

    return AffineSolution(tuple(particular), tuple(kernel))
