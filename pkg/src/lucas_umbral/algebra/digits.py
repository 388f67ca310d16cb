"""
q-adic digits and binomial coefficients modulo p.

Binomial coefficients are never computed from factorials. Instead, Lucas'
theorem reduces `C(m, n) mod p` to a product of binomials of single base-`p`
digits.
"""

from __future__ import annotations

import math
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from collections.abc import Sequence

    from lucas_umbral.algebra.field import FieldCtx, FieldElem


def digits(n: int, q: int) -> tuple[int, ...]:
    """
    Return the base-`q` digits of `n`, least significant first.

    Zero has the empty expansion and no trailing zero digits are stored.

    Raises:
        ValueError: If `n` is negative or `q < 2`.
    """
    if n < 0 or q < 2:  # noqa: PLR2004
        msg = f"Cannot expand {n} in base {q}."
        raise ValueError(msg)
    out = []
    while n:
        n, r = divmod(n, q)
        out.append(r)
    return tuple(out)


def from_digits(ds: Sequence[int], q: int) -> int:
    """
    Inverse of `digits`.
    """
    n = 0
    for d in reversed(ds):
        n = n * q + d
    return n


def digit_sum(i: int, q: int) -> int:
    """
    The sum of the base-`q` digits of `i`.
    """
    return sum(digits(i, q))


def is_power_of(n: int, q: int) -> bool:
    """
    Whether `n = q^k` for some `k >= 0`.
    """
    if n < 1:
        return False
    while n % q == 0:
        n //= q
    return n == 1


def lucas(m: int, n: int, p: int) -> int:
    """
    Compute `C(m, n) mod p` digitwise.

    Returns zero as soon as a digit of `n` exceeds the matching digit of `m`,
    which covers `n > m` as well.
    """
    if n < 0 or m < 0:
        return 0
    result = 1
    while n:
        m, mi = divmod(m, p)
        n, ni = divmod(n, p)
        if ni > mi:
            return 0
        result = result * math.comb(mi, ni) % p
    return result


def binom_mod_p(m: int, n: int, ctx: FieldCtx) -> FieldElem:
    """
    `C(m, n)` as an element of the prime subfield of `ctx`.
    """
    return ctx.coerce(lucas(m, n, ctx.p))
