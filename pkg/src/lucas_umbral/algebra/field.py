"""
Prime and extension fields.

A field `F_q` with `q = p^lam` is represented by a `FieldCtx` which stores the
characteristic, the degree and a monic irreducible modulus `m(u)` of degree
`lam` over `F_p`. Elements are coefficient vectors of length `lam` over
`{0, ..., p - 1}`, reduced modulo `(p, m(u))`.

Field contexts are created through the cached `field` factory, so two requests
for the same field return the same object.
"""

from __future__ import annotations

import functools
import itertools
import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING

import sympy

from lucas_umbral.algebra.ring import Element, Ring

if TYPE_CHECKING:
    import random
    from collections.abc import Iterator, Sequence

logger = logging.getLogger(__name__)

DEFAULT_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (5, 2): (2, 4, 1),
}
"""
Conway polynomials used as default moduli, keyed by `(p, lam)`.

Coefficients are listed from the constant term upwards.
"""

GEN = "u"
"""
Variable name of the generator of an extension field.
"""


def _trim(coeffs: Sequence[int]) -> list[int]:
    out = list(coeffs)
    while out and not out[-1]:
        out.pop()
    return out


def _poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    """
    Remainder of `a` modulo the monic polynomial `m`, over `F_p`.
    """
    rem = [c % p for c in a]
    dm = len(m) - 1
    for shift in range(len(rem) - 1 - dm, -1, -1):
        c = rem[shift + dm]
        if c:
            for i, mc in enumerate(m):
                rem[shift + i] = (rem[shift + i] - c * mc) % p
    return _trim(rem[:dm]) if dm > 0 else []


def _is_irreducible(m: Sequence[int], p: int) -> bool:
    """
    Trial division by every monic polynomial of degree at most `deg m / 2`.
    """
    deg = len(m) - 1
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _poly_mod(m, [*low, 1], p):
                logger.debug("Modulus %s has factor %s.", m, [*low, 1])
                return False
    return True


@dataclass(frozen=True)
class FieldCtx(Ring):
    """
    The finite field `F_q`, `q = p^lam`.

    Use `field()` rather than instantiating this class directly.
    """

    p: int
    lam: int
    modulus: tuple[int, ...]

    is_field = True

    def __post_init__(self) -> None:
        """
        Validate the characteristic and the modulus.
        """
        if not sympy.isprime(self.p):
            msg = f"Characteristic {self.p} is not prime."
            raise ValueError(msg)
        if self.lam < 1:
            msg = f"Degree {self.lam} must be at least 1."
            raise ValueError(msg)
        if len(self.modulus) != self.lam + 1 or self.modulus[-1] != 1:
            msg = f"Modulus must be monic of degree {self.lam}."
            raise ValueError(msg)
        if any(not 0 <= c < self.p for c in self.modulus):
            msg = f"Modulus coefficients must lie in 0..{self.p - 1}."
            raise ValueError(msg)
        if self.lam > 1 and not _is_irreducible(self.modulus, self.p):
            msg = f"Modulus {_format_rep(self.modulus, self.p)} is reducible."
            raise ValueError(msg)

    @property
    def q(self) -> int:
        """
        The order of the field.
        """
        return self.p**self.lam

    @property
    def field(self) -> FieldCtx:  # noqa: D102
        return self

    @property
    def tag(self) -> str:  # noqa: D102
        return "Fq"

    @property
    def name(self) -> str:
        """
        Human readable name, for example `F_9 = F_3[u]/(u^2+2*u+2)`.
        """
        if self.lam == 1:
            return f"F_{self.p}"
        return f"F_{self.q} = F_{self.p}[{GEN}]/({_format_rep(self.modulus, self.p)})"

    def element(self, rep: Sequence[int]) -> FieldElem:
        """
        Build an element from a coefficient vector (constant term first).
        """
        reduced = _poly_mod(rep, self.modulus, self.p) if self.lam > 1 else _trim(
            [rep[0] % self.p] if rep else []
        )
        padded = reduced + [0] * (self.lam - len(reduced))
        return FieldElem(self, tuple(padded))

    def coerce(self, value: object) -> FieldElem:  # noqa: D102
        if isinstance(value, FieldElem) and value.ctx == self:
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return FieldElem(self, (value % self.p,) + (0,) * (self.lam - 1))
        msg = f"Cannot coerce {value!r} into {self.name}."
        raise TypeError(msg)

    def gen(self, name: str) -> FieldElem:  # noqa: D102
        if name == GEN and self.lam > 1:
            return self.element([0, 1])
        msg = f"Unknown variable {name!r} in {self.name}."
        raise KeyError(msg)

    def elements(self) -> Iterator[FieldElem]:
        """
        Iterate over all `q` elements.

        The order is that of the integers `0, ..., q - 1` read as base-`p`
        coefficient vectors, so `0` and `1` come first.
        """
        for n in range(self.q):
            rep = []
            for _ in range(self.lam):
                n, r = divmod(n, self.p)
                rep.append(r)
            yield FieldElem(self, tuple(rep))

    def random(self, rng: random.Random) -> FieldElem:
        """
        Draw a uniformly random element.
        """
        return FieldElem(self, tuple(rng.randrange(self.p) for _ in range(self.lam)))


class FieldElem(Element):
    """
    An element of a finite field.
    """

    __slots__ = ("ctx", "rep")

    def __init__(self, ctx: FieldCtx, rep: tuple[int, ...]) -> None:
        """
        Initialize the element.

        Args:
            ctx:
                The field this element belongs to.

            rep:
                The reduced coefficient vector of length `ctx.lam`.
        """
        self.ctx = ctx
        self.rep = rep

    @property
    def ring(self) -> FieldCtx:  # noqa: D102
        return self.ctx

    def is_zero(self) -> bool:  # noqa: D102
        return not any(self.rep)

    def _add(self, other: FieldElem) -> FieldElem:
        p = self.ctx.p
        return FieldElem(
            self.ctx, tuple((a + b) % p for a, b in zip(self.rep, other.rep))
        )

    def __neg__(self) -> FieldElem:
        p = self.ctx.p
        return FieldElem(self.ctx, tuple(-a % p for a in self.rep))

    def _mul(self, other: FieldElem) -> FieldElem:
        ctx = self.ctx
        if ctx.lam == 1:
            return FieldElem(ctx, (self.rep[0] * other.rep[0] % ctx.p,))
        prod = [0] * (2 * ctx.lam - 1)
        for i, a in enumerate(self.rep):
            if a:
                for j, b in enumerate(other.rep):
                    prod[i + j] += a * b
        return ctx.element(prod)

    def _equals(self, other: FieldElem) -> bool:
        return self.rep == other.rep

    def __hash__(self) -> int:
        return hash((self.ctx.p, self.ctx.modulus, self.rep))

    def inverse(self) -> FieldElem:
        """
        Return the multiplicative inverse.

        Raises:
            ZeroDivisionError: If the element is zero.
        """
        if self.is_zero():
            msg = f"Division by zero in {self.ctx.name}."
            raise ZeroDivisionError(msg)
        if self.ctx.lam == 1:
            return FieldElem(self.ctx, (pow(self.rep[0], -1, self.ctx.p),))
        return self ** (self.ctx.q - 2)

    def frobenius(self) -> FieldElem:
        """
        Return `self ** p`.
        """
        return self**self.ctx.p

    def __int__(self) -> int:
        """
        Return the integer representative of a prime-field element.

        Raises:
            ValueError: If the element is not in the prime subfield.
        """
        if any(self.rep[1:]):
            msg = f"{self} does not lie in the prime field."
            raise ValueError(msg)
        return self.rep[0]

    def __str__(self) -> str:
        return _format_rep(self.rep, self.ctx.p)


def _format_rep(rep: Sequence[int], p: int) -> str:  # noqa: ARG001
    terms = []
    for e in range(len(rep) - 1, -1, -1):
        c = rep[e]
        if not c:
            continue
        if e == 0:
            terms.append(str(c))
        else:
            mono = GEN if e == 1 else f"{GEN}^{e}"
            terms.append(mono if c == 1 else f"{c}*{mono}")
    return " + ".join(terms) or "0"


@functools.cache
def field(p: int, lam: int = 1, modulus: tuple[int, ...] | None = None) -> FieldCtx:
    """
    Return the field `F_{p^lam}`.

    Args:
        p:
            The characteristic, which must be prime.

        lam:
            The degree of the extension over `F_p`.

        modulus:
            The coefficients of a monic irreducible polynomial of degree `lam`,
            constant term first. If omitted, a built-in Conway polynomial is
            used (or the identity modulus `u` when `lam == 1`).

    Returns:
        The field context.

    Raises:
        ValueError: If `p` is not prime, or the modulus is missing, not monic,
            of the wrong degree or reducible.
    """
    if modulus is None:
        if lam == 1:
            modulus = (0, 1)
        elif (p, lam) in DEFAULT_MODULI:
            modulus = DEFAULT_MODULI[(p, lam)]
        else:
            msg = f"No default modulus for q = {p}^{lam}; please supply one."
            raise ValueError(msg)
    ctx = FieldCtx(p, lam, tuple(modulus))
    logger.debug("Constructed field %s.", ctx.name)
    return ctx


def field_of_order(q: int) -> FieldCtx:
    """
    Return the field with `q` elements, using the default modulus.

    Raises:
        ValueError: If `q` is not a prime power.
    """
    factors = sympy.factorint(q)
    if q < 2 or len(factors) != 1:  # noqa: PLR2004
        msg = f"{q} is not a prime power."
        raise ValueError(msg)
    ((p, lam),) = factors.items()
    return field(p, lam)
