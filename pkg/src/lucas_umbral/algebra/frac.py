"""
Fractions over a polynomial ring with field coefficients.

Only `Frac(A)` with `A = F_q[th]` is needed in practice: the Carlitz polynomials
divide by the products `D_t`. Fractions are kept reduced with a monic
denominator, so equal fractions have equal numerators and denominators.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from lucas_umbral.algebra.poly import Poly, PolyRing, poly_gcd
from lucas_umbral.algebra.ring import Element, Ring, compact

if TYPE_CHECKING:
    from lucas_umbral.algebra.field import FieldCtx


@dataclass(frozen=True)
class FracField(Ring):
    """
    The fraction field of a univariate polynomial ring over a finite field.
    """

    base: PolyRing

    is_field = True

    def __post_init__(self) -> None:
        """
        Check that the base ring is Euclidean.
        """
        if not self.base.base.is_field:
            msg = f"Cannot form fractions over {self.base.tag}."
            raise ValueError(msg)

    @property
    def field(self) -> FieldCtx:  # noqa: D102
        return self.base.field

    @property
    def tag(self) -> str:  # noqa: D102
        return f"Frac({self.base.tag})"

    def coerce(self, value: object) -> Frac:  # noqa: D102
        if isinstance(value, Frac) and value.ring == self:
            return value
        return Frac(self, self.base.coerce(value), self.base.one)

    def gen(self, name: str) -> Frac:  # noqa: D102
        return self.coerce(self.base.gen(name))

    def fraction(self, num: object, den: object) -> Frac:
        """
        Build the reduced fraction `num / den`.

        Raises:
            ZeroDivisionError: If the denominator is zero.
        """
        return Frac(self, self.base.coerce(num), self.base.coerce(den))


class Frac(Element):
    """
    A reduced fraction `num / den` with monic `den`.
    """

    __slots__ = ("_ring", "den", "num")

    def __init__(self, ring: FracField, num: Poly, den: Poly) -> None:
        """
        Initialize and reduce the fraction.

        Raises:
            ZeroDivisionError: If `den` is zero.
        """
        if den.is_zero():
            msg = f"Zero denominator in {ring.tag}."
            raise ZeroDivisionError(msg)
        if num.is_zero():
            num, den = num, ring.base.one
        elif not den.is_constant() or den.leading != 1:
            g = poly_gcd(num, den)
            num, den = num // g, den // g
            lead = den.leading.inverse()
            num, den = num * lead, den * lead
        self._ring = ring
        self.num: Poly = num
        self.den: Poly = den

    @property
    def ring(self) -> FracField:  # noqa: D102
        return self._ring

    def is_zero(self) -> bool:  # noqa: D102
        return self.num.is_zero()

    def is_integral(self) -> bool:
        """
        Whether the denominator is 1, so the fraction lies in the base ring.
        """
        return self.den == 1

    def _add(self, other: Frac) -> Frac:
        if self.den == other.den:
            return Frac(self._ring, self.num + other.num, self.den)
        return Frac(
            self._ring,
            self.num * other.den + other.num * self.den,
            self.den * other.den,
        )

    def __neg__(self) -> Frac:
        return Frac(self._ring, -self.num, self.den)

    def _mul(self, other: Frac) -> Frac:
        return Frac(self._ring, self.num * other.num, self.den * other.den)

    def _equals(self, other: Frac) -> bool:
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self._ring, self.num, self.den))

    def inverse(self) -> Frac:
        """
        Return `den / num`.

        Raises:
            ZeroDivisionError: If the fraction is zero.
        """
        if self.is_zero():
            msg = f"Division by zero in {self._ring.tag}."
            raise ZeroDivisionError(msg)
        return Frac(self._ring, self.den, self.num)

    def __str__(self) -> str:
        if self.is_integral():
            return str(self.num)
        return f"{compact(str(self.num))}/{compact(str(self.den))}"
