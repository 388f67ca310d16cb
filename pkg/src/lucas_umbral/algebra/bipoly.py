"""
Bivariate polynomials in `x` and `y`.

These hold both sides of the binomial identity `p_n(x + y) = ...`. They are
stored sparsely as a map from `(deg_x, deg_y)` to a nonzero coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Any

from lucas_umbral.algebra.digits import lucas
from lucas_umbral.algebra.poly import Poly, PolyRing
from lucas_umbral.algebra.ring import Element, Ring, compact

if TYPE_CHECKING:
    from collections.abc import Iterator, Mapping

    from lucas_umbral.algebra.field import FieldCtx

Monomial = tuple[int, int]


@dataclass(frozen=True)
class BiPolyRing(Ring):
    """
    The ring `base[x, y]`.
    """

    base: Ring

    @property
    def field(self) -> FieldCtx:  # noqa: D102
        return self.base.field

    @property
    def tag(self) -> str:  # noqa: D102
        return f"{self.base.tag}[x,y]"

    @property
    def x_ring(self) -> PolyRing:
        """
        The univariate ring `base[x]`.
        """
        return PolyRing(self.base, "x")

    def coerce(self, value: object) -> BiPoly:  # noqa: D102
        if isinstance(value, BiPoly) and value.ring == self:
            return value
        if isinstance(value, Poly) and value.ring.base == self.base:
            if value.ring.var == "x":
                return self.from_x(value)
            if value.ring.var == "y":
                return self.from_y(value)
        c = self.base.coerce(value)
        return BiPoly(self, {(0, 0): c})

    def gen(self, name: str) -> BiPoly:  # noqa: D102
        if name == "x":
            return BiPoly(self, {(1, 0): self.base.one})
        if name == "y":
            return BiPoly(self, {(0, 1): self.base.one})
        return self.coerce(self.base.gen(name))

    def from_x(self, f: Poly) -> BiPoly:
        """
        Embed a polynomial as a polynomial in `x`.
        """
        return BiPoly(self, {(e, 0): c for e, c in f.terms()})

    def from_y(self, f: Poly) -> BiPoly:
        """
        Embed a polynomial as a polynomial in `y`.
        """
        return BiPoly(self, {(0, e): c for e, c in f.terms()})


class BiPoly(Element):
    """
    A polynomial in `x` and `y`.
    """

    __slots__ = ("_ring", "coeffs")

    def __init__(self, ring: BiPolyRing, coeffs: Mapping[Monomial, Any]) -> None:
        """
        Initialize the polynomial, dropping zero coefficients.
        """
        self._ring = ring
        self.coeffs: dict[Monomial, Any] = {
            m: c for m, c in coeffs.items() if not c.is_zero()
        }

    @property
    def ring(self) -> BiPolyRing:  # noqa: D102
        return self._ring

    def is_zero(self) -> bool:  # noqa: D102
        return not self.coeffs

    def coeff(self, i: int, j: int) -> Any:  # noqa: ANN401
        """
        The coefficient of `x^i y^j`.
        """
        return self.coeffs.get((i, j), self._ring.base.zero)

    def terms(self) -> Iterator[tuple[Monomial, Any]]:
        """
        Iterate over the nonzero terms, highest `(deg_x, deg_y)` first.
        """
        for m in sorted(self.coeffs, reverse=True):
            yield m, self.coeffs[m]

    def leading_monomial(self) -> Monomial | None:
        """
        The lexicographically largest `(deg_x, deg_y)`, or `None` for zero.
        """
        return max(self.coeffs) if self.coeffs else None

    def _add(self, other: BiPoly) -> BiPoly:
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            out[m] = out[m] + c if m in out else c
        return BiPoly(self._ring, out)

    def __neg__(self) -> BiPoly:
        return BiPoly(self._ring, {m: -c for m, c in self.coeffs.items()})

    def _mul(self, other: BiPoly) -> BiPoly:
        out: dict[Monomial, Any] = {}
        for (i1, j1), a in self.coeffs.items():
            for (i2, j2), b in other.coeffs.items():
                m = (i1 + i2, j1 + j2)
                out[m] = out[m] + a * b if m in out else a * b
        return BiPoly(self._ring, out)

    def _equals(self, other: BiPoly) -> bool:
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self._ring, frozenset(self.coeffs.items())))

    def at_y_zero(self) -> Poly:
        """
        Substitute `y = 0`, giving a polynomial in `x`.
        """
        return self._ring.x_ring.from_terms(
            (i, c) for (i, j), c in self.coeffs.items() if j == 0
        )

    def swap(self) -> BiPoly:
        """
        Exchange `x` and `y`.
        """
        return BiPoly(self._ring, {(j, i): c for (i, j), c in self.coeffs.items()})

    def is_symmetric(self) -> bool:
        """
        Whether the coefficient of `x^i y^j` equals that of `x^j y^i` for all `i, j`.
        """
        return self == self.swap()

    def __str__(self) -> str:
        many = len(self.coeffs) > 1
        parts = []
        for (i, j), c in self.terms():
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in (("x", i), ("y", j)) if e
            )
            ctext = str(c)
            if not mono:
                parts.append(compact(ctext) if many else ctext)
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{compact(ctext)}*{mono}")
        return " + ".join(parts) or "0"


def substitute_sum(f: Poly) -> BiPoly:
    """
    Expand `f(x + y)`.

    The expansion coefficients `C(n, k)` are computed with Lucas' theorem, so
    for example `(x + y)^p = x^p + y^p`.
    """
    ring = BiPolyRing(f.ring.base)
    p = ring.characteristic
    out: dict[Monomial, Any] = {}
    for n, c in f.terms():
        for k in range(n + 1):
            b = lucas(n, k, p)
            if b:
                m = (k, n - k)
                term = c * b
                out[m] = out[m] + term if m in out else term
    return BiPoly(ring, out)
