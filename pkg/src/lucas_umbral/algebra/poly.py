"""
Univariate polynomials over an arbitrary coefficient ring.

The same `Poly` class serves `F_q[x]`, `A = F_q[th]`, `A[x]`, `Frac(A)[x]` and
`A[t]`. A polynomial stores a dense tuple of coefficients, constant term
first, with trailing zeros trimmed; the zero polynomial has the empty tuple and
degree `NEG_INF`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Any

from lucas_umbral.algebra.digits import is_power_of
from lucas_umbral.algebra.ring import NEG_INF, Element, Ring, compact

if TYPE_CHECKING:
    from collections.abc import Callable, Iterable, Iterator

    from lucas_umbral.algebra.field import FieldCtx


@dataclass(frozen=True)
class PolyRing(Ring):
    """
    The polynomial ring `base[var]`.
    """

    base: Ring
    var: str

    @property
    def field(self) -> FieldCtx:  # noqa: D102
        return self.base.field

    @property
    def tag(self) -> str:  # noqa: D102
        if self.var == "th" and self.base is self.base.field:
            return "A"
        return f"{self.base.tag}[{self.var}]"

    def coerce(self, value: object) -> Poly:  # noqa: D102
        if isinstance(value, Poly) and value.ring == self:
            return value
        return Poly(self, (self.base.coerce(value),))

    def gen(self, name: str) -> Element:  # noqa: D102
        if name == self.var:
            return self.monomial(self.base.one, 1)
        return self.coerce(self.base.gen(name))

    @property
    def x(self) -> Poly:
        """
        The generator of the ring.
        """
        return self.monomial(self.base.one, 1)

    def monomial(self, coeff: object, exponent: int) -> Poly:
        """
        Return `coeff * var^exponent`.
        """
        c = self.base.coerce(coeff)
        return Poly(self, (self.base.zero,) * exponent + (c,))

    def from_coefficients(self, coeffs: Iterable[object]) -> Poly:
        """
        Build a polynomial from coefficients, constant term first.
        """
        return Poly(self, tuple(self.base.coerce(c) for c in coeffs))

    def from_terms(self, terms: Iterable[tuple[int, object]]) -> Poly:
        """
        Build a polynomial from `(exponent, coefficient)` pairs.

        Repeated exponents are summed.
        """
        acc: dict[int, Any] = {}
        for e, c in terms:
            acc[e] = acc.get(e, self.base.zero) + self.base.coerce(c)
        if not acc:
            return Poly(self, ())
        coeffs = [self.base.zero] * (max(acc) + 1)
        for e, c in acc.items():
            coeffs[e] = c
        return Poly(self, tuple(coeffs))


class Poly(Element):
    """
    A polynomial in one variable.
    """

    __slots__ = ("_ring", "coeffs")

    def __init__(self, ring: PolyRing, coeffs: tuple[Any, ...]) -> None:
        """
        Initialize the polynomial, trimming trailing zero coefficients.

        Args:
            ring:
                The polynomial ring.

            coeffs:
                Coefficients in `ring.base`, constant term first.
        """
        end = len(coeffs)
        while end and coeffs[end - 1].is_zero():
            end -= 1
        self._ring = ring
        self.coeffs = coeffs[:end]

    @property
    def ring(self) -> PolyRing:  # noqa: D102
        return self._ring

    @property
    def degree(self) -> float:
        """
        The degree, or `NEG_INF` for the zero polynomial.
        """
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def leading(self) -> Any:  # noqa: ANN401
        """
        The leading coefficient (zero for the zero polynomial).
        """
        return self.coeffs[-1] if self.coeffs else self._ring.base.zero

    def coeff(self, e: int) -> Any:  # noqa: ANN401
        """
        The coefficient of `var^e`.
        """
        if 0 <= e < len(self.coeffs):
            return self.coeffs[e]
        return self._ring.base.zero

    def terms(self) -> Iterator[tuple[int, Any]]:
        """
        Iterate over `(exponent, coefficient)` for nonzero coefficients.
        """
        for e, c in enumerate(self.coeffs):
            if not c.is_zero():
                yield e, c

    def exponents(self) -> list[int]:
        """
        The exponents of the nonzero monomials, increasing.
        """
        return [e for e, _ in self.terms()]

    def is_zero(self) -> bool:  # noqa: D102
        return not self.coeffs

    def is_constant(self) -> bool:
        """
        Whether the polynomial has degree at most 0.
        """
        return len(self.coeffs) <= 1

    def _add(self, other: Poly) -> Poly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(self._ring, tuple(out))

    def __neg__(self) -> Poly:
        return Poly(self._ring, tuple(-c for c in self.coeffs))

    def _mul(self, other: Poly) -> Poly:
        if not self.coeffs or not other.coeffs:
            return Poly(self._ring, ())
        zero = self._ring.base.zero
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return Poly(self._ring, tuple(out))

    def _equals(self, other: Poly) -> bool:
        return len(self.coeffs) == len(other.coeffs) and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __hash__(self) -> int:
        return hash((self._ring, self.coeffs))

    def inverse(self) -> Poly:
        """
        Invert a constant polynomial.

        Raises:
            ArithmeticError: If the polynomial is not a nonzero constant with an
                invertible coefficient.
        """
        if len(self.coeffs) != 1:
            msg = f"{self} is not invertible in {self._ring.tag}."
            raise ArithmeticError(msg)
        return Poly(self._ring, (self.coeffs[0].inverse(),))

    def __divmod__(self, divisor: object) -> tuple[Poly, Poly]:
        """
        Euclidean division; the coefficient ring must be a field.

        Raises:
            ZeroDivisionError: If the divisor is zero.
            ArithmeticError: If the coefficient ring is not a field.
        """
        d = self._lift(divisor)
        if d is NotImplemented:
            return NotImplemented
        if d.is_zero():
            msg = f"Polynomial division by zero in {self._ring.tag}."
            raise ZeroDivisionError(msg)
        if not self._ring.base.is_field:
            msg = f"Euclidean division needs a field, not {self._ring.base.tag}."
            raise ArithmeticError(msg)
        rem = list(self.coeffs)
        dd = len(d.coeffs) - 1
        lead_inv = d.coeffs[-1].inverse()
        zero = self._ring.base.zero
        quot = [zero] * max(len(rem) - dd, 0)
        for shift in range(len(rem) - 1 - dd, -1, -1):
            c = rem[shift + dd]
            if c.is_zero():
                continue
            factor = c * lead_inv
            quot[shift] = factor
            for i, dc in enumerate(d.coeffs):
                rem[shift + i] = rem[shift + i] - factor * dc
        return Poly(self._ring, tuple(quot)), Poly(self._ring, tuple(rem))

    def __floordiv__(self, divisor: object) -> Poly:
        return divmod(self, divisor)[0]

    def __mod__(self, divisor: object) -> Poly:
        return divmod(self, divisor)[1]

    def monic(self) -> Poly:
        """
        Scale to leading coefficient 1 (the zero polynomial is unchanged).
        """
        if not self.coeffs:
            return self
        inv = self.coeffs[-1].inverse()
        return Poly(self._ring, tuple(c * inv for c in self.coeffs))

    def __call__(self, value: object) -> Any:  # noqa: ANN401
        """
        Evaluate at `value` by Horner's rule.

        The result lives in whichever ring absorbs both the coefficients and
        the value.
        """
        if not self.coeffs:
            return self._ring.base.zero
        acc: Any = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * value + c
        return acc

    def map_coefficients(
        self,
        fn: Callable[[Any], Any],
        ring: PolyRing | None = None,
    ) -> Poly:
        """
        Apply `fn` to every coefficient, optionally landing in another ring.
        """
        target = ring or self._ring
        return Poly(target, tuple(target.base.coerce(fn(c)) for c in self.coeffs))

    def inflate(self, k: int) -> Poly:
        """
        Substitute `var -> var^k`.
        """
        if k == 1 or len(self.coeffs) <= 1:
            return self
        zero = self._ring.base.zero
        out = [zero] * ((len(self.coeffs) - 1) * k + 1)
        for e, c in enumerate(self.coeffs):
            out[e * k] = c
        return Poly(self._ring, tuple(out))

    def rename(self, var: str) -> Poly:
        """
        The same coefficients in the ring `base[var]`.
        """
        return Poly(PolyRing(self._ring.base, var), self.coeffs)

    def __str__(self) -> str:
        var = self._ring.var
        parts = []
        many = len(list(self.terms())) > 1
        for e, c in reversed(list(self.terms())):
            ctext = str(c)
            if e == 0:
                parts.append(compact(ctext) if many else ctext)
                continue
            mono = var if e == 1 else f"{var}^{e}"
            if c == 1:
                parts.append(mono)
            else:
                parts.append(f"{compact(ctext)}*{mono}")
        return " + ".join(parts) or "0"


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """
    The monic greatest common divisor of two polynomials over a field.

    `poly_gcd(0, 0)` is zero.
    """
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def is_q_linear(f: Poly, q: int) -> bool:
    """
    Whether every monomial of `f` has an exponent that is a power of `q`.

    The zero polynomial is `q`-linear.
    """
    return all(is_power_of(e, q) for e in f.exponents())


def is_additive(f: Poly) -> bool:
    """
    Whether `f` only has monomials `c x^{p^j}`, `p` the characteristic.
    """
    return is_q_linear(f, f.ring.characteristic)
