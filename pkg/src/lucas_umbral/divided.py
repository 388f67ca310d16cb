"""
Truncated divided power series.

A divided power series over a ring `R` is a formal sum `sum_i a_i D_i` of the
divided power symbols `D_i`, multiplied by the rule

```
D_i * D_j = C(i + j, j) D_{i + j}
```

with the binomial coefficient reduced modulo the characteristic. The unit is
`D_0`.

Only finitely many coefficients can ever be known, so every `DividedElem`
carries its own truncation order `trunc`: the coefficients of `D_0, ...,
D_{trunc - 1}` are exact and nothing is claimed beyond. Binary operations
produce the smaller of the two truncations, and equality compares only the
common window. Window equality is not transitive, so elements are not
hashable.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any

from lucas_umbral.algebra.digits import lucas
from lucas_umbral.algebra.parse import ParseError, ring_from_tag
from lucas_umbral.algebra.ring import compact

if TYPE_CHECKING:
    from collections.abc import Callable, Iterable, Iterator, Mapping

    from lucas_umbral.algebra.field import FieldCtx
    from lucas_umbral.algebra.poly import Poly
    from lucas_umbral.algebra.ring import Ring

logger = logging.getLogger(__name__)

_HEADER = re.compile(r"trunc=(?P<trunc>\d+)\s+ring=(?P<ring>\S+)")


@dataclass(frozen=True)
class Comparison:
    """
    Outcome of comparing two divided elements on their common window.
    """

    equal: bool
    """Whether the elements agree on every compared index."""

    window: int
    """The number of compared coefficients, `min(trunc_f, trunc_g)`."""

    index: int | None = None
    """The first index at which the elements differ."""


class DividedElem:
    """
    A truncated element `sum_{i < trunc} a_i D_i`.
    """

    __slots__ = ("coeffs", "ring", "trunc")

    __hash__ = None  # type: ignore[assignment]

    def __init__(self, ring: Ring, trunc: int, coeffs: Mapping[int, Any]) -> None:
        """
        Initialize the element.

        Args:
            ring:
                The coefficient ring.

            trunc:
                The truncation order; coefficients of `D_i` for `i < trunc`
                are known.

            coeffs:
                Map from index to coefficient. Zero coefficients are dropped.
                Values are coerced into `ring`.

        Raises:
            ValueError: If `trunc < 1` or an index lies outside `[0, trunc)`.
        """
        if trunc < 1:
            msg = f"Truncation order must be at least 1, got {trunc}."
            raise ValueError(msg)
        stored = {}
        for i, c in coeffs.items():
            if not 0 <= i < trunc:
                msg = f"Index {i} lies outside the window [0, {trunc})."
                raise ValueError(msg)
            value = ring.coerce(c)
            if not value.is_zero():
                stored[i] = value
        self.ring = ring
        self.trunc = trunc
        self.coeffs: dict[int, Any] = stored

    @classmethod
    def unit(cls, ring: Ring, trunc: int) -> DividedElem:
        """
        The unit `D_0`.
        """
        return cls(ring, trunc, {0: ring.one})

    @classmethod
    def monomial(cls, ring: Ring, trunc: int, i: int, c: object = 1) -> DividedElem:
        """
        The element `c D_i`.
        """
        return cls(ring, trunc, {i: c})

    @classmethod
    def from_coefficients(cls, ring: Ring, seq: Iterable[object]) -> DividedElem:
        """
        The element `sum_i seq[i] D_i`, truncated at `len(seq)`.
        """
        values = list(seq)
        return cls(ring, len(values), dict(enumerate(values)))

    def coeff(self, i: int) -> Any:  # noqa: ANN401
        """
        The coefficient of `D_i`.

        Raises:
            ValueError: If `i` lies beyond the truncation.
        """
        if not 0 <= i < self.trunc:
            msg = f"Coefficient {i} is unknown at truncation {self.trunc}."
            raise ValueError(msg)
        return self.coeffs.get(i, self.ring.zero)

    def coefficients(self) -> list[Any]:
        """
        All coefficients `a_0, ..., a_{trunc - 1}`, zeros included.
        """
        return [self.coeff(i) for i in range(self.trunc)]

    def terms(self) -> Iterator[tuple[int, Any]]:
        """
        Iterate over the nonzero `(index, coefficient)` pairs in index order.
        """
        for i in sorted(self.coeffs):
            yield i, self.coeffs[i]

    def is_zero(self) -> bool:
        """
        Whether every known coefficient vanishes.
        """
        return not self.coeffs

    def lowest_index(self) -> int | None:
        """
        The smallest index with a nonzero coefficient, `None` for zero.
        """
        return min(self.coeffs) if self.coeffs else None

    def truncate(self, n: int) -> DividedElem:
        """
        Forget every coefficient from `D_n` on.

        Raises:
            ValueError: If `n` exceeds the current truncation.
        """
        if n > self.trunc:
            msg = f"Cannot extend truncation {self.trunc} to {n}."
            raise ValueError(msg)
        return DividedElem(
            self.ring, n, {i: c for i, c in self.coeffs.items() if i < n}
        )

    def map_coefficients(
        self,
        fn: Callable[[Any], Any],
        ring: Ring | None = None,
    ) -> DividedElem:
        """
        Apply `fn` to every nonzero coefficient, optionally changing ring.
        """
        return DividedElem(
            ring or self.ring,
            self.trunc,
            {i: fn(c) for i, c in self.coeffs.items()},
        )

    def _check_ring(self, other: DividedElem) -> None:
        if other.ring != self.ring:
            msg = f"Ring mismatch: {self.ring.tag} and {other.ring.tag}."
            raise TypeError(msg)

    def _as_divided(self, other: object) -> DividedElem | None:
        if isinstance(other, DividedElem):
            self._check_ring(other)
            return other
        try:
            c = self.ring.coerce(other)
        except TypeError:
            return None
        return DividedElem(self.ring, self.trunc, {0: c})

    def __add__(self, other: object) -> DividedElem:
        g = self._as_divided(other)
        if g is None:
            return NotImplemented
        n = min(self.trunc, g.trunc)
        out = {i: c for i, c in self.coeffs.items() if i < n}
        for i, c in g.coeffs.items():
            if i < n:
                out[i] = out[i] + c if i in out else c
        return DividedElem(self.ring, n, out)

    __radd__ = __add__

    def __neg__(self) -> DividedElem:
        return DividedElem(self.ring, self.trunc, {i: -c for i, c in self.coeffs.items()})

    def __sub__(self, other: object) -> DividedElem:
        g = self._as_divided(other)
        if g is None:
            return NotImplemented
        return self + (-g)

    def __rsub__(self, other: object) -> DividedElem:
        return (-self) + other

    def __mul__(self, other: object) -> DividedElem:
        if isinstance(other, DividedElem):
            return dp_mul(self, other)
        try:
            c = self.ring.coerce(other)
        except TypeError:
            return NotImplemented
        return self.map_coefficients(lambda a: a * c)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> DividedElem:
        return dp_pow(self, e)

    def compare(self, other: DividedElem) -> Comparison:
        """
        Compare coefficients on the common window.

        Raises:
            TypeError: If the rings differ.
        """
        self._check_ring(other)
        window = min(self.trunc, other.trunc)
        zero = self.ring.zero
        for i in sorted(set(self.coeffs) | set(other.coeffs)):
            if i >= window:
                break
            if self.coeffs.get(i, zero) != other.coeffs.get(i, zero):
                return Comparison(equal=False, window=window, index=i)
        return Comparison(equal=True, window=window)

    def __eq__(self, other: object) -> bool:
        g = self._as_divided(other)
        if g is None:
            return NotImplemented
        return self.compare(g).equal

    def to_text(self) -> str:
        """
        Serialise as `trunc=<N> ring=<tag>` followed by `<index>: <coefficient>`
        lines for the nonzero coefficients.
        """
        lines = [f"trunc={self.trunc} ring={self.ring.tag}"]
        lines.extend(f"{i}: {c}" for i, c in self.terms())
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, field: FieldCtx) -> DividedElem:
        """
        Parse the output of `to_text`, with coefficients over `field`.

        Raises:
            ParseError: If the header or a line is malformed, or an index is
                repeated or out of range.
        """
        lines = [line for line in text.splitlines() if line.strip()]
        if not lines or not (m := _HEADER.fullmatch(lines[0].strip())):
            msg = "Divided element files start with 'trunc=<N> ring=<tag>'."
            raise ParseError(msg)
        ring = ring_from_tag(m.group("ring"), field)
        trunc = int(m.group("trunc"))
        if trunc < 1:
            msg = "Truncation order must be at least 1."
            raise ParseError(msg)
        coeffs: dict[int, Any] = {}
        for line in lines[1:]:
            index, sep, body = line.partition(":")
            if not sep or not index.strip().isdigit():
                msg = f"Expected '<index>: <coefficient>', got {line!r}."
                raise ParseError(msg)
            i = int(index)
            if i in coeffs or i >= trunc or i < 0:
                msg = f"Index {i} is repeated or outside [0, {trunc})."
                raise ParseError(msg)
            coeffs[i] = ring.parse(body.strip())
        return cls(ring, trunc, coeffs)

    def __str__(self) -> str:
        parts = []
        for i, c in self.terms():
            if i == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(f"D_{i}")
            else:
                parts.append(f"{compact(str(c))}*D_{i}")
        return " + ".join([*parts, f"O(D_{self.trunc})"])

    def __repr__(self) -> str:
        return f"DividedElem({self.ring.tag}: {self})"


def dp_mul(f: DividedElem, g: DividedElem) -> DividedElem:
    """
    Multiply two divided elements.

    The coefficient of `D_k` in the product is
    `sum_{i + j = k} C(i + j, j) a_i b_j`, truncated at the smaller window.

    Raises:
        TypeError: If the coefficient rings differ.
    """
    f._check_ring(g)  # noqa: SLF001
    n = min(f.trunc, g.trunc)
    p = f.ring.characteristic
    out: dict[int, Any] = {}
    for i, a in f.coeffs.items():
        if i >= n:
            continue
        for j, b in g.coeffs.items():
            k = i + j
            if k >= n:
                continue
            c = lucas(k, j, p)
            if c:
                term = a * b * c
                out[k] = out[k] + term if k in out else term
    return DividedElem(f.ring, n, out)


def dp_pow(f: DividedElem, e: int) -> DividedElem:
    """
    Raise `f` to a nonnegative power by repeated squaring; `f^0 = 1`.

    Raises:
        ValueError: If `e` is negative.
    """
    if e < 0:
        msg = f"Exponent {e} must be nonnegative; use dp_inverse."
        raise ValueError(msg)
    result = DividedElem.unit(f.ring, f.trunc)
    square = f
    while e:
        if e & 1:
            result = dp_mul(result, square)
        e >>= 1
        if e:
            square = dp_mul(square, square)
    return result


def dp_inverse(f: DividedElem) -> DividedElem:
    """
    Invert an element with constant coefficient 1.

    Writing `f = 1 + h`, the inverse is the geometric series
    `sum_k (-h)^k`, which is finite because `h` has no `D_0` term.

    Raises:
        ValueError: If the coefficient of `D_0` is not 1.
    """
    if f.coeff(0) != 1:
        msg = f"Only elements with constant coefficient 1 are invertible, got {f.coeff(0)}."
        raise ValueError(msg)
    g = DividedElem.unit(f.ring, f.trunc) - f
    result = DividedElem.unit(f.ring, f.trunc)
    term = result
    steps = 0
    while not (term := dp_mul(term, g)).is_zero():
        result += term
        steps += 1
    logger.debug("Geometric series for the inverse stopped after %d terms.", steps)
    return result


def dp_apply(i: int, f: Poly) -> Poly:
    """
    Apply the divided differential operator `D_i` to a polynomial.

    `D_i x^n = C(n, i) x^{n - i}`, extended linearly.
    """
    p = f.ring.characteristic
    return f.ring.from_terms(
        (n - i, c * lucas(n, i, p)) for n, c in f.terms() if n >= i
    )


def dp_product(elements: Iterable[DividedElem], ring: Ring, trunc: int) -> DividedElem:
    """
    Multiply several divided elements, starting from the unit at `trunc`.
    """
    result = DividedElem.unit(ring, trunc)
    for f in elements:
        result = dp_mul(result, f)
    return result
