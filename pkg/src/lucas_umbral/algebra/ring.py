"""
Abstract rings and elements.

Every concrete ring in this package (finite fields, polynomial rings,
fraction fields and bivariate polynomial rings) derives from `Ring`, and every
element from `Element`. The base classes provide the shared operator plumbing:
integers and elements of sub-rings are coerced implicitly, so that `2 * f`,
`f + 1` or `a * g` (with `a` in `A` and `g` in `A[x]`) all behave as expected.

Coercion only ever goes *up* the tower of rings. If the left operand cannot
absorb the right operand, the left operand is lifted into the right operand's
ring instead; the order of the operands is kept, so `a * s` with `s` in
`A[tau]` is the skew product. Operands with no common ring give
`NotImplemented`.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from lucas_umbral.algebra.field import FieldCtx

NEG_INF = float("-inf")
"""
Degree of the zero polynomial.
"""


class Ring(ABC):
    """
    A commutative ring with unit.
    """

    is_field: bool = False
    """
    Whether every nonzero element of the ring is invertible.
    """

    @property
    @abstractmethod
    def field(self) -> FieldCtx:
        """
        The finite field at the bottom of the tower.
        """

    @property
    @abstractmethod
    def tag(self) -> str:
        """
        The ring tag used in file headers, for example `A[x]`.
        """

    @abstractmethod
    def coerce(self, value: object) -> Element:
        """
        Convert a value into an element of this ring.

        Args:
            value:
                An integer, an element of this ring or an element of a ring
                lower in the tower.

        Returns:
            The corresponding element of this ring.

        Raises:
            TypeError: If the value cannot be coerced.
        """

    @abstractmethod
    def gen(self, name: str) -> Element:
        """
        Return the generator with the given variable name.

        Raises:
            KeyError: If no ring in the tower has a variable of that name.
        """

    @property
    def characteristic(self) -> int:
        """
        The characteristic `p` of the ring.
        """
        return self.field.p

    @property
    def zero(self) -> Element:
        """
        The additive identity.
        """
        return self.coerce(0)

    @property
    def one(self) -> Element:
        """
        The multiplicative identity.
        """
        return self.coerce(1)

    def parse(self, text: str) -> Element:
        """
        Parse an element of this ring from its text form.
        """
        from lucas_umbral.algebra.parse import parse_element  # noqa: PLC0415

        return parse_element(text, self)

    def __str__(self) -> str:
        """
        Return the ring tag.
        """
        return self.tag


class Element(ABC):
    """
    An element of a `Ring`.

    Subclasses implement the private `_add`, `_mul`, `__neg__` and
    `_equals` hooks on operands that are already in the same ring; the public
    operators coerce first.
    """

    __slots__ = ()

    @property
    @abstractmethod
    def ring(self) -> Ring:
        """
        The ring this element belongs to.
        """

    @abstractmethod
    def is_zero(self) -> bool:
        """
        Whether this is the zero element.
        """

    @abstractmethod
    def _add(self, other: Any) -> Any:  # noqa: ANN401
        ...

    @abstractmethod
    def _mul(self, other: Any) -> Any:  # noqa: ANN401
        ...

    @abstractmethod
    def _equals(self, other: Any) -> bool:  # noqa: ANN401
        ...

    @abstractmethod
    def __neg__(self) -> Any:  # noqa: ANN401
        ...

    @abstractmethod
    def __hash__(self) -> int: ...

    def _lift(self, other: object) -> Any:  # noqa: ANN401
        if isinstance(other, Element) and other.ring == self.ring:
            return other
        try:
            return self.ring.coerce(other)
        except TypeError:
            return NotImplemented

    def _pair(self, other: object) -> tuple[Any, Any] | None:
        """
        Bring both operands into a common ring, keeping their order.

        The right operand is lifted into this ring first; failing that, this
        element is lifted into the right operand's ring.
        """
        lifted = self._lift(other)
        if lifted is not NotImplemented:
            return self, lifted
        if isinstance(other, Element):
            try:
                return other.ring.coerce(self), other
            except TypeError:
                return None
        return None

    def __add__(self, other: object) -> Any:  # noqa: ANN401
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        return pair[0]._add(pair[1])  # noqa: SLF001

    def __radd__(self, other: object) -> Any:  # noqa: ANN401
        return self.__add__(other)

    def __sub__(self, other: object) -> Any:  # noqa: ANN401
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        return pair[0]._add(-pair[1])  # noqa: SLF001

    def __rsub__(self, other: object) -> Any:  # noqa: ANN401
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other._add(-self)  # noqa: SLF001

    def __mul__(self, other: object) -> Any:  # noqa: ANN401
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        return pair[0]._mul(pair[1])  # noqa: SLF001

    def __rmul__(self, other: object) -> Any:  # noqa: ANN401
        return self.__mul__(other)

    def __eq__(self, other: object) -> bool:
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        return pair[0]._equals(pair[1])  # noqa: SLF001

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __pow__(self, n: int) -> Any:  # noqa: ANN401
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = self.ring.one
        square = self
        while n:
            if n & 1:
                result *= square
            n >>= 1
            if n:
                square *= square
        return result

    def inverse(self) -> Any:  # noqa: ANN401
        """
        Return the multiplicative inverse.

        Raises:
            ArithmeticError: If the element is not a unit of its ring.
        """
        msg = f"{self} is not invertible in {self.ring.tag}."
        raise ArithmeticError(msg)

    def __truediv__(self, other: object) -> Any:  # noqa: ANN401
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        return pair[0]._mul(pair[1].inverse())  # noqa: SLF001

    def __rtruediv__(self, other: object) -> Any:  # noqa: ANN401
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other._mul(self.inverse())  # noqa: SLF001

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.ring.tag}: {self})"


def compact(text: str) -> str:
    """
    Render an element's text for use inside a larger expression.

    Spaces are dropped and compound expressions are parenthesized, so that the
    result can be juxtaposed with `*` without changing its meaning.
    """
    text = text.replace(" ", "")
    if any(op in text for op in "+-*/"):
        return f"({text})"
    return text
