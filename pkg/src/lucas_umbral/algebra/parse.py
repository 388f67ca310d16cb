"""
Text grammar for ring elements and ring tags.

Elements are written with integers, variable names, `+ - * / ^` and
parentheses:

```
expr   := ['-'] term (('+' | '-') term)*
term   := factor (('*' | '/') factor)*
factor := atom ['^' INT]
atom   := INT | NAME | '(' expr ')'
```

Names are resolved by the target ring, which knows the variables of its whole
tower (`u` in an extension field, `th` in `A`, then `x`, `y`, `t`). Integers
are read modulo the characteristic.
"""

from __future__ import annotations

import re
from typing import TYPE_CHECKING

from lucas_umbral.algebra.bipoly import BiPolyRing
from lucas_umbral.algebra.frac import FracField
from lucas_umbral.algebra.poly import PolyRing

if TYPE_CHECKING:
    from lucas_umbral.algebra.field import FieldCtx
    from lucas_umbral.algebra.ring import Element, Ring

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*/^()]))")


class ParseError(ValueError):
    """
    Malformed element text or file header.
    """


class _Parser:
    def __init__(self, text: str, ring: Ring) -> None:
        self.text = text
        self.ring = ring
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if not m:
                msg = f"Unexpected character {text[pos:].lstrip()[0]!r} at {pos} in {text!r}."
                raise ParseError(msg)
            kind = m.lastgroup or ""
            self.tokens.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()
        self.i = 0

    def peek(self) -> tuple[str, str, int] | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self, op: str | None = None) -> tuple[str, str, int]:
        tok = self.peek()
        if tok is None:
            msg = f"Unexpected end of input in {self.text!r}."
            raise ParseError(msg)
        if op is not None and tok[1] != op:
            msg = f"Expected {op!r} at {tok[2]} in {self.text!r}, found {tok[1]!r}."
            raise ParseError(msg)
        self.i += 1
        return tok

    def at(self, *ops: str) -> bool:
        tok = self.peek()
        return tok is not None and tok[0] == "op" and tok[1] in ops

    def expr(self) -> Element:
        negate = False
        if self.at("-"):
            self.take()
            negate = True
        value = self.term()
        if negate:
            value = -value
        while self.at("+", "-"):
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> Element:
        value = self.factor()
        while self.at("*", "/"):
            _, op, pos = self.take()
            rhs = self.factor()
            if op == "*":
                value *= rhs
                continue
            try:
                value /= rhs
            except ArithmeticError as err:
                msg = f"Cannot divide at {pos} in {self.text!r}: {err}"
                raise ParseError(msg) from err
        return value

    def factor(self) -> Element:
        value = self.atom()
        if self.at("^"):
            self.take()
            kind, exp, pos = self.take()
            if kind != "int":
                msg = f"Expected an integer exponent at {pos} in {self.text!r}."
                raise ParseError(msg)
            value **= int(exp)
        return value

    def atom(self) -> Element:
        kind, tok, pos = self.take()
        if kind == "int":
            return self.ring.coerce(int(tok))
        if kind == "name":
            try:
                return self.ring.gen(tok)
            except KeyError as err:
                msg = f"Unknown variable {tok!r} at {pos} in {self.text!r}."
                raise ParseError(msg) from err
        if tok == "(":
            value = self.expr()
            self.take(")")
            return value
        msg = f"Unexpected {tok!r} at {pos} in {self.text!r}."
        raise ParseError(msg)


def parse_element(text: str, ring: Ring) -> Element:
    """
    Parse `text` as an element of `ring`.

    Raises:
        ParseError: If the text does not follow the grammar, uses an unknown
            variable or divides by a non-unit.
    """
    parser = _Parser(text, ring)
    if not parser.tokens:
        msg = "Empty expression."
        raise ParseError(msg)
    value = parser.expr()
    tok = parser.peek()
    if tok is not None:
        msg = f"Trailing input {tok[1]!r} at {tok[2]} in {text!r}."
        raise ParseError(msg)
    return value


def ring_from_tag(tag: str, field: FieldCtx) -> Ring:
    """
    Rebuild the ring named by a file-header tag over `field`.

    Recognised tags are `Fq`, `A` (for `Fq[th]`), `Frac(R)`, `R[v]` and
    `R[x,y]`, nested arbitrarily, for example `Frac(A)[x]`.

    Raises:
        ParseError: If the tag is not recognised.
    """
    tag = tag.strip()
    if tag == "Fq":
        return field
    if tag == "A":
        return PolyRing(field, "th")
    if tag.endswith("[x,y]"):
        return BiPolyRing(ring_from_tag(tag[:-5], field))
    if tag.startswith("Frac(") and tag.endswith(")"):
        base = ring_from_tag(tag[5:-1], field)
        if isinstance(base, PolyRing):
            try:
                return FracField(base)
            except ValueError as err:
                raise ParseError(str(err)) from err
    if m := re.fullmatch(r"(.+)\[([A-Za-z_]\w*)\]", tag):
        return PolyRing(ring_from_tag(m.group(1), field), m.group(2))
    msg = f"Unknown ring tag {tag!r}."
    raise ParseError(msg)
