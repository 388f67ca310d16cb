"""
Polynomial sequences of binomial type.

A sequence `P = {p_n(x)}` is of binomial type when

```
p_n(x + y) = sum_{i=0}^{n} C(n, i) p_i(x) p_{n-i}(y)
```

for every `n`. Only finite prefixes `p_0, ..., p_{N-1}` are handled, so every
verdict is relative to the truncation `N`.

The same property can be checked in two ways: directly, one `n` at a time, or
through the generating function `f_P = sum_i p_i(x) D_i`, which is of binomial
type exactly when `f_P(x + y) = f_P(x) f_P(y)`. Both checks normalise in the
same way (the all-zero sequence is reported as trivial, and `p_0 = 1` is
required otherwise), so they agree on the verdict, the failing index and the
witness monomial.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from typing import TYPE_CHECKING, Literal

from lucas_umbral.algebra.bipoly import BiPolyRing, substitute_sum
from lucas_umbral.algebra.digits import digit_sum, is_power_of, lucas
from lucas_umbral.algebra.parse import ParseError, ring_from_tag
from lucas_umbral.algebra.poly import Poly, PolyRing, is_additive
from lucas_umbral.divided import DividedElem, dp_mul, dp_pow

if TYPE_CHECKING:
    from lucas_umbral.algebra.bipoly import BiPoly, Monomial
    from lucas_umbral.algebra.field import FieldCtx

logger = logging.getLogger(__name__)

_HEADER = re.compile(r"N=(?P<n>\d+)\s+ring=(?P<ring>\S+)")

BUILTINS = ("monomials", "pochhammer", "digitsum", "trivial")
"""
Names of the built-in sequences accepted by `builtin`.

`digit_sum_q` and `trivial_unit` are accepted as aliases of `digitsum` and
`trivial`.
"""

_ALIASES = {"digit_sum_q": "digitsum", "trivial_unit": "trivial"}


@dataclass(frozen=True)
class PolySeq:
    """
    A finite prefix `p_0, ..., p_{N-1}` of a polynomial sequence.
    """

    ring: PolyRing
    entries: tuple[Poly, ...]

    def __post_init__(self) -> None:
        """
        Coerce every entry into `ring`.
        """
        object.__setattr__(
            self, "entries", tuple(self.ring.coerce(e) for e in self.entries)
        )

    @property
    def n(self) -> int:
        """
        The truncation order `N`.
        """
        return len(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> Poly:
        return self.entries[i]

    def is_zero(self) -> bool:
        """
        Whether every entry vanishes.
        """
        return all(e.is_zero() for e in self.entries)

    def with_entry(self, i: int, value: object) -> PolySeq:
        """
        A copy with entry `i` replaced.
        """
        entries = list(self.entries)
        entries[i] = self.ring.coerce(value)
        return PolySeq(self.ring, tuple(entries))

    def to_text(self) -> str:
        """
        Serialise as `N=<n> ring=<tag>` followed by one entry per line.
        """
        lines = [f"N={self.n} ring={self.ring.tag}"]
        lines.extend(str(e) for e in self.entries)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, field: FieldCtx) -> PolySeq:
        """
        Parse the output of `to_text`, with coefficients over `field`.

        Raises:
            ParseError: If the header is malformed, the ring is not univariate,
                or the number of entries does not match `N`.
        """
        lines = [line for line in text.splitlines() if line.strip()]
        if not lines or not (m := _HEADER.fullmatch(lines[0].strip())):
            msg = "Sequence files start with 'N=<n> ring=<tag>'."
            raise ParseError(msg)
        ring = ring_from_tag(m.group("ring"), field)
        if not isinstance(ring, PolyRing):
            msg = f"Sequence entries must be univariate, not {ring.tag}."
            raise ParseError(msg)
        n = int(m.group("n"))
        if len(lines) - 1 != n:
            msg = f"Header announces {n} entries but {len(lines) - 1} follow."
            raise ParseError(msg)
        return cls(ring, tuple(ring.parse(line.strip()) for line in lines[1:]))


@dataclass(frozen=True)
class CheckReport:
    """
    The verdict of a binomial-type check.
    """

    status: Literal["pass", "fail", "trivial"]
    trunc: int
    """The truncation the verdict is relative to."""

    index: int | None = None
    """The first failing index."""

    witness: Monomial | None = None
    """The largest monomial `(deg_x, deg_y)` of the first discrepancy."""

    reason: str = ""

    @property
    def passed(self) -> bool:
        """
        Whether no failure was found (a trivial verdict counts as passing).
        """
        return self.status != "fail"

    def __str__(self) -> str:
        if self.status == "pass":
            return f"pass up to N={self.trunc}"
        if self.status == "trivial":
            return f"trivial (all-zero) up to N={self.trunc}"
        mono = _format_monomial(self.witness)
        return f"fail at n={self.index}, witness {mono}: {self.reason}"


def _format_monomial(m: Monomial | None) -> str:
    if m is None:
        return "-"
    i, j = m
    parts = [v if e == 1 else f"{v}^{e}" for v, e in (("x", i), ("y", j)) if e]
    return "*".join(parts) or "1"


def _unit_failure(p0: Poly, trunc: int) -> CheckReport:
    ring = BiPolyRing(p0.ring.base)
    diff = ring.from_x(p0 - 1)
    return CheckReport(
        "fail",
        trunc,
        index=0,
        witness=diff.leading_monomial(),
        reason=f"p_0 = {p0} but a nontrivial sequence needs p_0 = 1",
    )


def _fail(n: int, diff: BiPoly, trunc: int) -> CheckReport:
    report = CheckReport(
        "fail",
        trunc,
        index=n,
        witness=diff.leading_monomial(),
        reason=f"both sides differ by {diff}",
    )
    logger.debug("Binomial identity fails at n=%d: %s.", n, diff)
    return report


def check_binomial(seq: PolySeq) -> CheckReport:
    """
    Check the binomial identity for every `n < N`.

    Both sides are expanded as polynomials in `x` and `y`; the first index at
    which they differ is reported together with the leading monomial of the
    difference.
    """
    if seq.is_zero():
        return CheckReport("trivial", seq.n)
    if seq[0] != 1:
        return _unit_failure(seq[0], seq.n)
    bi = BiPolyRing(seq.ring.base)
    xs = [bi.from_x(e) for e in seq.entries]
    ys = [bi.from_y(e) for e in seq.entries]
    p = seq.ring.characteristic
    for n in range(1, seq.n):
        rhs = bi.zero
        for i in range(n + 1):
            c = lucas(n, i, p)
            if c and not seq[i].is_zero() and not seq[n - i].is_zero():
                rhs += xs[i] * ys[n - i] * c
        diff = substitute_sum(seq[n]) - rhs
        if not diff.is_zero():
            return _fail(n, diff, seq.n)
    logger.debug("Binomial identity holds up to N=%d.", seq.n)
    return CheckReport("pass", seq.n)


def gen_function(seq: PolySeq) -> DividedElem:
    """
    The generating function `sum_i p_i(x) D_i`, truncated at `N`.
    """
    return DividedElem.from_coefficients(seq.ring, seq.entries)


def sequence_of(f: DividedElem) -> PolySeq:
    """
    Read a sequence back from a generating function.

    Raises:
        TypeError: If the coefficient ring is not univariate.
    """
    if not isinstance(f.ring, PolyRing):
        msg = f"Expected coefficients in a polynomial ring, not {f.ring.tag}."
        raise TypeError(msg)
    return PolySeq(f.ring, tuple(f.coefficients()))


def check_multiplicative(f: DividedElem) -> CheckReport:
    """
    Check `f(x + y) = f(x) f(y)` up to the truncation of `f`.

    The left side substitutes `x + y` coefficientwise; the right side is the
    product of divided elements over `base[x, y]`.

    Raises:
        TypeError: If the coefficients of `f` are not univariate polynomials.
    """
    if not isinstance(f.ring, PolyRing):
        msg = f"Expected coefficients in a polynomial ring, not {f.ring.tag}."
        raise TypeError(msg)
    if f.is_zero():
        return CheckReport("trivial", f.trunc)
    if f.coeff(0) != 1:
        return _unit_failure(f.coeff(0), f.trunc)
    bi = BiPolyRing(f.ring.base)
    lhs = f.map_coefficients(substitute_sum, bi)
    rhs = dp_mul(f.map_coefficients(bi.from_x, bi), f.map_coefficients(bi.from_y, bi))
    cmp = lhs.compare(rhs)
    if not cmp.equal:
        n = cmp.index
        assert n is not None  # noqa: S101
        return _fail(n, lhs.coeff(n) - rhs.coeff(n), f.trunc)
    logger.debug("Generating function is multiplicative up to trunc=%d.", f.trunc)
    return CheckReport("pass", f.trunc)


def builtin(
    name: str,
    field: FieldCtx,
    n: int,
    q: int | None = None,
) -> PolySeq:
    """
    Build a named sequence over `field` up to truncation `n`.

    Args:
        name:
            One of `monomials` (`x^i`), `pochhammer` (the falling factorials
            `x (x - 1) ... (x - i + 1)`), `digitsum` (`x^{l_q(i)}` with
            `l_q` the sum of q-adic digits) or `trivial` (`1, 0, 0, ...`).

        field:
            The coefficient field.

        n:
            The truncation order.

        q:
            The base for `digitsum`; defaults to the order of `field`.

    Raises:
        ValueError: If the name is unknown or `n < 1`.
    """
    if n < 1:
        msg = f"Truncation order must be at least 1, got {n}."
        raise ValueError(msg)
    key = _ALIASES.get(name, name)
    ring = PolyRing(field, "x")
    x = ring.x
    entries: list[Poly]
    if key == "monomials":
        entries = [x**i for i in range(n)]
    elif key == "pochhammer":
        entries = [ring.one]
        for i in range(1, n):
            entries.append(entries[-1] * (x - (i - 1)))
    elif key == "digitsum":
        base = q if q is not None else field.q
        if base < 2:  # noqa: PLR2004
            msg = f"Digit base {base} must be at least 2."
            raise ValueError(msg)
        entries = [x ** digit_sum(i, base) for i in range(n)]
    elif key == "trivial":
        entries = [ring.one] + [ring.zero] * (n - 1)
    else:
        msg = f"Unknown sequence {name!r}; choose from {', '.join(BUILTINS)}."
        raise ValueError(msg)
    return PolySeq(ring, tuple(entries))


def evaluate_gen_function(f: DividedElem, c: object) -> DividedElem:
    """
    Evaluate every coefficient of `f` at `x = c`.
    """
    ring = f.ring
    if not isinstance(ring, PolyRing):
        msg = f"Expected coefficients in a polynomial ring, not {ring.tag}."
        raise TypeError(msg)
    value = ring.base.coerce(c)
    return f.map_coefficients(lambda a: a(value), ring.base)


@dataclass(frozen=True)
class StructuralReport:
    """
    Consequences of the binomial identity, checked on a sequence.
    """

    trunc: int
    non_additive: tuple[int, ...] = ()
    """Indices `p^j < N` whose entry is not additive."""

    power_is_one: bool = True
    """Whether `f_P^p = 1`."""

    nonzero_at_origin: tuple[int, ...] = ()
    """Indices `i >= 1` with `p_i(0) != 0`, i.e. where `f_P(0) != 1`."""

    notes: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        """
        Whether every structural property holds.
        """
        return not self.non_additive and self.power_is_one and not self.nonzero_at_origin


def structural_checks(seq: PolySeq) -> StructuralReport:
    """
    Verify properties every binomial-type sequence has.

    These are: the entries `p_{p^j}` are additive; `f_P^p = 1`; and
    `f_P(0) = 1`, so that `f_P(p x) = f_P(0) = 1 = f_P(x)^p`.
    """
    p = seq.ring.characteristic
    non_additive = tuple(
        i for i in range(1, seq.n) if is_power_of(i, p) and not is_additive(seq[i])
    )
    f = gen_function(seq)
    power_is_one = dp_pow(f, p) == DividedElem.unit(seq.ring, seq.n)
    at_origin = evaluate_gen_function(f, 0)
    nonzero = tuple(i for i, _ in at_origin.terms() if i >= 1)
    notes = []
    if non_additive:
        notes.append(f"entries {list(non_additive)} are not additive")
    if not power_is_one:
        notes.append(f"f_P^{p} is not 1")
    if nonzero:
        notes.append(f"entries {list(nonzero)} do not vanish at 0")
    return StructuralReport(seq.n, non_additive, power_is_one, nonzero, tuple(notes))

