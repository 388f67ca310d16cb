"""
The Carlitz construction and the Carlitz module.

Given a sequence `E = (e_0, e_1, ...)` of `F_q`-linear polynomials, the Carlitz
construction builds the binomial-type sequence

```
p_{E, i}(x) = prod_t e_t(x)^{i_t},    i = sum_t i_t q^t,
```

whose generating functions multiply like `f_{P_W} f_{P_V} = f_{P_{W + V}}`.

Over `A = F_q[th]` the choice `e_t / D_t`, with

```
D_t    = product of the monic polynomials of degree t,
e_t(x) = prod_{deg a < t} (x - a),
```

gives the Carlitz polynomials `G_i`, which map `A` into `A`. Their values at a
point `alpha` form the Dirac element `delta_alpha = sum_i G_i(alpha) D_i`.

The module also houses the Carlitz module itself: the skew polynomial ring
`A[tau]` with `tau a = a^q tau`, the action `C_th = th + tau`, and the map
`tau^j -> b_j(t) = prod_{e < j} (t - th^{q^e})` into `A[t]`.
"""

from __future__ import annotations

import itertools
import logging
import re
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any

from lucas_umbral.algebra.digits import digits
from lucas_umbral.algebra.field import FieldCtx
from lucas_umbral.algebra.frac import FracField
from lucas_umbral.algebra.parse import ParseError, ring_from_tag
from lucas_umbral.algebra.poly import Poly, PolyRing, is_q_linear
from lucas_umbral.algebra.ring import Element, Ring, compact
from lucas_umbral.divided import DividedElem, dp_mul
from lucas_umbral.sequence import PolySeq, gen_function

if TYPE_CHECKING:
    import random
    from collections.abc import Iterable, Iterator, Sequence


logger = logging.getLogger(__name__)

_HEADER = re.compile(r"q=(?P<q>\d+)\s+ring=(?P<ring>\S+)")


################################################################################
## Linear sequences and the construction
################################################################################


@dataclass(frozen=True)
class LinearSeq:
    """
    A finitely supported sequence of `F_q`-linear polynomials.

    Entries beyond `len(entries)` are zero.
    """

    ring: PolyRing
    q: int
    entries: tuple[Poly, ...]

    def __post_init__(self) -> None:
        """
        Coerce the entries and check that each one is `q`-linear.

        Raises:
            ValueError: If an entry has a monomial `x^k` with `k` not a power
                of `q`.
        """
        entries = tuple(self.ring.coerce(e) for e in self.entries)
        for t, e in enumerate(entries):
            if not is_q_linear(e, self.q):
                msg = f"Entry {t} = {e} is not {self.q}-linear."
                raise ValueError(msg)
        object.__setattr__(self, "entries", entries)

    def __len__(self) -> int:
        return len(self.entries)

    def entry(self, t: int) -> Poly:
        """
        The entry `e_t`, zero past the stored entries.
        """
        return self.entries[t] if t < len(self.entries) else self.ring.zero

    def _check(self, other: LinearSeq) -> None:
        if other.q != self.q or other.ring != self.ring:
            msg = (
                f"Cannot combine a {self.q}-linear sequence over {self.ring.tag} "
                f"with a {other.q}-linear sequence over {other.ring.tag}."
            )
            raise ValueError(msg)

    def __add__(self, other: LinearSeq) -> LinearSeq:
        self._check(other)
        n = max(len(self), len(other))
        return LinearSeq(
            self.ring, self.q, tuple(self.entry(t) + other.entry(t) for t in range(n))
        )

    def __neg__(self) -> LinearSeq:
        return LinearSeq(self.ring, self.q, tuple(-e for e in self.entries))

    def __sub__(self, other: LinearSeq) -> LinearSeq:
        return self + (-other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearSeq):
            return NotImplemented
        n = max(len(self), len(other))
        return (
            self.q == other.q
            and self.ring == other.ring
            and all(self.entry(t) == other.entry(t) for t in range(n))
        )

    def __hash__(self) -> int:
        entries = list(self.entries)
        while entries and entries[-1].is_zero():
            entries.pop()
        return hash((self.ring, self.q, tuple(entries)))

    @classmethod
    def random(
        cls,
        ring: PolyRing,
        q: int,
        length: int,
        rng: random.Random,
        max_power: int = 2,
    ) -> LinearSeq:
        """
        Draw `length` random `q`-linear entries with monomials up to `x^{q^max_power}`.

        Coefficients are drawn with `ring.base.random` when the coefficient
        ring is a finite field, and otherwise from the prime field.
        """
        base = ring.base
        if isinstance(base, FieldCtx):
            draw = base.random
        else:
            draw = lambda r: base.coerce(r.randrange(ring.characteristic))  # noqa: E731
        entries = tuple(
            ring.from_terms((q**k, draw(rng)) for k in range(max_power + 1))
            for _ in range(length)
        )
        return cls(ring, q, entries)

    def to_text(self) -> str:
        """
        Serialise as `q=<q> ring=<tag>` followed by one entry per line.
        """
        lines = [f"q={self.q} ring={self.ring.tag}"]
        lines.extend(str(e) for e in self.entries)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, field: FieldCtx) -> LinearSeq:
        """
        Parse the output of `to_text`.

        Raises:
            ParseError: If the header is malformed or the ring is not univariate.
            ValueError: If an entry is not `q`-linear.
        """
        lines = [line for line in text.splitlines() if line.strip()]
        if not lines or not (m := _HEADER.fullmatch(lines[0].strip())):
            msg = "Linear sequence files start with 'q=<q> ring=<tag>'."
            raise ParseError(msg)
        ring = ring_from_tag(m.group("ring"), field)
        if not isinstance(ring, PolyRing):
            msg = f"Linear sequence entries must be univariate, not {ring.tag}."
            raise ParseError(msg)
        return cls(ring, int(m.group("q")), tuple(ring.parse(s) for s in lines[1:]))


def _digit_product(
    factor: Sequence[Element] | LinearSeq,
    i: int,
    q: int,
    one: Element,
) -> Any:  # noqa: ANN401
    result = one
    for t, d in enumerate(digits(i, q)):
        if d:
            e = factor.entry(t) if isinstance(factor, LinearSeq) else factor[t]
            result *= e**d
    return result


def carlitz_entry(seq: LinearSeq, i: int) -> Poly:
    """
    The entry `p_{E, i} = prod_t e_t^{i_t}` over the q-adic digits of `i`.
    """
    return _digit_product(seq, i, seq.q, seq.ring.one)


def carlitz_sequence(seq: LinearSeq, n: int) -> PolySeq:
    """
    The first `n` entries of the Carlitz construction applied to `seq`.

    Raises:
        ValueError: If `n < 1`.
    """
    if n < 1:
        msg = f"Truncation order must be at least 1, got {n}."
        raise ValueError(msg)
    return PolySeq(seq.ring, tuple(carlitz_entry(seq, i) for i in range(n)))


@dataclass(frozen=True)
class SumLawReport:
    """
    Comparison of `f_{P_W} f_{P_V}` with `f_{P_{W + V}}`.
    """

    equal: bool
    window: int
    index: int | None
    product: DividedElem
    combined: DividedElem


def carlitz_sum_law(w: LinearSeq, v: LinearSeq, n: int) -> SumLawReport:
    """
    Verify that the construction turns entrywise sums into products.

    Raises:
        ValueError: If the two sequences use different `q` or rings.
    """
    combined = gen_function(carlitz_sequence(w + v, n))
    product = dp_mul(
        gen_function(carlitz_sequence(w, n)), gen_function(carlitz_sequence(v, n))
    )
    cmp = product.compare(combined)
    return SumLawReport(cmp.equal, cmp.window, cmp.index, product, combined)


@dataclass(frozen=True)
class CarlitzMembership:
    """
    Whether a generating function arises from the Carlitz construction.

    The answer is relative to the window `trunc`: a "yes" means every known
    coefficient matches the construction applied to `entries`.
    """

    member: bool
    trunc: int
    q: int
    entries: LinearSeq | None = None
    """The reconstructed sequence, for members."""

    index: int | None = None
    """The first index that rules membership out."""

    reason: str = ""

    def __str__(self) -> str:
        if self.member:
            return f"in the Carlitz {self.q}-image up to trunc={self.trunc}"
        return (
            f"not in the Carlitz {self.q}-image (index {self.index}: {self.reason})"
        )


def is_in_carlitz_image(f: DividedElem, q: int) -> CarlitzMembership:
    """
    Decide membership in the image of the Carlitz construction, up to truncation.

    The candidates `e_t` are read off the coefficients of `D_{q^t}`; `f` is in
    the image exactly when each is `q`-linear and every other coefficient is
    the corresponding digit product.

    Raises:
        ValueError: If the constant coefficient of `f` is not 1.
        TypeError: If the coefficients are not univariate polynomials.
    """
    if not isinstance(f.ring, PolyRing):
        msg = f"Expected coefficients in a polynomial ring, not {f.ring.tag}."
        raise TypeError(msg)
    if f.coeff(0) != 1:
        msg = f"Constant coefficient must be 1, got {f.coeff(0)}."
        raise ValueError(msg)
    candidates = []
    t = 0
    while q**t < f.trunc:
        e = f.coeff(q**t)
        if not is_q_linear(e, q):
            return CarlitzMembership(
                member=False,
                trunc=f.trunc,
                q=q,
                index=q**t,
                reason=f"coefficient {e} of D_{q**t} is not {q}-linear",
            )
        candidates.append(e)
        t += 1
    entries = LinearSeq(f.ring, q, tuple(candidates))
    for i in range(f.trunc):
        expected = carlitz_entry(entries, i)
        if f.coeff(i) != expected:
            return CarlitzMembership(
                member=False,
                trunc=f.trunc,
                q=q,
                index=i,
                reason=f"coefficient {f.coeff(i)} differs from the digit product {expected}",
            )
    return CarlitzMembership(member=True, trunc=f.trunc, q=q, entries=entries)


################################################################################
## The Carlitz basis over A = F_q[th]
################################################################################


class CarlitzCtx:
    """
    The products `D_t` and `e_t(x)` over `A = F_q[th]`, for `t <= max_t`.

    Both are computed eagerly from their defining products; nothing is
    computed after construction.
    """

    def __init__(self, field: FieldCtx, max_t: int = 2) -> None:
        """
        Build `D_t` and `e_t` for `0 <= t <= max_t`.

        Args:
            field:
                The field `F_q` of constants.

            max_t:
                The largest `t` needed.
        """
        if max_t < 0:
            msg = f"max_t must be nonnegative, got {max_t}."
            raise ValueError(msg)
        self.field = field
        self.q = field.q
        self.max_t = max_t
        self.a_ring = PolyRing(field, "th")
        self.ax_ring = PolyRing(self.a_ring, "x")
        self.frac_ring = FracField(self.a_ring)
        self.kx_ring = PolyRing(self.frac_ring, "x")
        self.t_ring = PolyRing(self.a_ring, "t")

        x = self.ax_ring.x
        d_list = []
        e_list = []
        for t in range(max_t + 1):
            d = self.a_ring.one
            for m in self.monic(t):
                d *= m
            e = self.ax_ring.one
            for a in self.below(t):
                e *= x - a
            d_list.append(d)
            e_list.append(e)
            logger.debug("Built D_%d = %s and e_%d of degree %s.", t, d, t, e.degree)
        self._d = tuple(d_list)
        self._e = tuple(e_list)
        self._g = tuple(
            e.map_coefficients(lambda c, d=d: self.frac_ring.fraction(c, d), self.kx_ring)
            for d, e in zip(self._d, self._e)
        )

    @classmethod
    def for_window(cls, field: FieldCtx, n: int) -> CarlitzCtx:
        """
        A context covering every `t` with `q^t < n`.
        """
        max_t = 0
        while field.q ** (max_t + 1) < n:
            max_t += 1
        return cls(field, max_t)

    @property
    def theta(self) -> Poly:
        """
        The generator `th` of `A`.
        """
        return self.a_ring.x

    def _check_t(self, t: int) -> None:
        if not 0 <= t <= self.max_t:
            msg = f"t = {t} is outside the precomputed range 0..{self.max_t}."
            raise ValueError(msg)

    def monic(self, t: int) -> Iterator[Poly]:
        """
        The `q^t` monic polynomials of degree `t` in `A`.
        """
        for low in itertools.product(list(self.field.elements()), repeat=t):
            yield self.a_ring.from_coefficients([*low, 1])

    def below(self, t: int) -> Iterator[Poly]:
        """
        The `q^t` polynomials of degree less than `t` in `A`, zero included.
        """
        for coeffs in itertools.product(list(self.field.elements()), repeat=t):
            yield self.a_ring.from_coefficients(coeffs)

    def d(self, t: int) -> Poly:
        """
        `D_t`, the product of the monic polynomials of degree `t`.
        """
        self._check_t(t)
        return self._d[t]

    def e(self, t: int) -> Poly:
        """
        `e_t(x)`, the product of `x - a` over `deg a < t`.
        """
        self._check_t(t)
        return self._e[t]

    def g(self, t: int) -> Poly:
        """
        `e_t(x) / D_t` with coefficients in `Frac(A)`.
        """
        self._check_t(t)
        return self._g[t]

    def e_recursive(self, t: int) -> Poly:
        """
        `e_t` from the recursion `e_{k+1} = e_k^q - D_k^{q - 1} e_k`, `e_0 = x`.

        Only used to cross-check the defining product.
        """
        self._check_t(t)
        e = self.ax_ring.x
        for k in range(t):
            e = e**self.q - self._d[k] ** (self.q - 1) * e
        return e


def carlitz_basis(ctx: CarlitzCtx, i: int) -> Poly:
    """
    The Carlitz polynomial `G_i = prod_t (e_t / D_t)^{i_t}` over `Frac(A)`.

    Raises:
        ValueError: If `i` needs a `t` beyond `ctx.max_t`.
    """
    ds = digits(i, ctx.q)
    if len(ds) - 1 > ctx.max_t:
        msg = f"G_{i} needs e_t for t up to {len(ds) - 1}, beyond {ctx.max_t}."
        raise ValueError(msg)
    return _digit_product(ctx._g, i, ctx.q, ctx.kx_ring.one)  # noqa: SLF001


@dataclass(frozen=True)
class IntegralityReport:
    """
    Points where a Carlitz polynomial fails to take a value in `A`.
    """

    checked: int
    failures: tuple[tuple[int, Poly, Element], ...] = ()
    """Triples `(i, a, G_i(a))` with a non-integral value."""

    @property
    def passed(self) -> bool:
        """
        Whether every value was integral.
        """
        return not self.failures


def integrality_check(
    ctx: CarlitzCtx,
    i_max: int,
    points: Iterable[object],
) -> IntegralityReport:
    """
    Evaluate `G_i(a)` for `i <= i_max` and every `a` in `points`.
    """
    values = [ctx.a_ring.coerce(a) for a in points]
    failures = []
    checked = 0
    for i in range(i_max + 1):
        g = carlitz_basis(ctx, i)
        for a in values:
            value = g(ctx.frac_ring.coerce(a))
            checked += 1
            if not value.is_integral():
                logger.info("G_%d(%s) = %s is not in A.", i, a, value)
                failures.append((i, a, value))
    return IntegralityReport(checked, tuple(failures))


def _dirac_factors(ctx: CarlitzCtx, alpha: Poly, n: int) -> list[Poly]:
    """
    The values `e_t(alpha) / D_t` in `A` for every `q^t < n`.

    Raises:
        ArithmeticError: If a division is not exact.
    """
    values = []
    t = 0
    while ctx.q**t < n:
        e_alpha = ctx.e(t)(alpha)
        quotient, remainder = divmod(e_alpha, ctx.d(t))
        if not remainder.is_zero():
            msg = f"e_{t}({alpha}) is not divisible by D_{t}."
            raise ArithmeticError(msg)
        values.append(quotient)
        t += 1
    return values


def dirac(ctx: CarlitzCtx, alpha: object, n: int) -> DividedElem:
    """
    The Dirac element `sum_{i < n} G_i(alpha) D_i` with coefficients in `A`.

    Raises:
        ValueError: If `ctx` does not cover the window.
        ArithmeticError: If a value `G_i(alpha)` falls outside `A`.
    """
    a = ctx.a_ring.coerce(alpha)
    factors = _dirac_factors(ctx, a, n)
    coeffs = {i: _digit_product(factors, i, ctx.q, ctx.a_ring.one) for i in range(n)}
    return DividedElem(ctx.a_ring, n, coeffs)


def dirac_factorization(ctx: CarlitzCtx, alpha: object, n: int) -> list[DividedElem]:
    """
    Factor `dirac(alpha)` into one element per q-adic digit position.

    The factor for position `t` is `sum_{k < q} g^k D_{k q^t}` with
    `g = G_{q^t}(alpha)`; the product of all factors is the Dirac element.
    """
    a = ctx.a_ring.coerce(alpha)
    factors = []
    for t, g in enumerate(_dirac_factors(ctx, a, n)):
        coeffs = {k * ctx.q**t: g**k for k in range(ctx.q) if k * ctx.q**t < n}
        factors.append(DividedElem(ctx.a_ring, n, coeffs))
    return factors


################################################################################
## The Carlitz module
################################################################################


@dataclass(frozen=True)
class SkewPolyRing(Ring):
    """
    The skew polynomial ring `A[tau]` with `tau a = a^q tau`.
    """

    base: PolyRing

    @property
    def field(self) -> FieldCtx:  # noqa: D102
        return self.base.field

    @property
    def tag(self) -> str:  # noqa: D102
        return f"{self.base.tag}[tau]"

    @property
    def tau(self) -> SkewPoly:
        """
        The twist `tau`.
        """
        return SkewPoly(self, (self.base.zero, self.base.one))

    def coerce(self, value: object) -> SkewPoly:  # noqa: D102
        if isinstance(value, SkewPoly) and value.ring == self:
            return value
        return SkewPoly(self, (self.base.coerce(value),))

    def gen(self, name: str) -> SkewPoly:  # noqa: D102
        if name == "tau":
            return self.tau
        return self.coerce(self.base.gen(name))


class SkewPoly(Element):
    """
    An element `a_0 + a_1 tau + ... + a_d tau^d` of `A[tau]`.
    """

    __slots__ = ("_ring", "coeffs")

    def __init__(self, ring: SkewPolyRing, coeffs: tuple[Poly, ...]) -> None:
        """
        Initialize the element, trimming trailing zero coefficients.
        """
        end = len(coeffs)
        while end and coeffs[end - 1].is_zero():
            end -= 1
        self._ring = ring
        self.coeffs = coeffs[:end]

    @property
    def ring(self) -> SkewPolyRing:  # noqa: D102
        return self._ring

    def coeff(self, j: int) -> Poly:
        """
        The coefficient of `tau^j`.
        """
        return self.coeffs[j] if j < len(self.coeffs) else self._ring.base.zero

    def is_zero(self) -> bool:  # noqa: D102
        return not self.coeffs

    def _add(self, other: SkewPoly) -> SkewPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        return SkewPoly(
            self._ring, tuple(self.coeff(j) + other.coeff(j) for j in range(n))
        )

    def __neg__(self) -> SkewPoly:
        return SkewPoly(self._ring, tuple(-c for c in self.coeffs))

    def _mul(self, other: SkewPoly) -> SkewPoly:
        # Coefficients lie in F_q[th], so a^{q^i} is a(th^{q^i}).
        q = self._ring.field.q
        out = [self._ring.base.zero] * max(len(self.coeffs) + len(other.coeffs) - 1, 0)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b.inflate(q**i)
        return SkewPoly(self._ring, tuple(out))

    def __rmul__(self, other: object) -> SkewPoly:
        lifted = self._lift(other)
        if lifted is NotImplemented:
            return NotImplemented
        return lifted._mul(self)  # noqa: SLF001

    def _equals(self, other: SkewPoly) -> bool:
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self._ring, self.coeffs))

    def as_additive(self, ring: PolyRing | None = None) -> Poly:
        """
        The `q`-linear polynomial `sum_j a_j x^{q^j}` over `A`.
        """
        target = ring or PolyRing(self._ring.base, "x")
        q = self._ring.field.q
        return target.from_terms((q**j, a) for j, a in enumerate(self.coeffs))

    def __str__(self) -> str:
        parts = []
        for j, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            if j == 0:
                parts.append(compact(str(a)) if len(self.coeffs) > 1 else str(a))
                continue
            mono = "tau" if j == 1 else f"tau^{j}"
            parts.append(mono if a == 1 else f"{compact(str(a))}*{mono}")
        return " + ".join(parts) or "0"


def skew_ring(ctx: CarlitzCtx) -> SkewPolyRing:
    """
    The ring `A[tau]` for the context.
    """
    return SkewPolyRing(ctx.a_ring)


def carlitz_action(ctx: CarlitzCtx, a: object) -> SkewPoly:
    """
    The Carlitz module `C_a` in `A[tau]`, with `C_th = th + tau`.

    `C` is additive and multiplicative in `a`, and constants act as scalars, so
    `C_a` is obtained from the coefficients of `a` by Horner's rule.
    """
    ring = skew_ring(ctx)
    element = ctx.a_ring.coerce(a)
    c_theta = ring.coerce(ctx.theta) + ring.tau
    acc = ring.zero
    for c in reversed(element.coeffs):
        acc = acc * c_theta + c
    return acc


def b_poly(ctx: CarlitzCtx, j: int) -> Poly:
    """
    `b_j(t) = prod_{e < j} (t - th^{q^e})` in `A[t]`; `b_0 = 1`.
    """
    t = ctx.t_ring.x
    result = ctx.t_ring.one
    for e in range(j):
        result *= t - ctx.theta ** (ctx.q**e)
    return result


def theta_to_t(ctx: CarlitzCtx, a: object) -> Poly:
    """
    The polynomial `a(th -> t)` in `A[t]`.
    """
    return ctx.t_ring.from_coefficients(ctx.a_ring.coerce(a).coeffs)


def pellarin_map(ctx: CarlitzCtx, s: SkewPoly) -> Poly:
    """
    The `A`-linear map `tau^j -> b_j(t)` from `A[tau]` to `A[t]`.
    """
    result = ctx.t_ring.zero
    for j, a in enumerate(s.coeffs):
        if not a.is_zero():
            result += b_poly(ctx, j) * a
    return result
