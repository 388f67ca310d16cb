"""
Actions on divided power series.

Two families of maps act on `R{{D}}`:

-   A permutation `sigma` of the q-adic digit positions moves indices by
    `sigma_*(sum_i y_i q^i) = sum_i y_i q^{sigma(i)}` and induces the ring
    automorphism `D_j -> D_{sigma_* j}`. Only permutations of a finite window
    `{0, ..., K - 1}` are handled, acting on elements truncated at `q^K`.

-   Three endomorphisms: `pi1` raises every coefficient to the `p`-th power,
    `pi2` sends `D_i` to `D_{p i}`, and `pi3` scales the coefficient of `D_i`
    by `r^i`.

All of them are wrapped as `Action` objects, which compose and iterate, and
`stability_report` records what an action does to multiplicativity and to
membership in the Carlitz image.
"""

from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import TYPE_CHECKING, NamedTuple

from lucas_umbral.algebra.digits import digits, from_digits
from lucas_umbral.algebra.field import FieldCtx
from lucas_umbral.carlitz import is_in_carlitz_image
from lucas_umbral.divided import DividedElem
from lucas_umbral.sequence import check_multiplicative

if TYPE_CHECKING:
    from lucas_umbral.carlitz import CarlitzMembership
    from lucas_umbral.sequence import CheckReport

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DigitPerm:
    """
    A permutation of the digit positions `{0, ..., K - 1}` in base `q`.

    `mapping[i]` is the position that digit `i` moves to.
    """

    q: int
    mapping: tuple[int, ...]

    def __post_init__(self) -> None:
        """
        Check that the mapping is a bijection of the window.

        Raises:
            ValueError: If the mapping is not a permutation or `q < 2`.
        """
        if self.q < 2:  # noqa: PLR2004
            msg = f"Digit base {self.q} must be at least 2."
            raise ValueError(msg)
        if sorted(self.mapping) != list(range(len(self.mapping))):
            msg = f"{list(self.mapping)} is not a permutation of 0..{len(self.mapping) - 1}."
            raise ValueError(msg)

    @property
    def window(self) -> int:
        """
        The number `K` of permuted digit positions.
        """
        return len(self.mapping)

    @property
    def size(self) -> int:
        """
        `q^K`, the truncation the permutation acts on.
        """
        return self.q**self.window

    @classmethod
    def identity(cls, q: int, window: int) -> DigitPerm:
        """
        The identity permutation.
        """
        return cls(q, tuple(range(window)))

    @classmethod
    def swap(cls, q: int, window: int, i: int, j: int) -> DigitPerm:
        """
        The transposition of positions `i` and `j`.
        """
        mapping = list(range(window))
        mapping[i], mapping[j] = mapping[j], mapping[i]
        return cls(q, tuple(mapping))

    @classmethod
    def parse(cls, text: str, q: int, window: int) -> DigitPerm:
        """
        Parse `"0>1,1>0"` style text; unlisted positions are fixed.

        Raises:
            ValueError: If the text is malformed, a position lies outside the
                window, or the result is not a permutation.
        """
        mapping = list(range(window))
        seen = set()
        for raw in text.split(","):
            item = raw.strip()
            if not item:
                continue
            src, sep, dst = item.partition(">")
            if not sep or not src.strip().isdigit() or not dst.strip().isdigit():
                msg = f"Expected 'i>j' pairs, got {item!r}."
                raise ValueError(msg)
            i, j = int(src), int(dst)
            if i >= window or j >= window or i in seen:
                msg = f"Pair {item!r} is repeated or leaves the window 0..{window - 1}."
                raise ValueError(msg)
            seen.add(i)
            mapping[i] = j
        return cls(q, tuple(mapping))

    def __call__(self, i: int) -> int:
        return self.mapping[i]

    def compose(self, other: DigitPerm) -> DigitPerm:
        """
        `self o other`: apply `other` first.

        Raises:
            ValueError: If the bases or windows differ.
        """
        if other.q != self.q or other.window != self.window:
            msg = "Only permutations with the same base and window compose."
            raise ValueError(msg)
        return DigitPerm(self.q, tuple(self.mapping[k] for k in other.mapping))

    def inverse(self) -> DigitPerm:
        """
        The inverse permutation.
        """
        inv = [0] * self.window
        for i, j in enumerate(self.mapping):
            inv[j] = i
        return DigitPerm(self.q, tuple(inv))

    def __str__(self) -> str:
        moved = [f"{i}>{j}" for i, j in enumerate(self.mapping) if i != j]
        return ",".join(moved) or "id"


def sigma_star_index(perm: DigitPerm, n: int) -> int:
    """
    Move the q-adic digit `d_i` of `n` to position `perm(i)`.

    Raises:
        ValueError: If `n` lies outside `[0, q^K)`.
    """
    if not 0 <= n < perm.size:
        msg = f"Index {n} lies outside the window [0, {perm.size})."
        raise ValueError(msg)
    ds = digits(n, perm.q)
    out = [0] * perm.window
    for i, d in enumerate(ds):
        out[perm(i)] = d
    return from_digits(out, perm.q)


def sigma_star_elem(perm: DigitPerm, f: DividedElem) -> DividedElem:
    """
    Apply `D_j -> D_{sigma_* j}` to an element truncated at `q^K`.

    Raises:
        ValueError: If `f.trunc` is not `q^K`.
    """
    if f.trunc != perm.size:
        msg = (
            f"Digit permutations of window {perm.window} act at truncation "
            f"{perm.size}, not {f.trunc}."
        )
        raise ValueError(msg)
    return DividedElem(
        f.ring, f.trunc, {sigma_star_index(perm, i): c for i, c in f.coeffs.items()}
    )


def pi1(f: DividedElem) -> DividedElem:
    """
    Raise every coefficient to the `p`-th power.
    """
    p = f.ring.characteristic
    return f.map_coefficients(lambda a: a**p)


def pi1_inverse(f: DividedElem) -> DividedElem:
    """
    Undo `pi1` over a finite coefficient field `F_q`, `q = p^lam`.

    On `F_q` the Frobenius has order `lam`, so the inverse is the
    `(lam - 1)`-fold iterate.

    Raises:
        ValueError: If the coefficient ring is not a finite field.
    """
    if not isinstance(f.ring, FieldCtx):
        msg = f"pi1 is only inverted over a finite field, not {f.ring.tag}."
        raise ValueError(msg)
    for _ in range(f.ring.lam - 1):
        f = pi1(f)
    return f


def pi2(f: DividedElem) -> DividedElem:
    """
    Send `D_i` to `D_{p i}`.

    The truncation becomes `p (trunc - 1) + 1`; the new intermediate
    coefficients are exactly zero.
    """
    p = f.ring.characteristic
    return DividedElem(
        f.ring, p * (f.trunc - 1) + 1, {p * i: c for i, c in f.coeffs.items()}
    )


def pi3(f: DividedElem, r: object) -> DividedElem:
    """
    Scale the coefficient of `D_i` by `r^i`.
    """
    value = f.ring.coerce(r)
    return DividedElem(f.ring, f.trunc, {i: c * value**i for i, c in f.coeffs.items()})


def pi_endo(kind: str, f: DividedElem, r: object = None) -> DividedElem:
    """
    Dispatch to `pi1`, `pi2` or `pi3` by name.

    Raises:
        ValueError: If the kind is unknown, or `pi3` is requested without `r`.
    """
    if kind == "pi1":
        return pi1(f)
    if kind == "pi2":
        return pi2(f)
    if kind == "pi3":
        if r is None:
            msg = "pi3 needs a value for r."
            raise ValueError(msg)
        return pi3(f, r)
    msg = f"Unknown endomorphism {kind!r}; choose from pi1, pi2, pi3."
    raise ValueError(msg)


class Action(ABC):
    """
    A map on divided elements.
    """

    @abstractmethod
    def apply(self, f: DividedElem) -> DividedElem:
        """
        Apply the action to `f`.
        """

    def __call__(self, f: DividedElem) -> DividedElem:
        return self.apply(f)

    def then(self, other: Action) -> Action:
        """
        The action applying `self` first and then `other`.

        Nested compositions are flattened.
        """
        left = self.steps if isinstance(self, CompositeAction) else (self,)
        right = other.steps if isinstance(other, CompositeAction) else (other,)
        return CompositeAction(*left, *right)

    def power(self, k: int) -> Action:
        """
        The `k`-fold iterate; the identity when `k = 0`.
        """
        return CompositeAction(*([self] * k))


class SigmaAction(Action):
    """
    The digit permutation automorphism `sigma_*`.
    """

    def __init__(self, perm: DigitPerm) -> None:
        """
        Initialize with the digit permutation.
        """
        self.perm = perm

    def apply(self, f: DividedElem) -> DividedElem:  # noqa: D102
        return sigma_star_elem(self.perm, f)

    def __str__(self) -> str:
        return f"sigma[{self.perm}]"


class FrobeniusAction(Action):
    """
    `pi1`, the coefficientwise Frobenius.
    """

    def apply(self, f: DividedElem) -> DividedElem:  # noqa: D102
        return pi1(f)

    def __str__(self) -> str:
        return "pi1"


class DilationAction(Action):
    """
    `pi2`, the index dilation `D_i -> D_{p i}`.
    """

    def apply(self, f: DividedElem) -> DividedElem:  # noqa: D102
        return pi2(f)

    def __str__(self) -> str:
        return "pi2"


class EvaluationAction(Action):
    """
    `pi3`, the evaluation map scaling `D_i` by `r^i`.
    """

    def __init__(self, r: object) -> None:
        """
        Initialize with the scaling value `r`.
        """
        self.r = r

    def apply(self, f: DividedElem) -> DividedElem:  # noqa: D102
        return pi3(f, self.r)

    def __str__(self) -> str:
        return f"pi3[r={self.r}]"


class CompositeAction(Action):
    """
    Several actions applied left to right.
    """

    def __init__(self, *steps: Action) -> None:
        """
        Initialize with the actions, in order of application.
        """
        self.steps: tuple[Action, ...] = steps

    def apply(self, f: DividedElem) -> DividedElem:  # noqa: D102
        for step in self.steps:
            f = step.apply(f)
        return f

    def __str__(self) -> str:
        return " then ".join(map(str, self.steps)) or "id"


class StabilityReport(NamedTuple):
    """
    The effect of an action on multiplicativity and Carlitz membership.
    """

    image: DividedElem
    """The transformed element."""

    multiplicative_before: CheckReport
    multiplicative_after: CheckReport

    membership_before: CarlitzMembership | None
    """Carlitz membership of the input, when a `q` was given."""

    membership_after: CarlitzMembership | None

    @property
    def keeps_multiplicativity(self) -> bool:
        """
        Whether a multiplicative input stays multiplicative.
        """
        return not self.multiplicative_before.passed or self.multiplicative_after.passed

    @property
    def keeps_membership(self) -> bool | None:
        """
        Whether the action preserves (non-)membership, `None` when not checked.
        """
        if self.membership_before is None or self.membership_after is None:
            return None
        return self.membership_before.member == self.membership_after.member


def _membership(f: DividedElem, q: int | None) -> CarlitzMembership | None:
    if q is None or f.coeff(0) != 1:
        return None
    return is_in_carlitz_image(f, q)


def stability_report(action: Action, f: DividedElem, q: int | None = None) -> StabilityReport:
    """
    Apply `action` and re-run the multiplicativity and membership checks.

    Args:
        action:
            The action to apply.

        f:
            A generating function.

        q:
            When given, membership in the Carlitz `q`-image is checked before
            and after.
    """
    image = action.apply(f)
    report = StabilityReport(
        image=image,
        multiplicative_before=check_multiplicative(f),
        multiplicative_after=check_multiplicative(image),
        membership_before=_membership(f, q),
        membership_after=_membership(image, q),
    )
    logger.info(
        "%s: multiplicative %s -> %s.",
        action,
        report.multiplicative_before.status,
        report.multiplicative_after.status,
    )
    return report

