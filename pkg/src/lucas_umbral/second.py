"""
Null sequences and the second construction.

A strictly increasing list of indices `i_0 < i_1 < ...` is a null sequence
when every product `D_{i_j} D_{i_t}` vanishes, squares included; by Lucas'
theorem this means `C(i_j + i_t, i_t) = 0 mod p`. For any additive `e_j` the
element

```
f_{X, E} = 1 + sum_j e_j(x) D_{i_j} = prod_j (1 + e_j(x) D_{i_j})
```

is then multiplicative. The indices `p^i - 1` form a null sequence, and the
resulting elements lie outside the image of the Carlitz construction.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from typing import TYPE_CHECKING

from lucas_umbral.actions import sigma_star_index
from lucas_umbral.algebra.digits import lucas
from lucas_umbral.algebra.parse import ParseError
from lucas_umbral.algebra.poly import is_additive
from lucas_umbral.divided import DividedElem, dp_product

if TYPE_CHECKING:
    from collections.abc import Iterator, Sequence

    from lucas_umbral.actions import DigitPerm
    from lucas_umbral.algebra.poly import Poly, PolyRing

logger = logging.getLogger(__name__)

_HEADER = re.compile(r"p=(?P<p>\d+)")


@dataclass(frozen=True)
class NullCheck:
    """
    Outcome of a null-sequence check.
    """

    ok: bool
    pair: tuple[int, int] | None = None
    """The first pair `(i_j, i_t)`, `j <= t`, with a nonzero product."""


def _check_increasing(indices: Sequence[int]) -> None:
    if any(i < 1 for i in indices):
        msg = f"Indices must be positive, got {list(indices)}."
        raise ValueError(msg)
    if any(a >= b for a, b in zip(indices, indices[1:])):
        msg = f"Indices must be strictly increasing, got {list(indices)}."
        raise ValueError(msg)


def _annihilate(i: int, j: int, p: int) -> bool:
    return lucas(i + j, j, p) == 0


def is_null_sequence(indices: Sequence[int], p: int) -> NullCheck:
    """
    Check that `D_i D_j = 0` for every pair of indices, `i = j` included.

    Raises:
        ValueError: If the indices are not positive and strictly increasing.
    """
    _check_increasing(indices)
    for t, it in enumerate(indices):
        for ij in indices[: t + 1]:
            if not _annihilate(ij, it, p):
                return NullCheck(ok=False, pair=(ij, it))
    return NullCheck(ok=True)


@dataclass(frozen=True)
class NullSeq:
    """
    A verified null sequence of indices for characteristic `p`.
    """

    p: int
    indices: tuple[int, ...]

    def __post_init__(self) -> None:
        """
        Verify the null property.

        Raises:
            ValueError: If the indices are not increasing or not null.
        """
        object.__setattr__(self, "indices", tuple(self.indices))
        check = is_null_sequence(self.indices, self.p)
        if not check.ok:
            i, j = check.pair or (0, 0)
            msg = f"D_{i} * D_{j} = {lucas(i + j, j, self.p)} D_{i + j} is nonzero."
            raise ValueError(msg)

    def __len__(self) -> int:
        return len(self.indices)

    @classmethod
    def power_family(cls, p: int, count: int) -> NullSeq:
        """
        The null sequence `p - 1, p^2 - 1, ..., p^count - 1`.

        For `p = 2` the family starts at index `1`.
        """
        return cls(p, tuple(p**i - 1 for i in range(1, count + 1)))

    def transport(self, perm: DigitPerm) -> NullSeq:
        """
        Move every index by the digit permutation, `X -> X^sigma`.

        Raises:
            ValueError: If an index lies outside the window of `perm`, or the
                transported indices are not null.
        """
        return NullSeq(self.p, tuple(sorted(sigma_star_index(perm, i) for i in self.indices)))

    def transport_entries(self, perm: DigitPerm, entries: Sequence[Poly]) -> list[Poly]:
        """
        Reorder `entries` to follow the indices after `transport`.
        """
        moved = [sigma_star_index(perm, i) for i in self.indices]
        order = sorted(range(len(moved)), key=moved.__getitem__)
        return [entries[k] for k in order]

    def to_text(self) -> str:
        """
        Serialise as a `p=<p>` header and a comma-separated index line.
        """
        return f"p={self.p}\n{','.join(map(str, self.indices))}\n"

    @classmethod
    def from_text(cls, text: str) -> NullSeq:
        """
        Parse the output of `to_text`.

        Raises:
            ParseError: If the text is malformed.
            ValueError: If the indices are not a null sequence.
        """
        lines = [line.strip() for line in text.splitlines() if line.strip()]
        if not lines or not (m := _HEADER.fullmatch(lines[0])):
            msg = "Null sequence files start with 'p=<p>'."
            raise ParseError(msg)
        body = lines[1] if len(lines) > 1 else ""
        try:
            indices = tuple(int(s) for s in body.split(",") if s.strip())
        except ValueError as err:
            msg = f"Expected comma-separated integers, got {body!r}."
            raise ParseError(msg) from err
        return cls(int(m.group("p")), indices)


def _validate(x: NullSeq, entries: Sequence[Poly], ring: PolyRing | None) -> PolyRing:
    if len(entries) != len(x.indices):
        msg = f"Got {len(entries)} entries for {len(x.indices)} indices."
        raise ValueError(msg)
    if ring is None:
        if not entries:
            msg = "A ring is required when there are no entries."
            raise ValueError(msg)
        ring = entries[0].ring
    for j, e in enumerate(entries):
        if not is_additive(ring.coerce(e)):
            msg = f"Entry {j} = {e} is not additive."
            raise ValueError(msg)
    return ring


def build_second(
    x: NullSeq,
    entries: Sequence[Poly],
    *,
    ring: PolyRing | None = None,
    trunc: int | None = None,
) -> DividedElem:
    """
    The element `1 + sum_j e_j(x) D_{i_j}`.

    Args:
        x:
            The null sequence of indices.

        entries:
            One additive polynomial per index.

        ring:
            The coefficient ring; taken from the entries when omitted.

        trunc:
            The truncation order; at least, and by default, `max(indices) + 1`.

    Raises:
        ValueError: If the lengths differ, an entry is not additive, or
            `trunc` cuts off an index.
    """
    ring = _validate(x, entries, ring)
    needed = (max(x.indices) if x.indices else 0) + 1
    n = trunc if trunc is not None else needed
    if n < needed:
        msg = f"Truncation {n} cuts off index {needed - 1}."
        raise ValueError(msg)
    coeffs = {0: ring.one}
    coeffs.update(zip(x.indices, entries))
    return DividedElem(ring, n, coeffs)


def build_second_product(
    x: NullSeq,
    entries: Sequence[Poly],
    *,
    ring: PolyRing | None = None,
    trunc: int | None = None,
) -> DividedElem:
    """
    The product `prod_j (1 + e_j(x) D_{i_j})`, computed with `dp_mul`.
    """
    ring = _validate(x, entries, ring)
    n = trunc if trunc is not None else (max(x.indices) if x.indices else 0) + 1
    factors = (
        DividedElem(ring, n, {0: ring.one, i: e}) for i, e in zip(x.indices, entries)
    )
    return dp_product(factors, ring, n)


def enumerate_null_sequences(
    p: int,
    bound: int,
    limit: int | None = None,
) -> Iterator[NullSeq]:
    """
    Yield the maximal null sequences with indices in `[1, bound)`.

    Sequences are grown greedily, smallest index first, with backtracking; a
    sequence is yielded once no index below `bound` can be added to it.
    Output order is lexicographic in the index lists.

    Args:
        p:
            The characteristic.

        bound:
            Exclusive upper bound on the indices.

        limit:
            Stop after this many sequences.
    """
    usable = [i for i in range(1, bound) if _annihilate(i, i, p)]
    compatible = {
        i: {j for j in usable if _annihilate(i, j, p)} for i in usable
    }
    emitted = 0

    def grow(chosen: list[int], candidates: list[int]) -> Iterator[NullSeq]:
        nonlocal emitted
        if limit is not None and emitted >= limit:
            return
        if not candidates:
            allowed = set(usable)
            for i in chosen:
                allowed &= compatible[i]
            if allowed.issubset(chosen):
                emitted += 1
                logger.debug("Maximal null sequence %s.", chosen)
                yield NullSeq(p, tuple(chosen))
            return
        for k, i in enumerate(candidates):
            rest = [j for j in candidates[k + 1 :] if j in compatible[i]]
            yield from grow([*chosen, i], rest)
            if limit is not None and emitted >= limit:
                return

    yield from grow([], usable)
