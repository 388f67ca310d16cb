"""
Enumeration of truncated binomial-type sequences over `F_p`.

Once `p_0 = 1, p_1, ..., p_{n-1}` are fixed, the binomial identity for `p_n`
rearranges into an affine-linear condition on the coefficients of `p_n`:

```
p_n(x + y) - p_n(x) - p_n(y) = sum_{0 < i < n} C(n, i) p_i(x) p_{n-i}(y).
```

Its homogeneous solutions are exactly the additive polynomials, so each step
either has no solution or a coset of the additive polynomials of degree at
most `d`. Walking every choice gives every sequence with entries of degree at
most `d`, which `classify` then tests against the two known constructions.
"""

from __future__ import annotations

import itertools
import logging
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import TYPE_CHECKING, Literal

from lucas_umbral.algebra.bipoly import BiPolyRing, substitute_sum
from lucas_umbral.algebra.digits import lucas
from lucas_umbral.algebra.field import FieldCtx, field
from lucas_umbral.algebra.linalg import solve_affine_system
from lucas_umbral.algebra.poly import Poly, PolyRing, is_additive, is_q_linear
from lucas_umbral.carlitz import (
    CarlitzMembership,
    LinearSeq,
    carlitz_sequence,
    is_in_carlitz_image,
)
from lucas_umbral.divided import DividedElem, dp_mul
from lucas_umbral.second import NullSeq, is_null_sequence
from lucas_umbral.sequence import PolySeq, check_multiplicative, gen_function

if TYPE_CHECKING:
    from collections.abc import Iterator
    from concurrent.futures import Future

    from lucas_umbral.algebra.bipoly import Monomial

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PrefixState:
    """
    A validated prefix `p_0, ..., p_{n-1}` and the degree bound `d`.
    """

    seq: PolySeq
    degree: int

    def __post_init__(self) -> None:
        """
        Check the field and the degree bound.

        Raises:
            ValueError: If the field is not prime or `degree < 1`.
        """
        base = self.seq.ring.base
        if not isinstance(base, FieldCtx) or base.lam != 1:
            msg = f"Enumeration runs over prime fields only, not {base.tag}."
            raise ValueError(msg)
        if self.degree < 1:
            msg = f"Degree bound must be at least 1, got {self.degree}."
            raise ValueError(msg)

    @property
    def n(self) -> int:
        """
        The index of the next entry.
        """
        return self.seq.n


@dataclass(frozen=True)
class StepSolution:
    """
    The solutions `particular + span(kernel)` for the next entry.
    """

    particular: Poly
    kernel: tuple[Poly, ...]

    def candidates(self) -> Iterator[Poly]:
        """
        Every solution, with kernel coefficients in lexicographic order.
        """
        p = self.particular.ring.characteristic
        for combo in itertools.product(range(p), repeat=len(self.kernel)):
            value = self.particular
            for c, k in zip(combo, self.kernel):
                if c:
                    value += k * c
            yield value


def extend_step(state: PrefixState) -> StepSolution | None:
    """
    Solve for the next entry `p_n` of degree at most `d`.

    Returns:
        The affine solution space, or `None` when no `p_n` extends the prefix.
    """
    seq = state.seq
    n = state.n
    ring = seq.ring
    fld = ring.base
    p = ring.characteristic
    bi = BiPolyRing(fld)

    rhs = bi.zero
    for i in range(1, n):
        c = lucas(n, i, p)
        if c and not seq[i].is_zero() and not seq[n - i].is_zero():
            rhs += bi.from_x(seq[i]) * bi.from_y(seq[n - i]) * c

    columns = []
    for k in range(state.degree + 1):
        mono = ring.monomial(1, k)
        columns.append(substitute_sum(mono) - bi.from_x(mono) - bi.from_y(mono))

    monomials: set[Monomial] = set(rhs.coeffs)
    for col in columns:
        monomials.update(col.coeffs)
    order = sorted(monomials)
    rows = [[col.coeff(*m) for col in columns] for m in order]
    values = [rhs.coeff(*m) for m in order]

    solution = solve_affine_system(rows, values, fld, ncols=len(columns))
    if solution is None:
        logger.debug("No entry p_%d extends the prefix.", n)
        return None
    kernel = tuple(ring.from_coefficients(v) for v in solution.kernel)
    return StepSolution(ring.from_coefficients(solution.particular), kernel)


@dataclass(frozen=True)
class Found:
    """
    An enumerated sequence and the kernel dimension at every step.
    """

    sequence: PolySeq
    kernel_dims: tuple[int, ...]


class Explorer:
    """
    Depth-first enumeration of binomial-type sequences over `F_p`.
    """

    def __init__(
        self,
        fld: FieldCtx,
        n: int,
        degree: int,
        budget: int | None = None,
        workers: int = 1,
    ) -> None:
        """
        Initialize the explorer.

        Args:
            fld:
                The prime field `F_p`.

            n:
                The truncation order `N` of the emitted sequences.

            degree:
                The degree bound `d` on every entry.

            budget:
                The maximum number of emitted sequences; unlimited if `None`.

            workers:
                The number of worker processes. With more than one, the
                first-level branches are searched in parallel and merged in
                branch order.
        """
        if n < 1:
            msg = f"Truncation order must be at least 1, got {n}."
            raise ValueError(msg)
        self.ring = PolyRing(fld, "x")
        self.n = n
        self.degree = degree
        self.budget = budget
        self.workers = workers
        self.exhausted = False
        """Whether the budget stopped the walk before it was complete."""
        PrefixState(PolySeq(self.ring, (self.ring.one,)), degree)

    def _walk_from(
        self,
        prefix: tuple[Poly, ...],
        dims: tuple[int, ...],
        cap: int | None,
    ) -> Iterator[Found]:
        emitted = 0
        stack = [(prefix, dims)]
        while stack:
            entries, kdims = stack.pop()
            if len(entries) == self.n:
                if cap is not None and emitted >= cap:
                    self.exhausted = True
                    return
                emitted += 1
                yield Found(PolySeq(self.ring, entries), kdims)
                continue
            step = extend_step(PrefixState(PolySeq(self.ring, entries), self.degree))
            if step is None:
                continue
            children = [
                ((*entries, c), (*kdims, len(step.kernel))) for c in step.candidates()
            ]
            # Reversed so that the stack pops children in lexicographic order.
            stack.extend(reversed(children))

    def walk(self) -> Iterator[Found]:
        """
        Yield every sequence of length `N` with entries of degree at most `d`.

        The order is lexicographic in the kernel coefficients at each step.
        If the budget runs out the walk stops early, `exhausted` is set and a
        warning is logged.
        """
        self.exhausted = False
        root = (self.ring.one,)
        if self.workers <= 1 or self.n <= 1:
            yield from self._walk_from(root, (), self.budget)
        else:
            yield from self._walk_parallel(root)
        if self.exhausted:
            logger.warning("Budget of %s sequences exhausted.", self.budget)

    def _walk_parallel(self, root: tuple[Poly, ...]) -> Iterator[Found]:
        step = extend_step(PrefixState(PolySeq(self.ring, root), self.degree))
        if step is None:
            return
        dim = len(step.kernel)
        p = self.ring.base.p
        branches = iter(step.candidates())
        remaining = self.budget

        def submit(pool: ProcessPoolExecutor, child: Poly) -> Future[list[Found]]:
            # Branches still in flight can only lower the budget left.
            cap = None if remaining is None else remaining + 1
            prefix = [str(c) for c in (*root, child)]
            return pool.submit(_walk_branch, (p, self.n, self.degree, cap, prefix, dim))

        logger.debug("Searching first-level branches on %d workers.", self.workers)
        with ProcessPoolExecutor(max_workers=self.workers) as pool:
            queue = deque(submit(pool, c) for c in itertools.islice(branches, self.workers))
            try:
                while queue:
                    for found in queue.popleft().result():
                        if remaining is not None:
                            if remaining == 0:
                                self.exhausted = True
                                return
                            remaining -= 1
                        yield found
                    queue.extend(submit(pool, c) for c in itertools.islice(branches, 1))
            finally:
                for future in queue:
                    future.cancel()


def _walk_branch(job: tuple[int, int, int, int | None, list[str], int]) -> list[Found]:
    p, n, degree, cap, prefix, dim = job
    explorer = Explorer(field(p), n, degree)
    entries = tuple(explorer.ring.parse(s) for s in prefix)
    return list(explorer._walk_from(entries, (dim,), cap))  # noqa: SLF001


def enumerate_sequences(
    p: int,
    n: int,
    degree: int,
    budget: int | None = None,
    workers: int = 1,
) -> Iterator[PolySeq]:
    """
    Yield every binomial-type sequence over `F_p` of length `n` and degree at most `degree`.
    """
    for found in Explorer(field(p), n, degree, budget, workers).walk():
        yield found.sequence


Kind = Literal["carlitz_image", "second_form", "carlitz_quotient_heuristic", "unresolved"]


@dataclass(frozen=True)
class Classification:
    """
    Where a multiplicative element sits relative to the two constructions.

    `union_reading` holds when the element lies in one of the two images;
    `group_reading` holds when it is shown to lie in the group they generate.
    `unresolved` sets neither and is not a claim of non-membership.
    """

    kind: Kind
    union_reading: bool
    group_reading: bool
    residual: DividedElem | None = None
    """For the quotient and unresolved outcomes, the element left after
    dividing by the reconstructed Carlitz factor."""

    witness: CarlitzMembership | NullSeq | LinearSeq | None = None

    def __str__(self) -> str:
        return self.kind


def _second_shape(f: DividedElem) -> NullSeq | None:
    p = f.ring.characteristic
    indices = [i for i, _ in f.terms() if i > 0]
    if f.coeff(0) != 1 or not indices:
        return None
    if not all(is_additive(f.coeff(i)) for i in indices):
        return None
    if not is_null_sequence(indices, p).ok:
        return None
    return NullSeq(p, tuple(indices))


def _linear_part(f: Poly, q: int) -> Poly:
    return f.ring.from_terms((e, c) for e, c in f.terms() if is_q_linear(f.ring.monomial(1, e), q))


def classify(f: DividedElem, q: int | None = None) -> Classification:
    """
    Test `f` against the Carlitz image, the second construction and their products.

    Args:
        f:
            A multiplicative generating function.

        q:
            The base of the Carlitz construction; the characteristic by default.

    Raises:
        ValueError: If `f` is not multiplicative.
    """
    report = check_multiplicative(f)
    if report.status != "pass":
        msg = f"Only multiplicative elements are classified: {report}."
        raise ValueError(msg)
    q = q or f.ring.characteristic

    membership = is_in_carlitz_image(f, q)
    if membership.member:
        return Classification(
            "carlitz_image", union_reading=True, group_reading=True, witness=membership
        )

    if (shape := _second_shape(f)) is not None:
        return Classification(
            "second_form", union_reading=True, group_reading=True, witness=shape
        )

    entries = []
    t = 0
    while q**t < f.trunc:
        entries.append(_linear_part(f.coeff(q**t), q))
        t += 1
    carlitz = LinearSeq(f.ring, q, tuple(entries))
    inverse = gen_function(carlitz_sequence(-carlitz, f.trunc))
    residual = dp_mul(f, inverse)
    if _second_shape(residual) is not None or residual == 1:
        logger.debug("Quotient by %s has the second shape.", carlitz.entries)
        return Classification(
            "carlitz_quotient_heuristic",
            union_reading=False,
            group_reading=True,
            residual=residual,
            witness=carlitz,
        )
    return Classification(
        "unresolved",
        union_reading=False,
        group_reading=False,
        residual=residual,
        witness=carlitz,
    )
