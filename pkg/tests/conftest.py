import random

import pytest

from lucas_umbral.algebra.field import FieldCtx, field
from lucas_umbral.algebra.poly import PolyRing


@pytest.fixture
def f2() -> FieldCtx:
    return field(2)


@pytest.fixture
def f3() -> FieldCtx:
    return field(3)


@pytest.fixture
def f4() -> FieldCtx:
    return field(2, 2)


@pytest.fixture
def x2(f2: FieldCtx) -> PolyRing:
    """
    The ring `F_2[x]`.
    """
    return PolyRing(f2, "x")


@pytest.fixture
def x3(f3: FieldCtx) -> PolyRing:
    """
    The ring `F_3[x]`.
    """
    return PolyRing(f3, "x")


@pytest.fixture
def rng() -> random.Random:
    """
    A seeded random number generator, so that every run draws the same samples.
    """
    return random.Random(20240521)  # noqa: S311
