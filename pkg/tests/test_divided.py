import random

import pytest

from lucas_umbral.algebra.field import FieldCtx, field
from lucas_umbral.algebra.parse import ParseError
from lucas_umbral.algebra.poly import PolyRing
from lucas_umbral.divided import (
    DividedElem,
    dp_apply,
    dp_inverse,
    dp_mul,
    dp_pow,
    dp_product,
)


def _random_unit(ring: PolyRing, trunc: int, rng: random.Random) -> DividedElem:
    base = ring.base
    coeffs = {0: ring.one}
    for i in range(1, trunc):
        coeffs[i] = ring.from_coefficients(base.random(rng) for _ in range(3))
    return DividedElem(ring, trunc, coeffs)


def test_symbol_products(x2: PolyRing, x3: PolyRing) -> None:
    d1 = DividedElem.monomial(x2, 8, 1)
    assert d1 * d1 == 0
    d1 = DividedElem.monomial(x3, 8, 1)
    assert d1 * d1 == DividedElem.monomial(x3, 8, 2, 2)
    assert d1 * d1 * d1 == 0
    d2 = DividedElem.monomial(x3, 8, 2)
    assert d1 * d2 == DividedElem.monomial(x3, 8, 3, 3) == 0


def test_products_truncate_at_the_smaller_window(x2: PolyRing) -> None:
    f = DividedElem.monomial(x2, 8, 2) + 1
    g = DividedElem.monomial(x2, 4, 1) + 1
    product = dp_mul(f, g)
    assert product.trunc == 4
    assert product.coefficients() == [1, 1, 1, 1]


@pytest.mark.parametrize("p", [2, 3])
def test_ring_axioms(p: int, rng: random.Random) -> None:
    ring = PolyRing(field(p), "x")
    unit = DividedElem.unit(ring, 32)
    for _ in range(200):
        f, g, h = (_random_unit(ring, 32, rng) for _ in range(3))
        assert f * g == g * f
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
        assert f * unit == f


@pytest.mark.parametrize("p", [2, 3])
def test_power_and_inverse(p: int, rng: random.Random) -> None:
    ring = PolyRing(field(p), "x")
    for _ in range(50):
        f = _random_unit(ring, 32, rng)
        inverse = dp_inverse(f)
        assert f * inverse == 1
        assert dp_pow(f, 0) == 1
        assert dp_pow(f, p) == 1
        assert inverse == dp_pow(f, p - 1)


def test_inverse_requires_unit_constant(x2: PolyRing) -> None:
    f = DividedElem.monomial(x2, 4, 1)
    with pytest.raises(
        ValueError,
        match=r"^Only elements with constant coefficient 1 are invertible, got 0\.$",
    ):
        dp_inverse(f)
    with pytest.raises(ValueError, match=r"^Exponent -1 must be nonnegative; use dp_inverse\.$"):
        dp_pow(f, -1)


def test_comparison(x2: PolyRing) -> None:
    f = DividedElem.from_coefficients(x2, [1, x2.x, 0, x2.x**2])
    g = DividedElem.from_coefficients(x2, [1, x2.x])
    cmp = f.compare(g)
    assert cmp.equal
    assert cmp.window == 2
    h = DividedElem.from_coefficients(x2, [1, x2.x, 1])
    cmp = f.compare(h)
    assert not cmp.equal
    assert cmp.index == 2
    with pytest.raises(TypeError, match="unhashable"):
        hash(f)


def test_ring_mismatch(x2: PolyRing, x3: PolyRing) -> None:
    with pytest.raises(TypeError, match=r"^Ring mismatch: Fq\[x\] and Fq\[x\]\.$"):
        dp_mul(DividedElem.unit(x2, 2), DividedElem.unit(x3, 2))


def test_accessors(x2: PolyRing) -> None:
    f = DividedElem(x2, 6, {0: 1, 3: x2.x, 4: 0})
    assert list(f.terms()) == [(0, 1), (3, x2.x)]
    assert f.lowest_index() == 0
    assert (f - 1).lowest_index() == 3
    assert f.truncate(3) == 1
    assert f.truncate(3).trunc == 3
    with pytest.raises(ValueError, match=r"^Coefficient 6 is unknown at truncation 6\.$"):
        f.coeff(6)
    with pytest.raises(ValueError, match=r"^Cannot extend truncation 6 to 7\.$"):
        f.truncate(7)
    with pytest.raises(ValueError, match=r"^Index 6 lies outside the window \[0, 6\)\.$"):
        DividedElem(x2, 6, {6: 1})
    with pytest.raises(ValueError, match=r"^Truncation order must be at least 1, got 0\.$"):
        DividedElem(x2, 0, {})


def test_printing(x2: PolyRing) -> None:
    f = DividedElem(x2, 5, {0: 1, 1: x2.x, 3: x2.x**2 + 1})
    assert str(f) == "1 + x*D_1 + (x^2+1)*D_3 + O(D_5)"
    assert str(DividedElem(x2, 3, {2: 1})) == "D_2 + O(D_3)"


def test_text_round_trip(f2: FieldCtx) -> None:
    ax = PolyRing(PolyRing(f2, "th"), "x")
    f = DividedElem(ax, 9, {0: 1, 1: ax.parse("x^2 + th*x"), 8: ax.parse("th^3")})
    text = f.to_text()
    assert text == "trunc=9 ring=A[x]\n0: 1\n1: x^2 + th*x\n8: th^3\n"
    g = DividedElem.from_text(text, f2)
    assert g == f
    assert g.trunc == 9
    assert g.to_text() == text


@pytest.mark.parametrize(
    ("text", "message"),
    [
        ("0: 1\n", r"^Divided element files start with 'trunc=<N> ring=<tag>'\.$"),
        ("trunc=2 ring=Fq[x]\n0 1\n", r"^Expected '<index>: <coefficient>', got '0 1'\.$"),
        ("trunc=2 ring=Fq[x]\n0: 1\n0: x\n", r"^Index 0 is repeated or outside \[0, 2\)\.$"),
        ("trunc=2 ring=Fq[x]\n5: 1\n", r"^Index 5 is repeated or outside \[0, 2\)\.$"),
        ("trunc=2 ring=Q\n", r"^Unknown ring tag 'Q'\.$"),
    ],
)
def test_malformed_text(text: str, message: str, f2: FieldCtx) -> None:
    with pytest.raises(ParseError, match=message):
        DividedElem.from_text(text, f2)


def test_dp_apply(x3: PolyRing) -> None:
    x = x3.x
    assert dp_apply(1, x**3) == 0
    assert dp_apply(2, x**4) == 0
    assert dp_apply(3, x**4) == x
    assert dp_apply(0, x**2 + 1) == x**2 + 1


def test_dp_product(x2: PolyRing) -> None:
    factors = [DividedElem(x2, 4, {0: 1, 1: x2.x}), DividedElem(x2, 4, {0: 1, 2: x2.x})]
    product = dp_product(factors, x2, 4)
    assert product.coefficients() == [1, x2.x, x2.x, x2.x**2]
    assert dp_product([], x2, 4) == 1
