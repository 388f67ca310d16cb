import pytest

from lucas_umbral.algebra.bipoly import BiPolyRing
from lucas_umbral.algebra.field import FieldCtx
from lucas_umbral.algebra.frac import FracField
from lucas_umbral.algebra.parse import ParseError, parse_element, ring_from_tag
from lucas_umbral.algebra.poly import PolyRing


@pytest.mark.parametrize(
    "text",
    [
        "x^3 + x",
        "x^4 + x^2 + 1",
        "x",
        "1",
        "0",
    ],
)
def test_canonical_text_round_trips(text: str, x2: PolyRing) -> None:
    assert str(parse_element(text, x2)) == text


def test_grammar(x3: PolyRing) -> None:
    x = x3.x
    assert parse_element("-x + 1", x3) == 2 * x + 1
    assert parse_element("(x + 1)^3", x3) == x**3 + 1
    assert parse_element("x*x - x^2", x3) == 0
    assert parse_element("4*x", x3) == x
    assert parse_element("x / 2", x3) == 2 * x


def test_names_resolve_through_the_tower(f4: FieldCtx) -> None:
    ax = PolyRing(PolyRing(f4, "th"), "x")
    f = parse_element("u*th*x + th^2", ax)
    assert str(f) == "(u*th)*x + th^2"
    assert parse_element(str(f), ax) == f


@pytest.mark.parametrize(
    ("text", "message"),
    [
        ("x +", r"^Unexpected end of input in 'x \+'\.$"),
        ("x $ 1", r"^Unexpected character '\$' at 1 in 'x \$ 1'\.$"),
        ("z", r"^Unknown variable 'z' at 0 in 'z'\.$"),
        ("x^x", r"^Expected an integer exponent at 2 in 'x\^x'\.$"),
        ("(x", r"^Unexpected end of input in '\(x'\.$"),
        ("x 1", r"^Trailing input '1' at 2 in 'x 1'\.$"),
        ("", r"^Empty expression\.$"),
        ("1/x", r"^Cannot divide at 1 in '1/x': x is not invertible in Fq\[x\]\.$"),
    ],
)
def test_parse_errors(text: str, message: str, x2: PolyRing) -> None:
    with pytest.raises(ParseError, match=message):
        parse_element(text, x2)


def test_ring_from_tag(f2: FieldCtx) -> None:
    a = PolyRing(f2, "th")
    assert ring_from_tag("Fq", f2) == f2
    assert ring_from_tag("A", f2) == a
    assert ring_from_tag("Fq[x]", f2) == PolyRing(f2, "x")
    assert ring_from_tag("A[x]", f2) == PolyRing(a, "x")
    assert ring_from_tag("Frac(A)", f2) == FracField(a)
    assert ring_from_tag("Frac(A)[x]", f2) == PolyRing(FracField(a), "x")
    assert ring_from_tag("Fq[x,y]", f2) == BiPolyRing(f2)
    assert ring_from_tag("A[t]", f2) == PolyRing(a, "t")


def test_ring_tags_round_trip(f2: FieldCtx) -> None:
    a = PolyRing(f2, "th")
    for ring in (f2, a, PolyRing(a, "x"), FracField(a), PolyRing(FracField(a), "x"), BiPolyRing(f2)):
        assert ring_from_tag(ring.tag, f2) == ring


def test_unknown_tag(f2: FieldCtx) -> None:
    with pytest.raises(ParseError, match=r"^Unknown ring tag 'Z'\.$"):
        ring_from_tag("Z", f2)
