import pytest

from lucas_umbral.actions import DigitPerm
from lucas_umbral.algebra.field import FieldCtx
from lucas_umbral.algebra.parse import ParseError
from lucas_umbral.algebra.poly import PolyRing
from lucas_umbral.carlitz import is_in_carlitz_image
from lucas_umbral.second import (
    NullSeq,
    build_second,
    build_second_product,
    enumerate_null_sequences,
    is_null_sequence,
)
from lucas_umbral.sequence import check_binomial, check_multiplicative, sequence_of


def test_power_family() -> None:
    assert NullSeq.power_family(2, 3).indices == (1, 3, 7)
    assert NullSeq.power_family(3, 2).indices == (2, 8)
    assert NullSeq.power_family(5, 2).indices == (4, 24)


def test_null_check() -> None:
    assert is_null_sequence([1, 3, 7], 2).ok
    check = is_null_sequence([1, 2], 2)
    assert not check.ok
    assert check.pair == (1, 2)
    assert not is_null_sequence([1], 3).ok
    assert is_null_sequence([], 2).ok


@pytest.mark.parametrize(
    ("indices", "message"),
    [
        ((1, 2), r"^D_1 \* D_2 = 1 D_3 is nonzero\.$"),
        ((3, 1), r"^Indices must be strictly increasing, got \[3, 1\]\.$"),
        ((0, 1), r"^Indices must be positive, got \[0, 1\]\.$"),
    ],
)
def test_invalid_null_sequences(indices: tuple[int, ...], message: str) -> None:
    with pytest.raises(ValueError, match=message):
        NullSeq(2, indices)


def test_second_construction(x2: PolyRing) -> None:
    x = x2.x
    null = NullSeq.power_family(2, 3)
    entries = [x, x**2, x**4]
    f = build_second(null, entries)
    assert f.trunc == 8
    assert f.coefficients() == [1, x, 0, x**2, 0, 0, 0, x**4]
    assert f == build_second_product(null, entries)
    assert check_multiplicative(f).status == "pass"
    assert check_binomial(sequence_of(f)).status == "pass"


@pytest.mark.parametrize("q_field", ["f2", "f4"])
def test_outside_the_carlitz_image(q_field: str, request: pytest.FixtureRequest) -> None:
    fld: FieldCtx = request.getfixturevalue(q_field)
    ring = PolyRing(fld, "x")
    x = ring.x
    f = build_second(NullSeq.power_family(2, 3), [x, x**2, x**4], trunc=16)
    assert check_multiplicative(f).status == "pass"
    report = is_in_carlitz_image(f, fld.q)
    assert not report.member


def test_product_matches_sum_for_other_characteristics(x3: PolyRing) -> None:
    x = x3.x
    null = NullSeq.power_family(3, 2)
    entries = [2 * x, x**3 + x]
    f = build_second(null, entries, trunc=12)
    assert f == build_second_product(null, entries, trunc=12)
    assert check_multiplicative(f).status == "pass"


def test_build_errors(x2: PolyRing) -> None:
    x = x2.x
    null = NullSeq.power_family(2, 3)
    with pytest.raises(ValueError, match=r"^Got 1 entries for 3 indices\.$"):
        build_second(null, [x])
    with pytest.raises(ValueError, match=r"^Entry 1 = x\^3 is not additive\.$"):
        build_second(null, [x, x**3, x**4])
    with pytest.raises(ValueError, match=r"^Truncation 5 cuts off index 7\.$"):
        build_second(null, [x, x, x], trunc=5)
    with pytest.raises(ValueError, match=r"^A ring is required when there are no entries\.$"):
        build_second(NullSeq(2, ()), [])
    assert build_second(NullSeq(2, ()), [], ring=x2) == 1


def test_enumerate_null_sequences() -> None:
    found = [x.indices for x in enumerate_null_sequences(2, 4)]
    assert found == [(1, 3), (2, 3)]
    found = [x.indices for x in enumerate_null_sequences(3, 9)]
    assert found == [(2, 5, 7, 8), (5, 6, 7, 8)]
    assert [x.indices for x in enumerate_null_sequences(2, 4, limit=1)] == [(1, 3)]


def test_enumerated_sequences_are_maximal() -> None:
    for x in enumerate_null_sequences(2, 16, limit=20):
        for i in range(1, 16):
            if i not in x.indices:
                assert not is_null_sequence(sorted([*x.indices, i]), 2).ok


def test_transport(x2: PolyRing) -> None:
    perm = DigitPerm.swap(2, 3, 0, 2)
    null = NullSeq.power_family(2, 3)
    moved = null.transport(perm)
    assert moved.indices == (4, 6, 7)
    entries = [x2.x, x2.x**2, x2.x**4]
    assert null.transport_entries(perm, entries) == entries
    with pytest.raises(ValueError, match=r"^Index 8 lies outside the window \[0, 3\)\.$"):
        NullSeq.power_family(3, 2).transport(DigitPerm.identity(3, 1))


def test_text_round_trip() -> None:
    null = NullSeq(3, (2, 8))
    assert null.to_text() == "p=3\n2,8\n"
    assert NullSeq.from_text(null.to_text()) == null


@pytest.mark.parametrize(
    ("text", "error", "message"),
    [
        ("2,8\n", ParseError, r"^Null sequence files start with 'p=<p>'\.$"),
        ("p=2\n1,a\n", ParseError, r"^Expected comma-separated integers, got '1,a'\.$"),
        ("p=2\n1,2\n", ValueError, r"^D_1 \* D_2 = 1 D_3 is nonzero\.$"),
    ],
)
def test_malformed_text(text: str, error: type[Exception], message: str) -> None:
    with pytest.raises(error, match=message):
        NullSeq.from_text(text)
