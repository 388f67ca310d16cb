import random

import pytest

from lucas_umbral.actions import (
    CompositeAction,
    DigitPerm,
    DilationAction,
    EvaluationAction,
    FrobeniusAction,
    SigmaAction,
    pi1,
    pi1_inverse,
    pi2,
    pi3,
    pi_endo,
    sigma_star_elem,
    sigma_star_index,
    stability_report,
)
from lucas_umbral.algebra.field import FieldCtx, field
from lucas_umbral.algebra.poly import PolyRing
from lucas_umbral.carlitz import LinearSeq, carlitz_sequence, is_in_carlitz_image
from lucas_umbral.divided import DividedElem
from lucas_umbral.second import NullSeq, build_second
from lucas_umbral.sequence import builtin, check_multiplicative, gen_function


def _carlitz_element(ring: PolyRing, q: int, n: int, rng: random.Random) -> DividedElem:
    return gen_function(carlitz_sequence(LinearSeq.random(ring, q, 4, rng), n))


def _random_elem(ring: PolyRing, trunc: int, rng: random.Random) -> DividedElem:
    base = ring.base
    coeffs = {
        i: ring.from_coefficients(base.random(rng) for _ in range(3)) for i in range(trunc)
    }
    return DividedElem(ring, trunc, coeffs)


################################################################################
## Digit permutations
################################################################################


def test_sigma_star_index() -> None:
    perm = DigitPerm.swap(2, 3, 0, 1)
    assert [sigma_star_index(perm, i) for i in range(8)] == [0, 2, 1, 3, 4, 6, 5, 7]
    perm = DigitPerm.swap(3, 2, 0, 1)
    assert sigma_star_index(perm, 5) == 7
    with pytest.raises(ValueError, match=r"^Index 9 lies outside the window \[0, 9\)\.$"):
        sigma_star_index(perm, 9)


def test_perm_algebra() -> None:
    a = DigitPerm(2, (1, 2, 0))
    assert a.compose(a.inverse()) == DigitPerm.identity(2, 3)
    assert a.compose(a).compose(a) == DigitPerm.identity(2, 3)
    assert str(a) == "0>1,1>2,2>0"
    assert str(DigitPerm.identity(2, 2)) == "id"
    with pytest.raises(ValueError, match=r"^Only permutations with the same base and window compose\.$"):
        a.compose(DigitPerm.identity(2, 2))


@pytest.mark.parametrize(
    ("text", "message"),
    [
        ("0-1", r"^Expected 'i>j' pairs, got '0-1'\.$"),
        ("0>3", r"^Pair '0>3' is repeated or leaves the window 0\.\.2\.$"),
        ("0>1,0>2", r"^Pair '0>2' is repeated or leaves the window 0\.\.2\.$"),
        ("0>1", r"^\[1, 1, 2\] is not a permutation of 0\.\.2\.$"),
    ],
)
def test_parse_errors(text: str, message: str) -> None:
    with pytest.raises(ValueError, match=message):
        DigitPerm.parse(text, 2, 3)


def test_parse() -> None:
    assert DigitPerm.parse("0>1, 1>0", 2, 3) == DigitPerm.swap(2, 3, 0, 1)
    assert DigitPerm.parse("", 3, 2) == DigitPerm.identity(3, 2)
    with pytest.raises(ValueError, match=r"^Digit base 1 must be at least 2\.$"):
        DigitPerm(1, (0,))


@pytest.mark.parametrize(("p", "perm"), [(2, (2, 0, 1, 3)), (3, (1, 2, 0))])
def test_sigma_is_an_automorphism(p: int, perm: tuple[int, ...], rng: random.Random) -> None:
    ring = PolyRing(field(p), "x")
    sigma = DigitPerm(p, perm)
    for _ in range(100):
        f = _random_elem(ring, sigma.size, rng)
        g = _random_elem(ring, sigma.size, rng)
        image_f = sigma_star_elem(sigma, f)
        image_g = sigma_star_elem(sigma, g)
        assert sigma_star_elem(sigma, f * g) == image_f * image_g
        assert sigma_star_elem(sigma, f + g) == image_f + image_g
        assert sigma_star_elem(sigma.inverse(), sigma_star_elem(sigma, f)) == f


def test_sigma_preserves_membership(x2: PolyRing, rng: random.Random) -> None:
    action = SigmaAction(DigitPerm.swap(2, 4, 1, 3))
    for _ in range(100):
        f = _carlitz_element(x2, 2, 16, rng)
        report = stability_report(action, f, q=2)
        assert report.keeps_multiplicativity
        assert report.keeps_membership
        assert report.membership_after is not None
        assert report.membership_after.member


def test_sigma_keeps_the_second_construction_outside(x2: PolyRing) -> None:
    x = x2.x
    null = NullSeq.power_family(2, 4)
    perm = DigitPerm(2, (1, 2, 3, 0))
    entries = [x, x**2, x**4, x**8]
    f = build_second(null, entries, trunc=16)
    image = sigma_star_elem(perm, f)
    moved = null.transport_entries(perm, entries)
    assert image == build_second(null.transport(perm), moved, trunc=16)
    assert check_multiplicative(image).status == "pass"
    assert not is_in_carlitz_image(image, 2).member


def test_sigma_needs_matching_truncation(x2: PolyRing) -> None:
    perm = DigitPerm.identity(2, 3)
    with pytest.raises(
        ValueError, match=r"^Digit permutations of window 3 act at truncation 8, not 4\.$"
    ):
        sigma_star_elem(perm, DividedElem.unit(x2, 4))


################################################################################
## Endomorphisms
################################################################################


def test_pi1(x3: PolyRing, f4: FieldCtx) -> None:
    x = x3.x
    f = DividedElem.from_coefficients(x3, [1, x + 1, 2 * x])
    assert pi1(f).coefficients() == [1, x**3 + 1, 2 * x**3]
    u = f4.gen("u")
    g = DividedElem.from_coefficients(f4, [1, u, u + 1])
    assert pi1(g).coefficients() == [1, u + 1, u]
    assert pi1_inverse(pi1(g)) == g
    with pytest.raises(ValueError, match=r"^pi1 is only inverted over a finite field, not Fq\[x\]\.$"):
        pi1_inverse(f)


def test_pi2_and_pi3(x3: PolyRing) -> None:
    x = x3.x
    f = DividedElem.from_coefficients(x3, [1, x, x**2])
    dilated = pi2(f)
    assert dilated.trunc == 7
    assert dilated.coefficients() == [1, 0, 0, x, 0, 0, x**2]
    scaled = pi3(f, 2)
    assert scaled.coefficients() == [1, 2 * x, x**2]


@pytest.mark.parametrize("kind", ["pi1", "pi2", "pi3"])
@pytest.mark.parametrize("p", [2, 3])
def test_endomorphisms_are_ring_maps(kind: str, p: int, rng: random.Random) -> None:
    ring = PolyRing(field(p), "x")
    for _ in range(100):
        f = _random_elem(ring, 16, rng)
        g = _random_elem(ring, 16, rng)
        assert pi_endo(kind, f * g, r=2) == pi_endo(kind, f, r=2) * pi_endo(kind, g, r=2)
        assert pi_endo(kind, f + g, r=2) == pi_endo(kind, f, r=2) + pi_endo(kind, g, r=2)


@pytest.mark.parametrize("kind", ["pi1", "pi2", "pi3"])
def test_endomorphisms_keep_multiplicativity(kind: str, x3: PolyRing, rng: random.Random) -> None:
    for _ in range(10):
        f = _carlitz_element(x3, 3, 9, rng)
        image = pi_endo(kind, f, r=2)
        assert check_multiplicative(image).status == "pass"
    g = gen_function(builtin("pochhammer", x3.base, 9))
    assert check_multiplicative(pi_endo(kind, g, r=2)).passed


@pytest.mark.parametrize(("p", "lam"), [(2, 2), (3, 2)])
def test_pi1_round_trip(p: int, lam: int, rng: random.Random) -> None:
    fld = field(p, lam)
    for _ in range(20):
        f = DividedElem(fld, 16, {i: fld.random(rng) for i in range(1, 16)}) + 1
        assert pi1_inverse(pi1(f)) == f
        assert pi1(pi1_inverse(f)) == f


def test_pi_endo_errors(x2: PolyRing) -> None:
    f = DividedElem.unit(x2, 2)
    with pytest.raises(ValueError, match=r"^pi3 needs a value for r\.$"):
        pi_endo("pi3", f)
    with pytest.raises(ValueError, match=r"^Unknown endomorphism 'pi4'; choose from pi1, pi2, pi3\.$"):
        pi_endo("pi4", f)


def test_composition(x2: PolyRing) -> None:
    f = gen_function(builtin("monomials", x2.base, 4))
    action = FrobeniusAction().then(DilationAction()).then(EvaluationAction(1))
    assert isinstance(action, CompositeAction)
    assert len(action.steps) == 3
    assert str(action) == "pi1 then pi2 then pi3[r=1]"
    assert action(f) == pi3(pi2(pi1(f)), 1)
    assert FrobeniusAction().power(0)(f) == f
    assert str(FrobeniusAction().power(0)) == "id"
    assert FrobeniusAction().power(2)(f) == pi1(pi1(f))


def test_stability_report_without_q(x2: PolyRing) -> None:
    f = DividedElem.from_coefficients(x2, [1, x2.x**3])
    report = stability_report(DilationAction(), f)
    assert report.multiplicative_before.status == "fail"
    assert report.keeps_multiplicativity
    assert report.keeps_membership is None
