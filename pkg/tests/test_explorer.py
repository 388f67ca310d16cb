import itertools
import logging
from concurrent.futures import ThreadPoolExecutor

import pytest
import pytest_mock

from lucas_umbral.algebra.field import FieldCtx, field
from lucas_umbral.algebra.poly import Poly, PolyRing
from lucas_umbral.carlitz import LinearSeq, carlitz_sequence
from lucas_umbral.divided import DividedElem
from lucas_umbral.explorer import (
    Explorer,
    PrefixState,
    _walk_branch,
    classify,
    enumerate_sequences,
    extend_step,
)
from lucas_umbral.second import NullSeq, build_second
from lucas_umbral.sequence import PolySeq, builtin, check_binomial, gen_function


def _all_polys(ring: PolyRing, degree: int) -> list[Poly]:
    p = ring.characteristic
    return [ring.from_coefficients(c) for c in itertools.product(range(p), repeat=degree + 1)]


def _brute_force(p: int, n: int, degree: int) -> set[tuple[str, ...]]:
    ring = PolyRing(field(p), "x")
    found = set()
    for rest in itertools.product(_all_polys(ring, degree), repeat=n - 1):
        seq = PolySeq(ring, (ring.one, *rest))
        if check_binomial(seq).status == "pass":
            found.add(tuple(map(str, seq.entries)))
    return found


################################################################################
## Single steps
################################################################################


def test_step_without_constraint(x2: PolyRing) -> None:
    x = x2.x
    step = extend_step(PrefixState(PolySeq(x2, (1, x)), 2))
    assert step is not None
    assert step.particular == 0
    assert step.kernel == (x, x**2)
    assert list(step.candidates()) == [0, x**2, x, x**2 + x]


def test_step_with_inhomogeneous_term(x2: PolyRing) -> None:
    x = x2.x
    step = extend_step(PrefixState(PolySeq(x2, (1, x, x**2)), 3))
    assert step is not None
    assert step.particular == x**3
    assert step.kernel == (x, x**2)
    step = extend_step(PrefixState(PolySeq(x2, (1, x, 0)), 3))
    assert step is not None
    assert step.particular == 0
    assert step.kernel == (x, x**2)


def test_inconsistent_step(x2: PolyRing) -> None:
    x = x2.x
    assert extend_step(PrefixState(PolySeq(x2, (1, x, x**2)), 2)) is None


def test_kernel_is_additive(x3: PolyRing) -> None:
    step = extend_step(PrefixState(PolySeq(x3, (1, x3.x, x3.x**2)), 9))
    assert step is not None
    assert step.kernel == (x3.x, x3.x**3, x3.x**9)


def test_prefix_validation(f4: FieldCtx, x2: PolyRing) -> None:
    with pytest.raises(ValueError, match=r"^Enumeration runs over prime fields only, not Fq\.$"):
        Explorer(f4, 2, 2)
    with pytest.raises(ValueError, match=r"^Degree bound must be at least 1, got 0\.$"):
        PrefixState(PolySeq(x2, (1,)), 0)
    with pytest.raises(ValueError, match=r"^Truncation order must be at least 1, got 0\.$"):
        Explorer(field(2), 0, 2)


################################################################################
## Enumeration
################################################################################


def test_enumerate_smallest_case(x2: PolyRing) -> None:
    x = x2.x
    found = [seq.entries for seq in enumerate_sequences(2, 2, 2)]
    assert found == [(1, 0), (1, x**2), (1, x), (1, x**2 + x)]
    assert [f.kernel_dims for f in Explorer(field(2), 2, 2).walk()] == [(2,)] * 4


@pytest.mark.parametrize(("p", "n", "degree"), [(2, 4, 2), (3, 3, 3), (2, 3, 3)])
def test_enumeration_matches_brute_force(p: int, n: int, degree: int) -> None:
    found = [tuple(map(str, seq.entries)) for seq in enumerate_sequences(p, n, degree)]
    assert len(found) == len(set(found))
    assert set(found) == _brute_force(p, n, degree)


def test_emitted_sequences_pass() -> None:
    for seq in enumerate_sequences(2, 5, 3):
        assert check_binomial(seq).status == "pass"


def test_single_entry() -> None:
    found = list(Explorer(field(3), 1, 2).walk())
    assert len(found) == 1
    assert found[0].sequence.entries == (1,)
    assert found[0].kernel_dims == ()


def test_budget(caplog: pytest.LogCaptureFixture) -> None:
    explorer = Explorer(field(2), 4, 2, budget=3)
    with caplog.at_level(logging.WARNING):
        found = list(explorer.walk())
    assert len(found) == 3
    assert explorer.exhausted
    assert "Budget of 3 sequences exhausted." in caplog.text
    full = list(Explorer(field(2), 4, 2).walk())
    assert [f.sequence for f in found] == [f.sequence for f in full[:3]]
    exact = Explorer(field(2), 4, 2, budget=len(full))
    assert len(list(exact.walk())) == len(full)
    assert not exact.exhausted


def test_parallel_walk_matches_serial() -> None:
    serial = list(Explorer(field(2), 4, 2).walk())
    parallel = list(Explorer(field(2), 4, 2, workers=2).walk())
    assert parallel == serial
    capped = Explorer(field(2), 4, 2, budget=5, workers=2)
    assert [f.sequence for f in capped.walk()] == [f.sequence for f in serial[:5]]
    assert capped.exhausted


def test_parallel_walk_passes_the_remaining_budget(mocker: pytest_mock.MockerFixture) -> None:
    mocker.patch("lucas_umbral.explorer.ProcessPoolExecutor", ThreadPoolExecutor)
    branch = mocker.patch("lucas_umbral.explorer._walk_branch", wraps=_walk_branch)
    serial = list(Explorer(field(2), 4, 2).walk())
    capped = Explorer(field(2), 4, 2, budget=2, workers=2)
    assert [f.sequence for f in capped.walk()] == [f.sequence for f in serial[:2]]
    caps = [c.args[0][3] for c in branch.call_args_list]
    assert caps[0] == 3
    assert caps == sorted(caps, reverse=True)
    assert len(caps) <= 4


################################################################################
## Classification
################################################################################


def test_classify_carlitz(x2: PolyRing) -> None:
    x = x2.x
    f = gen_function(carlitz_sequence(LinearSeq(x2, 2, (x, x**2 + x)), 8))
    result = classify(f)
    assert result.kind == "carlitz_image"
    assert result.union_reading
    assert result.group_reading
    assert str(result) == "carlitz_image"


def test_classify_second_form(x2: PolyRing) -> None:
    x = x2.x
    f = build_second(NullSeq.power_family(2, 3), [x, x**2, x**4])
    result = classify(f)
    assert result.kind == "second_form"
    assert result.union_reading
    assert result.witness == NullSeq(2, (1, 3, 7))


def test_classify_product(x2: PolyRing) -> None:
    x = x2.x
    carlitz = gen_function(carlitz_sequence(LinearSeq(x2, 2, (x**2, x, x**4)), 8))
    second = build_second(NullSeq.power_family(2, 3), [x, x**2, x**4])
    result = classify(carlitz * second)
    assert result.kind == "carlitz_quotient_heuristic"
    assert not result.union_reading
    assert result.group_reading
    assert result.residual == build_second(NullSeq(2, (3, 7)), [x**2, x**4])


def test_classify_pochhammer(x3: PolyRing) -> None:
    f = gen_function(builtin("pochhammer", x3.base, 4))
    result = classify(f)
    assert result.kind == "carlitz_quotient_heuristic"
    assert result.residual == DividedElem(x3, 4, {0: 1, 2: 2 * x3.x})


def test_classify_unresolved(x2: PolyRing) -> None:
    x = x2.x
    f = DividedElem(x2, 4, {0: 1, 1: x**2}) * DividedElem(x2, 4, {0: 1, 2: x**2})
    assert f.coefficients() == [1, x**2, x**2, x**4]
    result = classify(f, q=4)
    assert result.kind == "unresolved"
    assert not result.union_reading
    assert not result.group_reading
    assert result.residual == f
    assert classify(f).kind == "carlitz_image"


def test_classify_rejects_non_multiplicative(x2: PolyRing) -> None:
    f = DividedElem.from_coefficients(x2, [1, x2.x**3])
    with pytest.raises(ValueError, match=r"^Only multiplicative elements are classified: fail at n=1"):
        classify(f)
