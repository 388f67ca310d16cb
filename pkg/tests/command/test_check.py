from collections.abc import Callable
from pathlib import Path

import pytest
from click.testing import CliRunner

from lucas_umbral.cli import main


def test_cli_check_digit_sum(gen_file: Callable[..., str]) -> None:
    path = gen_file("digitsum", "--q", "2", "--N", "8")
    runner = CliRunner()
    result = runner.invoke(main, ["check", path, "--structural"])
    assert result.exit_code == 0
    assert result.output == "binomial: pass up to N=8\nstructural: pass\n"


def test_cli_check_mutated_sequence(
    write_file: Callable[[str, str], str],
    caplog: pytest.LogCaptureFixture,
) -> None:
    path = write_file("bad.seq", "N=4 ring=Fq[x]\n1\nx\nx^2\nx^2\n")
    runner = CliRunner()
    result = runner.invoke(main, ["check", path])
    assert result.exit_code == 1
    assert result.output.startswith("binomial: fail at n=3, witness x^2*y")
    assert "Binomial identity fails at n=3." in caplog.text


def test_cli_check_structural_failure(write_file: Callable[[str, str], str]) -> None:
    path = write_file("squares.seq", "N=2 ring=Fq[x]\n1\nx^2\n")
    runner = CliRunner()
    result = runner.invoke(main, ["check", path, "--structural", "--p", "3"])
    assert result.exit_code == 1
    assert "structural: entries [1] are not additive" in result.output


def test_cli_check_trivial(write_file: Callable[[str, str], str]) -> None:
    path = write_file("zero.seq", "N=3 ring=Fq[x]\n0\n0\n0\n")
    runner = CliRunner()
    result = runner.invoke(main, ["check", path])
    assert result.exit_code == 0
    assert result.output == "binomial: trivial (all-zero) up to N=3\n"


def test_cli_check_divided(gen_file: Callable[..., str]) -> None:
    path = gen_file("monomials", "--N", "8", "--divided")
    runner = CliRunner()
    result = runner.invoke(main, ["check", path, "--carlitz", "2", "--classify", "2"])
    assert result.exit_code == 0
    assert result.output == (
        "multiplicative: pass up to N=8\n"
        "carlitz: in the Carlitz 2-image up to trunc=8\n"
        "classification: carlitz_image (union=True, group=True)\n"
    )


def test_cli_check_second_construction(gen_file: Callable[..., str]) -> None:
    path = gen_file(
        "second",
        "--indices",
        "1,3,7",
        "--entry",
        "x",
        "--entry",
        "x^2",
        "--entry",
        "x^4",
        "--divided",
    )
    runner = CliRunner()
    result = runner.invoke(main, ["check", path, "--carlitz", "2", "--classify", "2"])
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[0] == "multiplicative: pass up to N=8"
    assert lines[1].startswith("carlitz: not in the Carlitz 2-image (index 3: ")
    assert lines[2] == "classification: second_form (union=True, group=True)"


def test_cli_check_non_multiplicative(
    write_file: Callable[[str, str], str],
    caplog: pytest.LogCaptureFixture,
) -> None:
    path = write_file("bad.dp", "trunc=2 ring=Fq[x]\n0: 1\n1: x^3\n")
    runner = CliRunner()
    result = runner.invoke(main, ["check", path, "--classify", "2"])
    assert result.exit_code == 1
    assert result.output.startswith("multiplicative: fail at n=1")
    assert "classification" not in result.output
    assert "Multiplicativity fails at index 1." in caplog.text


@pytest.mark.parametrize(
    "text",
    [
        "p=2\n1,3\n",
        "hello\n",
        "N=2 ring=Fq[x]\n1\n",
        "trunc=2 ring=Fq[x]\n0: z\n",
    ],
)
def test_cli_check_rejects_input(text: str, write_file: Callable[[str, str], str]) -> None:
    path = write_file("input.txt", text)
    runner = CliRunner()
    result = runner.invoke(main, ["check", path])
    assert result.exit_code == 2


def test_cli_check_missing_file(tmp_path: Path) -> None:
    runner = CliRunner()
    result = runner.invoke(main, ["check", str(tmp_path / "missing.seq")])
    assert result.exit_code == 2


def test_cli_check_dirac_output(tmp_path: Path) -> None:
    path = tmp_path / "dirac.dp"
    runner = CliRunner()
    result = runner.invoke(main, ["dirac", "th", "--output", str(path)])
    assert result.exit_code == 0
    assert path.read_text(encoding="utf-8").startswith("trunc=8 ring=A\n")
    result = runner.invoke(main, ["check", str(path)])
    assert result.exit_code == 2
    assert not isinstance(result.exception, TypeError)


def test_cli_check_constant_coefficients(write_file: Callable[[str, str], str]) -> None:
    path = write_file("constants.dp", "trunc=2 ring=Fq\n0: 1\n1: 1\n")
    runner = CliRunner()
    result = runner.invoke(main, ["check", path])
    assert result.exit_code == 2
