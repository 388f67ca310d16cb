import sys

import pytest
import pytest_mock
from click.testing import CliRunner

from lucas_umbral.carlitz import CarlitzCtx
from lucas_umbral.cli import main


def test_cli_pellarin() -> None:
    runner = CliRunner()
    result = runner.invoke(main, ["pellarin", "th"])
    assert result.exit_code == 0
    assert result.output == "C_a = th + tau\nimage = t\ncheck: pass\n"


def test_cli_pellarin_square() -> None:
    runner = CliRunner()
    result = runner.invoke(main, ["pellarin", "th^2"])
    assert result.exit_code == 0
    assert result.output.splitlines() == [
        "C_a = th^2 + (th^2+th)*tau + tau^2",
        "image = t^2",
        "check: pass",
    ]


@pytest.mark.parametrize("args", [["--samples", "5"], ["--p", "3", "--samples", "3"]])
def test_cli_pellarin_samples(args: list[str]) -> None:
    runner = CliRunner()
    result = runner.invoke(main, ["pellarin", "th+1", *args])
    assert result.exit_code == 0
    assert result.output.endswith("check: pass\n")


def test_cli_pellarin_bad_input() -> None:
    runner = CliRunner()
    result = runner.invoke(main, ["pellarin", "th^"])
    assert result.exit_code == 2


def test_cli_pellarin_failure(
    mocker: pytest_mock.MockerFixture,
    caplog: pytest.LogCaptureFixture,
) -> None:
    def zero(carlitz: CarlitzCtx, _: object) -> object:
        return carlitz.t_ring.zero

    # `lucas_umbral.command.pellarin` the attribute is the click command, so
    # patch the submodule object directly.
    mocker.patch.object(
        sys.modules["lucas_umbral.command.pellarin"], "pellarin_map", side_effect=zero
    )
    runner = CliRunner()
    result = runner.invoke(main, ["pellarin", "th"])
    assert result.exit_code == 1
    assert result.output.endswith("check: fail\n")
    assert "Image of C_th is 0, not t." in caplog.text
