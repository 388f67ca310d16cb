from collections.abc import Callable
from pathlib import Path

import pytest
from click.testing import CliRunner

from lucas_umbral.cli import main


@pytest.fixture
def write_file(tmp_path: Path) -> Callable[[str, str], str]:
    """
    Write text to a file in the temporary directory and return its path.
    """

    def write(name: str, text: str) -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return write


@pytest.fixture
def gen_file(tmp_path: Path) -> Callable[..., str]:
    """
    Run `gen` with the given arguments and return the path it wrote to.
    """
    count = 0

    def gen(*args: str) -> str:
        nonlocal count
        count += 1
        path = tmp_path / f"gen_{count}.txt"
        result = CliRunner().invoke(main, ["gen", *args, "--output", str(path)])
        assert result.exit_code == 0
        return str(path)

    return gen
