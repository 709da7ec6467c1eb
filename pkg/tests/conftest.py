import json
import os

import pytest

# keep test runs out of the rotating log file
os.environ.setdefault("LOG_TO_FILE", "False")

from Butterfly.__main__ import main
from Butterfly.core.fixtures import EXCEPTIONAL_N3, EXCEPTIONAL_N4
from Butterfly.core.subsets import Family


@pytest.fixture
def exceptional_n3() -> Family:
    return EXCEPTIONAL_N3


@pytest.fixture
def exceptional_n4() -> Family:
    return EXCEPTIONAL_N4


@pytest.fixture
def chain_n3() -> Family:
    # ∅ ⊂ {1} ⊂ {1,2} ⊂ {1,2,3}
    return Family.from_sets(3, [[], [1], [1, 2], [1, 2, 3]])


@pytest.fixture
def family_file(tmp_path):
    def write(text: str, name: str = "family.txt") -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)
    return write


@pytest.fixture
def run_cli(capsys):
    """Run the CLI with --json and return (exit_code, report)."""
    def run(*argv: str):
        code = main([*argv, "--json", "--threads", "1"])
        out = capsys.readouterr().out
        return code, json.loads(out)
    return run

