import sys
from pathlib import Path

import pytest

HERE = Path(__file__).parent
sys.path.insert(0, str(HERE))

ACCEPTANCE_LINES = []


@pytest.fixture
def corpus():
    from superinterval import read_matrix

    return lambda name: read_matrix(HERE / "corpus" / f"{name}.mat")


@pytest.fixture
def carrier_file():
    from superinterval.carrierfile import read_carrier

    return lambda name: read_carrier(HERE / "carriers" / f"{name}.toml")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
