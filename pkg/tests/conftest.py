import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oracles import system  # noqa: E402


@pytest.fixture(scope="session")
def A2():
    return system("A2")


@pytest.fixture(scope="session")
def At1():
    return system("A~1")


@pytest.fixture(scope="session")
def At2():
    return system("A~2")


@pytest.fixture(scope="session")
def Ct2():
    return system("C~2")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
