import pytest

from rudin_shapiro.core import generate

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def pairs():
    return {k: generate(k) for k in range(0, 13)}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
