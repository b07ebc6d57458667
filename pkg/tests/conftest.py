import random

import pytest

from charsimple import catalog


@pytest.fixture(scope="session")
def groups():
    return {name: catalog.load(name) for name in catalog.names()}


@pytest.fixture
def rng():
    return random.Random(12345)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
