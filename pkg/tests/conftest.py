import pytest

from chopped.construction import build_chopped
from chopped.corpus import NAMED, corpus
from chopped.vectors import parse_vector

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def named():
    return NAMED


@pytest.fixture
def V():
    return build_chopped(NAMED["V"])


@pytest.fixture
def chain3():
    return build_chopped(NAMED["3-chain"])


@pytest.fixture
def chain2():
    return build_chopped(NAMED["2-chain"])


@pytest.fixture(scope="session")
def full_corpus():
    return corpus()


@pytest.fixture
def vec():
    return parse_vector


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
