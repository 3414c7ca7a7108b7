import pytest

from pcyclic.cyclotomic import build_cosets
from pcyclic.ext_field import make_field

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def gf125():
    f = make_field(5, 3)
    return f, build_cosets(5, f.n)


@pytest.fixture(scope="session")
def gf16807():
    f = make_field(7, 5)
    return f, build_cosets(7, f.n)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
