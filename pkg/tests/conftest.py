import pytest

from mealygroup import AutomatonGroup, ElementTable, build_automaton
from mealygroup.structure import compute_nucleus

# (criterion number, description, passed, detail) rows from test_acceptance
ACCEPTANCE_LINES: list = []


@pytest.fixture(scope="session")
def pi():
    return AutomatonGroup(build_automaton("paper-Pi"))


@pytest.fixture(scope="session")
def table(pi):
    return ElementTable(pi)


@pytest.fixture(scope="session")
def nucleus(pi, table):
    return compute_nucleus(pi, table=table)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for num, desc, ok, detail in sorted(ACCEPTANCE_LINES):
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {num:2d}: {desc} ({detail})")
