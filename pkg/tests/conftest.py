import pytest

from spsdiagram.construction import fork_extend, grid

# ids produced by fork_extend(grid(2, 2), 0)
S7 = dict(o=0, d=1, c=2, i=3, a=4, b=5, t=6)
# second fork at the cell {o, a, b, t} of S7
L3_T2 = 9

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def s7():
    return fork_extend(grid(2, 2), 0).diagram


@pytest.fixture(scope="session")
def l3(s7):
    return fork_extend(s7, 0).diagram


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
