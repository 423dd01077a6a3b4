import pytest

from flagdeform.rootsys import build
from flagdeform.schubert import full_table
from flagdeform.weyl import ParabolicData

ACCEPTANCE_LINES: list[str] = []


def table_for(type_str, assoc=None):
    rs = build(type_str)
    pd = ParabolicData.borel(rs.rank) if assoc is None else ParabolicData.from_assoc(rs.rank, assoc)
    return full_table(rs, pd)


@pytest.fixture(scope="session")
def a3_gb():
    return table_for("A3")


@pytest.fixture(scope="session")
def b3_gb():
    return table_for("B3")


@pytest.fixture(scope="session")
def b3_12():
    return table_for("B3", [1, 2])


@pytest.fixture(scope="session")
def b4_24():
    return table_for("B4", [2, 4])


@pytest.fixture(scope="session")
def b4_gb():
    return table_for("B4")


@pytest.fixture(scope="session")
def c6_4():
    return table_for("C6", [4])


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
