import pytest

from ldegeom import Instance, Solution


@pytest.fixture
def ex_inst():
    return Instance((6,), (2, 3, 5))


@pytest.fixture
def ex_sol():
    return Solution((2,), (2, 1, 1))


def pytest_terminal_summary(terminalreporter):
    import helpers

    if helpers.ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for number in sorted(helpers.ACCEPTANCE):
            terminalreporter.write_line(helpers.ACCEPTANCE[number])
