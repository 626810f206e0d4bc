import pytest

import families

# Pass/fail lines collected by the acceptance module.  Printed as a summary
# section so they survive pytest's fd-level output capture.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def ex26():
    return families.ex26()


@pytest.fixture
def e29():
    return families.e29()


@pytest.fixture
def f29():
    return families.f29()


@pytest.fixture
def triv():
    return families.triv()


@pytest.fixture
def ex33():
    return families.ex33()


@pytest.fixture
def ex36():
    return families.ex36()
