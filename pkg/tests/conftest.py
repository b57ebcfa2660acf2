import pytest

from pairbot.algorithms import get_algorithm


@pytest.fixture
def marching():
    return get_algorithm("marching")


@pytest.fixture
def coating():
    return get_algorithm("coating")


def pytest_terminal_summary(terminalreporter):
    import gate
    if gate.RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(gate.RESULTS):
            terminalreporter.write_line(gate.RESULTS[n])
