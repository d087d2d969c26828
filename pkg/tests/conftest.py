import pytest

from lrbands.constructions import free_lrb, line_arrangement_lrb, path_example
from lrbands.lrbgraph import ThinLrbGraph

# filled by test_acceptance: criterion number -> (passed, summary)
ACCEPTANCE = {}

HEXAGON_EDGES = ((0, 1, 1, 1), (1, 2, 2, 1), (2, 3, 3, 1), (3, 4, 1, 2), (4, 5, 2, 2), (5, 0, 3, 2))


@pytest.fixture(scope="session")
def arrangement():
    return line_arrangement_lrb(3)


@pytest.fixture(scope="session")
def free3():
    return free_lrb(3)


@pytest.fixture(scope="session")
def path6():
    return path_example(6)


@pytest.fixture
def hexagon():
    return ThinLrbGraph(6, HEXAGON_EDGES)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        passed, summary = ACCEPTANCE[k]
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  criterion {k}: {summary}")
