import pytest

from distext.enumerate import all_graphs, enumerate_connected, enumerate_connected_balanced_bipartite

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def connected_by_order():
    return {n: list(enumerate_connected(n)) for n in range(1, 9)}


@pytest.fixture(scope="session")
def graphs_by_order():
    return {n: list(all_graphs(n)) for n in range(0, 8)}


@pytest.fixture(scope="session")
def balanced_bipartite_by_order():
    return {n: list(enumerate_connected_balanced_bipartite(n)) for n in (2, 4, 6, 8, 10)}
