from itertools import combinations

import pytest
from hypothesis import strategies as st

from otg import OrientedGraph, dtg_build

# Vertex order follows the figure's node listing: T, T, I, B, B, I, I.
DISPLIT_EXAMPLE_ARCS = [
    (0, 3), (0, 4), (1, 4), (0, 1), (1, 2), (1, 3), (2, 3),
    (3, 4), (0, 6), (0, 5), (1, 5), (5, 4), (0, 2), (2, 4),
]  # fmt: skip


@pytest.fixture
def dtg1():
    return dtg_build("+-0-*")


@pytest.fixture
def displit_example():
    return OrientedGraph(7, frozenset(DISPLIT_EXAMPLE_ARCS))


@st.composite
def oriented_graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    arcs = []
    for u, v in combinations(range(n), 2):
        choice = draw(st.integers(0, 2))
        if choice == 1:
            arcs.append((u, v))
        elif choice == 2:
            arcs.append((v, u))
    return OrientedGraph(n, frozenset(arcs))


# -- acceptance summary ------------------------------------------------------

_criteria: dict[str, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    if call.when == "call" or (call.when == "setup" and call.excinfo is not None):
        status = "PASS" if call.excinfo is None else "FAIL"
        previous = _criteria.get(number)
        if previous is None or previous[1] == "PASS":
            _criteria[number] = (title, status)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria, key=int):
        title, status = _criteria[number]
        terminalreporter.write_line(f"[{status}] criterion {number}: {title}")
