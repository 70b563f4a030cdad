import sys

import pytest

from finsert import FiniteFunction, PointSet, Topology, named_space


def ps(n, *points):
    return PointSet.of(n, points)


def fn(*values):
    return FiniteFunction(values)


@pytest.fixture
def sierpinski():
    return named_space("sierpinski", 2)


@pytest.fixture
def non_ed():
    """Opens {}, {0}, {1}, {0,1}, X: normal but not extremally disconnected."""
    return Topology.from_opens(3, [[], [0], [1], [0, 1], [0, 1, 2]])


@pytest.fixture
def non_normal():
    """Opens {}, {0}, {0,1}, {0,2}, X."""
    return Topology.from_opens(3, [[], [0], [0, 1], [0, 2], [0, 1, 2]])


@pytest.fixture
def chain3():
    return named_space("chain", 3)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "VERDICTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
