import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from handlehom.core import HandleDecomposition, OrientationMode  # noqa: E402


@pytest.fixture
def rp2():
    return HandleDecomposition(
        2,
        (("p",), ("e",), ("f",)),
        {1: {}, 2: {("e", "f"): 2}},
        orientation_mode=OrientationMode.COORIENTED,
    )


@pytest.fixture
def torus():
    return HandleDecomposition(2, (("p",), ("a", "b"), ("f",)))


@pytest.fixture
def klein():
    return HandleDecomposition(
        2,
        (("p",), ("a", "b"), ("f",)),
        {2: {("b", "f"): 2}},
        orientation_mode=OrientationMode.COORIENTED,
    )


@pytest.fixture
def sphere2():
    return HandleDecomposition(2, (("p",), (), ("f",)))


def pytest_terminal_summary(terminalreporter):
    lines = [
        value
        for reports in terminalreporter.stats.values()
        for rep in reports
        if getattr(rep, "when", None) == "call"
        for name, value in getattr(rep, "user_properties", ())
        if name == "acceptance"
    ]
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
