import math

import pytest
from hypothesis import strategies as st

from qwell_engine import UnitSystem, WellState

PI2 = math.pi**2


@pytest.fixture
def natural():
    return UnitSystem.natural()


@st.composite
def well_states(draw, max_level=6, min_width=0.1, max_width=10.0):
    """Random normalized states over the lowest ``max_level`` levels."""
    k = draw(st.integers(1, max_level))
    raw = draw(st.lists(st.floats(0.0, 1.0), min_size=k, max_size=k))
    if sum(raw) == 0.0:
        raw[0] = 1.0
    total = math.fsum(raw)
    occ = [p / total for p in raw]
    occ[-1] = max(0.0, 1.0 - math.fsum(occ[:-1]))
    width = draw(st.floats(min_width, max_width))
    return WellState(width, tuple(occ))


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            if getattr(rep, "when", "call") != "call" and outcome != "error":
                continue
            if "test_acceptance.py" in rep.nodeid:
                lines.append((rep.nodeid.split("::")[-1], outcome))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, outcome in sorted(lines):
            terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
