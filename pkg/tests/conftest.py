"""Shared fixtures, hypothesis profile, and the acceptance summary printer."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import settings

from hyperpart import make_config, pentagon_config

# Exact arithmetic has very uneven per-example cost; wall-clock deadlines
# would only add flakes.
settings.register_profile("exact", deadline=None)
settings.load_profile("exact")

ACCEPTANCE_LINES: list[tuple[int, str]] = []


def record_acceptance(number: int, name: str, passed: bool, detail: str = "") -> None:
    status = "PASS" if passed else "FAIL"
    extra = f" — {detail}" if detail else ""
    ACCEPTANCE_LINES.append((number, f"criterion {number:2d} [{name}]: {status}{extra}"))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(line)


@pytest.fixture
def quad():
    """Four points in general position in the plane; |H| = 7."""
    return make_config(2, [(0, 0), (3, Fraction(1, 2)), (1, 2), (-1, 3)])


@pytest.fixture
def pentagon():
    return pentagon_config()


@pytest.fixture
def line():
    """Factory for n collinear points on the number line."""

    def _line(n: int):
        return make_config(1, [(i,) for i in range(n)])

    return _line
