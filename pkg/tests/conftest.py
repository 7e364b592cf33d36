"""Shared fixtures: canonical polygons and the acceptance report hook."""

from fractions import Fraction

import pytest

from ruledpoly import (
    FamilyParams,
    Polygon,
    annulus_polygon,
    comb_polygon,
    is_generic,
    lower_bound_polygon,
)

# acceptance tests append (criterion number, line) here; the terminal
# summary hook prints one line per criterion after the run
CRITERION_LINES: list[tuple[int, str]] = []


def record_criterion(num: int, ok: bool, detail: str) -> None:
    status = "PASS" if ok else "FAIL"
    CRITERION_LINES.append((num, f"criterion {num}: {status} - {detail}"))


def pytest_terminal_summary(terminalreporter):
    if not CRITERION_LINES:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for _, line in sorted(CRITERION_LINES):
        terminalreporter.write_line(line)


@pytest.fixture
def square():
    return Polygon([(0, 0), (1, 0), (1, 1), (0, 1)])


@pytest.fixture
def l_poly():
    return Polygon([(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)])


@pytest.fixture
def annulus():
    return annulus_polygon(10, 4)


@pytest.fixture
def comb4():
    return comb_polygon(4)


@pytest.fixture
def star7():
    return lower_bound_polygon(FamilyParams(7))


def nudge_generic(P: Polygon, dx, dy, budget: int = 64):
    """Perturb (dx, dy) by dyadic steps until the direction is generic.

    Deterministic: tries the direction itself, then offsets the first
    component by +1/2, +1/4, ... of the second component's magnitude.
    """
    from ruledpoly import Direction

    dx = Fraction(dx)
    dy = Fraction(dy)
    cand = Direction(dx, dy)
    if is_generic(P, cand):
        return cand
    mag = abs(dy) if dy else abs(dx)
    for j in range(1, budget):
        step = mag / (1 << j)
        for s in (step, -step):
            if dy:
                cand = Direction(dx + s, dy)
            else:
                cand = Direction(dx, dy + s)
            if is_generic(P, cand):
                return cand
    raise RuntimeError("no generic direction near the requested one")
