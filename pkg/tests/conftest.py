"""Shared random generators for the test suite.

Every generator takes an explicit random.Random so each test pins its own
seed; nothing here reads global state. Breakpoints keep a minimum spacing
so that no cell is thin enough for its Gaussian mass times a value margin
to fall under the mass floors used by the search routines.
"""

from __future__ import annotations

import math
import random

import pytest

from ehrhard import ColumnarSet, Grid, IntervalSet, Profile

INF = math.inf

MIN_SPACING = 1e-3


def random_breakpoints(
    rng: random.Random,
    max_cells: int = 12,
    lo: float = -3.0,
    hi: float = 3.0,
    p_inf: float = 0.3,
) -> tuple[float, ...]:
    """Strictly increasing breakpoints with minimum spacing, optionally
    opened up to infinity at either end."""
    n_cells = rng.randint(1, max_cells)
    while True:
        pts = sorted(rng.uniform(lo, hi) for _ in range(n_cells + 1))
        if all(b - a >= MIN_SPACING for a, b in zip(pts, pts[1:])):
            break
    if rng.random() < p_inf:
        pts[0] = -INF
    if rng.random() < p_inf:
        pts[-1] = INF
    return tuple(pts)


def random_interval_set(
    rng: random.Random,
    max_intervals: int = 3,
    lo: float = -4.0,
    hi: float = 4.0,
    p_inf: float = 0.1,
) -> IntervalSet:
    k = rng.randint(0, max_intervals)
    if k == 0:
        return IntervalSet.empty()
    while True:
        pts = sorted(rng.uniform(lo, hi) for _ in range(2 * k))
        if all(b - a >= MIN_SPACING for a, b in zip(pts, pts[1:])):
            break
    if rng.random() < p_inf:
        pts[0] = -INF
    if rng.random() < p_inf:
        pts[-1] = INF
    return IntervalSet.from_pairs(
        [(pts[2 * i], pts[2 * i + 1]) for i in range(k)]
    )


def random_columnar(
    rng: random.Random,
    max_cells: int = 20,
    max_intervals: int = 3,
    bounded: bool = False,
) -> ColumnarSet:
    """Random 1-D-base columnar set (a planar set built from columns)."""
    if bounded:
        bps = random_breakpoints(rng, max_cells, p_inf=0.0)
    else:
        bps = random_breakpoints(rng, max_cells)
    grid = Grid(bps)
    sections = {}
    for cid in grid.cells():
        s = random_interval_set(
            rng, max_intervals, p_inf=0.0 if bounded else 0.1
        )
        if s:
            sections[cid] = s
    return ColumnarSet(grid, sections)


def random_value(rng: random.Random, p_extreme: float = 0.2) -> float:
    """A cell value: 0 or 1 with probability p_extreme (split evenly),
    otherwise uniform kept a safe margin away from both ends."""
    r = rng.random()
    if r < p_extreme / 2.0:
        return 0.0
    if r < p_extreme:
        return 1.0
    while True:
        v = rng.random()
        if min(v, 1.0 - v) >= 1e-5:
            return v


def random_profile_1d(
    rng: random.Random,
    max_cells: int = 12,
    max_g_cells: int = 10,
    p_extreme: float = 0.2,
) -> Profile:
    """Unannotated 1-D profile with at most max_g_cells cells in G."""
    while True:
        bps = random_breakpoints(rng, max_cells)
        grid = Grid(bps)
        values = {cid: random_value(rng, p_extreme) for cid in grid.cells()}
        p = Profile(grid, values)
        if len(p.g_cells()) <= max_g_cells:
            return p


def random_profile_2d(
    rng: random.Random,
    max_cells_per_axis: int = 4,
    p_extreme: float = 0.2,
) -> Profile:
    grid = Grid(
        random_breakpoints(rng, max_cells_per_axis),
        random_breakpoints(rng, max_cells_per_axis),
    )
    values = {cid: random_value(rng, p_extreme) for cid in grid.cells()}
    return Profile(grid, values)


@pytest.fixture(scope="session")
def verdict_suite() -> list[Profile]:
    """The shared suite of 10^4 random unannotated 1-D profiles used by the
    verdict-agreement, equality-case, and sufficient-condition criteria."""
    rng = random.Random(20260817)
    return [random_profile_1d(rng) for _ in range(10_000)]
