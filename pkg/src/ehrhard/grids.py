"""Axis-aligned grids over 1-D or 2-D bases.

A grid is a list of strictly increasing breakpoints per base axis; the
first and last breakpoint of an axis may be infinite. Cells are the open
boxes between consecutive breakpoints, addressed by integer index tuples.
A facet is the codimension-one interface orthogonal to one axis, sitting
on one interior or boundary grid line, at one lateral cell index (always
0 for 1-D bases, where a facet is a single point).
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .errors import GridError
from .gauss import phi
from .intervals import Interval

INF = math.inf

CellId = tuple[int, ...]


@dataclass(frozen=True, slots=True, order=True)
class Facet:
    """Interface orthogonal to ``axis`` on grid line ``line``.

    ``line`` indexes the breakpoint along ``axis`` (0 .. number of cells),
    so lines 0 and n are the outer boundary of the grid. ``lateral`` is
    the cell index along the remaining axis; 0 for a 1-D base.
    """

    axis: int
    line: int
    lateral: int = 0


def _axis_gamma(bps: Sequence[float], i: int) -> float:
    return phi(bps[i]) - phi(bps[i + 1])


class Grid:
    """Validated breakpoint grid with measure helpers."""

    __slots__ = ("_axes",)

    def __init__(self, *axes: Sequence[float]) -> None:
        if not 1 <= len(axes) <= 2:
            raise GridError(f"grid must have 1 or 2 base axes, got {len(axes)}")
        cooked: list[tuple[float, ...]] = []
        for k, bps in enumerate(axes):
            vals = tuple(float(b) for b in bps)
            if len(vals) < 2:
                raise GridError(f"axis {k} needs at least 2 breakpoints")
            for b in vals:
                if math.isnan(b):
                    raise GridError(f"axis {k} contains NaN")
            for a, b in zip(vals, vals[1:]):
                if not a < b:
                    raise GridError(f"axis {k} breakpoints not strictly increasing: {a} >= {b}")
            for b in vals[1:-1]:
                if math.isinf(b):
                    raise GridError(f"axis {k} has an interior infinite breakpoint")
            cooked.append(vals)
        self._axes = tuple(cooked)

    # ------------------------------------------------------------------

    @property
    def axes(self) -> tuple[tuple[float, ...], ...]:
        return self._axes

    @property
    def base_dim(self) -> int:
        return len(self._axes)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(a) - 1 for a in self._axes)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Grid):
            return NotImplemented
        return self._axes == other._axes

    def __hash__(self) -> int:
        return hash(self._axes)

    def __repr__(self) -> str:
        return f"Grid(base_dim={self.base_dim}, shape={self.shape})"

    @staticmethod
    def regular(lo: float, hi: float, cells: int) -> tuple[float, ...]:
        """Breakpoints of a uniform axis with the given cell count."""
        if cells < 1:
            raise GridError("regular axis needs at least one cell")
        step = (hi - lo) / cells
        bps = [lo + i * step for i in range(cells)]
        bps.append(hi)
        return tuple(bps)

    # ------------------------------------------------------------------
    # cells

    def cells(self) -> Iterator[CellId]:
        if self.base_dim == 1:
            for i in range(self.shape[0]):
                yield (i,)
        else:
            for i in range(self.shape[0]):
                for j in range(self.shape[1]):
                    yield (i, j)

    def check_cell(self, cid: CellId) -> CellId:
        cid = tuple(int(c) for c in cid)
        if len(cid) != self.base_dim or not all(
            0 <= c < n for c, n in zip(cid, self.shape)
        ):
            raise GridError(f"cell {cid} outside grid of shape {self.shape}")
        return cid

    def cell_side(self, axis: int, index: int) -> Interval:
        bps = self._axes[axis]
        return Interval(bps[index], bps[index + 1])

    def cell_box(self, cid: CellId) -> tuple[Interval, ...]:
        return tuple(self.cell_side(axis, c) for axis, c in enumerate(cid))

    def cell_gauss(self, cid: CellId) -> float:
        out = 1.0
        for axis, c in enumerate(cid):
            out *= _axis_gamma(self._axes[axis], c)
        return out

    def cell_lebesgue(self, cid: CellId) -> float:
        out = 1.0
        for axis, c in enumerate(cid):
            out *= self.cell_side(axis, c).length
        return out

    # ------------------------------------------------------------------
    # facets

    def facets(self, interior_only: bool = False) -> Iterator[Facet]:
        """All finite-coordinate facets, sorted; optionally interior ones only.

        Boundary facets on an infinite grid line do not exist as sets and
        are never produced.
        """
        for axis in range(self.base_dim):
            bps = self._axes[axis]
            lat_count = 1 if self.base_dim == 1 else self.shape[1 - axis]
            for line in range(len(bps)):
                if math.isinf(bps[line]):
                    continue
                if interior_only and (line == 0 or line == len(bps) - 1):
                    continue
                for lat in range(lat_count):
                    yield Facet(axis, line, lat)

    def facet_cells(self, f: Facet) -> tuple[Optional[CellId], Optional[CellId]]:
        """Neighbor cells (below, above) along the facet axis; None = exterior."""
        self._check_facet(f)
        n = self.shape[f.axis]
        below = f.line - 1 if f.line >= 1 else None
        above = f.line if f.line <= n - 1 else None

        def make(i: Optional[int]) -> Optional[CellId]:
            if i is None:
                return None
            if self.base_dim == 1:
                return (i,)
            return (i, f.lateral) if f.axis == 0 else (f.lateral, i)

        return make(below), make(above)

    def facet_coordinate(self, f: Facet) -> float:
        return self._axes[f.axis][f.line]

    def facet_span(self, f: Facet) -> Optional[Interval]:
        """Lateral extent of the facet; None for a 1-D base (a point facet)."""
        if self.base_dim == 1:
            return None
        return self.cell_side(1 - f.axis, f.lateral)

    def facet_gauss(self, f: Facet) -> float:
        """Unnormalized Gaussian surface measure of the facet in the base.

        For a point facet at coordinate z this is ``exp(-z*z/2)``; for a
        segment ``{z} x (a, b)`` it is ``exp(-z*z/2) * gamma1((a, b))``.
        """
        z = self.facet_coordinate(f)
        if math.isinf(z):
            return 0.0
        w = math.exp(-0.5 * z * z)
        span = self.facet_span(f)
        if span is not None:
            w *= phi(span.lo) - phi(span.hi)
        return w

    def facet_lebesgue(self, f: Facet) -> float:
        """Lebesgue surface measure of the facet: 1 for a point, else length."""
        if math.isinf(self.facet_coordinate(f)):
            return 0.0
        span = self.facet_span(f)
        return 1.0 if span is None else span.length

    def _check_facet(self, f: Facet) -> None:
        if not 0 <= f.axis < self.base_dim:
            raise GridError(f"facet axis {f.axis} outside base dimension {self.base_dim}")
        if not 0 <= f.line < len(self._axes[f.axis]):
            raise GridError(f"facet line {f.line} outside axis {f.axis}")
        lat_count = 1 if self.base_dim == 1 else self.shape[1 - f.axis]
        if not 0 <= f.lateral < lat_count:
            raise GridError(f"facet lateral index {f.lateral} outside grid")

    # ------------------------------------------------------------------
    # refinement

    def refine_with(self, other: "Grid") -> "Grid":
        """Smallest common refinement (breakpoint union, per axis)."""
        if other.base_dim != self.base_dim:
            raise GridError(
                f"cannot refine a {self.base_dim}-D grid with a {other.base_dim}-D one"
            )
        merged = []
        for a, b in zip(self._axes, other._axes):
            merged.append(tuple(sorted(set(a) | set(b))))
        return Grid(*merged)

    def axis_parent(self, axis: int, lo: float) -> Optional[int]:
        """Index of this grid's cell on ``axis`` whose side contains [lo, ...).

        ``lo`` must be a breakpoint of a refinement of this grid, so exact
        comparisons suffice. Returns None when lo is outside the axis span.
        """
        bps = self._axes[axis]
        i = bisect_right(bps, lo) - 1
        if i < 0 or i >= len(bps) - 1:
            return None
        return i
