"""Columnar sets over base grids and their Gaussian geometry.

A columnar set is a finite union of products cell x section, one vertical
section (an :class:`~ehrhard.intervals.IntervalSet`) per base cell, and is
empty over the exterior of its grid. All operations identify sets up to
null sets, so sections are canonical and exactly-touching pieces merge.

The boundary of such a set decomposes into horizontal faces (a cell times
a finite section endpoint) and vertical faces (a facet times the symmetric
difference of the two neighboring sections, with the exterior acting as
the empty section). Corner points are a null set of the boundary measure
and never counted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping, Optional

from .errors import DomainError, GridError
from .gauss import gamma1, gauss_weight, gaussian_barycenter, psi
from .grids import CellId, Facet, Grid
from .intervals import IntervalSet

INF = math.inf


class ColumnarSet:
    """Immutable columnar set: a base grid plus one section per cell.

    Cells with empty sections may be omitted; ``section`` returns the
    empty set for them. Equality is grid equality plus exact section
    equality (use :func:`symdiff_volume` for measure-level comparison).
    """

    __slots__ = ("_grid", "_sections")

    def __init__(self, grid: Grid, sections: Mapping[CellId, IntervalSet]) -> None:
        if not isinstance(grid, Grid):
            raise GridError(f"expected Grid, got {type(grid).__name__}")
        cooked: dict[CellId, IntervalSet] = {}
        for cid, s in sections.items():
            cid = grid.check_cell(cid)
            if not isinstance(s, IntervalSet):
                raise DomainError(
                    f"section of cell {cid} must be an IntervalSet, got {type(s).__name__}"
                )
            if not s.is_empty:
                cooked[cid] = s
        self._grid = grid
        self._sections = cooked

    @property
    def grid(self) -> Grid:
        return self._grid

    @property
    def sections(self) -> dict[CellId, IntervalSet]:
        return dict(self._sections)

    def section(self, cid: CellId) -> IntervalSet:
        return self._sections.get(tuple(cid), IntervalSet.empty())

    def support(self) -> list[CellId]:
        """Cells with non-empty sections, in lexicographic order."""
        return sorted(self._sections)

    @property
    def is_empty(self) -> bool:
        return not self._sections

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ColumnarSet):
            return NotImplemented
        return self._grid == other._grid and self._sections == other._sections

    def __repr__(self) -> str:
        return f"ColumnarSet({self._grid!r}, {len(self._sections)} occupied cells)"


# ----------------------------------------------------------------------
# volumes


def gauss_volume(e: ColumnarSet) -> float:
    """Gaussian measure of the set."""
    g = e.grid
    return math.fsum(
        g.cell_gauss(cid) * gamma1(e.section(cid)) for cid in e.support()
    )


def lebesgue_volume(e: ColumnarSet) -> float:
    """Lebesgue measure of the set; inf when any occupied column is unbounded."""
    g = e.grid
    return math.fsum(
        g.cell_lebesgue(cid) * e.section(cid).length() for cid in e.support()
    )


# ----------------------------------------------------------------------
# perimeter


@dataclass(frozen=True, slots=True)
class HorizontalFace:
    """Flat boundary piece cell x {level}; normal is +1 for upward outward."""

    cell: CellId
    level: float
    normal: int
    gauss: float
    lebesgue: float


@dataclass(frozen=True, slots=True)
class VerticalFace:
    """Boundary piece facet x (section symmetric difference).

    ``section_symdiff`` is the gamma1 mass of the symmetric difference of
    the two neighboring sections (exterior = empty). ``normal`` is +1 when
    the heavier section sits above the facet line, mirroring the
    lower-to-higher orientation of jump interfaces.
    """

    facet: Facet
    section_symdiff: float
    gauss: float
    lebesgue: float
    normal: int


@dataclass(frozen=True)
class PerimeterBreakdown:
    """Gaussian perimeter split into horizontal and vertical faces."""

    horizontal: tuple[HorizontalFace, ...]
    vertical: tuple[VerticalFace, ...]
    horizontal_gauss: float
    vertical_gauss: float
    total_gauss: float
    total_lebesgue: float


def gauss_perimeter(e: ColumnarSet) -> PerimeterBreakdown:
    """Boundary measure of a columnar set, face by face.

    Horizontal faces weigh ``gamma_{n-1}(cell) * exp(-t*t/2)`` per finite
    section endpoint t; vertical faces weigh the facet's base surface
    measure times the gamma1 mass of the section symmetric difference.
    Faces whose symmetric difference is empty are omitted. Iteration
    order (cells, then facets, lexicographically) fixes the summation
    order, so results are bit-reproducible.
    """
    g = e.grid
    horizontal: list[HorizontalFace] = []
    for cid in e.support():
        area_g = g.cell_gauss(cid)
        area_l = g.cell_lebesgue(cid)
        for t, normal in e.section(cid).finite_endpoints():
            horizontal.append(
                HorizontalFace(
                    cell=cid,
                    level=t,
                    normal=normal,
                    gauss=area_g * gauss_weight(t),
                    lebesgue=area_l,
                )
            )

    vertical: list[VerticalFace] = []
    for f in g.facets():
        lo_cid, hi_cid = g.facet_cells(f)
        s_lo = e.section(lo_cid) if lo_cid is not None else IntervalSet.empty()
        s_hi = e.section(hi_cid) if hi_cid is not None else IntervalSet.empty()
        diff = s_lo.symdiff(s_hi)
        if diff.is_empty:
            continue
        mass = gamma1(diff)
        vertical.append(
            VerticalFace(
                facet=f,
                section_symdiff=mass,
                gauss=g.facet_gauss(f) * mass,
                lebesgue=g.facet_lebesgue(f) * diff.length(),
                normal=+1 if gamma1(s_hi) >= gamma1(s_lo) else -1,
            )
        )

    hg = math.fsum(face.gauss for face in horizontal)
    vg = math.fsum(face.gauss for face in vertical)
    total_l = math.fsum(
        [face.lebesgue for face in horizontal] + [face.lebesgue for face in vertical]
    )
    return PerimeterBreakdown(
        horizontal=tuple(horizontal),
        vertical=tuple(vertical),
        horizontal_gauss=hg,
        vertical_gauss=vg,
        total_gauss=hg + vg,
        total_lebesgue=total_l,
    )


# ----------------------------------------------------------------------
# symmetrizations and friends


def reflect(e: ColumnarSet) -> ColumnarSet:
    """Mirror every section through height 0.

    An involution (endpoint negation round-trips exactly). Horizontal face
    weights are bit-identical since ``exp(-t*t/2)`` ignores the sign of t;
    interval masses re-evaluate ``phi`` at negated endpoints and may move
    by an ulp.
    """
    return ColumnarSet(e.grid, {cid: s.reflect() for cid, s in e._sections.items()})


def ehrhard_symmetral(e: ColumnarSet) -> ColumnarSet:
    """Replace each section by the upper half-line of equal Gaussian mass.

    A column of mass v becomes (psi(v), inf); null columns vanish and full
    columns become the whole line (psi maps 0 and 1 to the infinite
    endpoints exactly). Volumes are conserved up to the phi/psi round
    trip.
    """
    out: dict[CellId, IntervalSet] = {}
    for cid in e.support():
        v = gamma1(e.section(cid))
        if v > 1.0:
            v = 1.0  # guard: summed per-interval rounding can overshoot by ulps
        out[cid] = IntervalSet.above(psi(v))
    return ColumnarSet(e.grid, out)


def steiner_symmetral(e: ColumnarSet) -> ColumnarSet:
    """Replace each section by the centered interval of equal length.

    Columns of infinite length become the whole line; empty columns stay
    empty. Lebesgue volume is conserved exactly.
    """
    out: dict[CellId, IntervalSet] = {}
    for cid in e.support():
        length = e.section(cid).length()
        if length == INF:
            out[cid] = IntervalSet.line()
        elif length > 0.0:
            out[cid] = IntervalSet.of(-0.5 * length, 0.5 * length)
    return ColumnarSet(e.grid, out)


def restrict(e: ColumnarSet, cells: Iterable[CellId]) -> ColumnarSet:
    """Keep only the sections over the given cells."""
    keep = {e.grid.check_cell(cid) for cid in cells}
    return ColumnarSet(
        e.grid, {cid: s for cid, s in e._sections.items() if cid in keep}
    )


def complement(e: ColumnarSet) -> ColumnarSet:
    """Complement within the whole space.

    The grid is extended with infinite end breakpoints where missing, so
    the exterior (where the set is empty) contributes full-line sections.
    """
    axes = []
    for bps in e.grid.axes:
        ext = list(bps)
        if ext[0] != -INF:
            ext.insert(0, -INF)
        if ext[-1] != INF:
            ext.append(INF)
        axes.append(tuple(ext))
    big = Grid(*axes)
    out: dict[CellId, IntervalSet] = {}
    for cid in big.cells():
        parent = _parent_cell(e.grid, big, cid)
        s = e.section(parent) if parent is not None else IntervalSet.empty()
        out[cid] = s.complement()
    return ColumnarSet(big, out)


def complement_facet_map(original: Grid, extended: Grid, f: Facet) -> Facet:
    """Re-index a facet of ``original`` on the extended grid of its complement."""
    shift = [
        1 if original.axes[k][0] != extended.axes[k][0] else 0
        for k in range(original.base_dim)
    ]
    lat = f.lateral + (shift[1 - f.axis] if original.base_dim == 2 else 0)
    return Facet(f.axis, f.line + shift[f.axis], lat)


def _parent_cell(coarse: Grid, fine: Grid, cid: CellId) -> Optional[CellId]:
    """Cell of ``coarse`` containing the given cell of ``fine`` (None if exterior)."""
    parent = []
    for axis, c in enumerate(cid):
        lo = fine.axes[axis][c]
        i = coarse.axis_parent(axis, lo)
        if i is None:
            return None
        parent.append(i)
    return tuple(parent)


def on_grid(e: ColumnarSet, fine: Grid) -> ColumnarSet:
    """Re-express the set on a refinement of its grid (sections copied).

    Every measure-level quantity is invariant under this re-gridding: the
    sections are identical floats, only the bookkeeping cells split.
    """
    out: dict[CellId, IntervalSet] = {}
    for cid in fine.cells():
        parent = _parent_cell(e.grid, fine, cid)
        if parent is not None:
            s = e.section(parent)
            if not s.is_empty:
                out[cid] = s
    return ColumnarSet(fine, out)


def common_refinement(e: ColumnarSet, f: ColumnarSet) -> tuple[ColumnarSet, ColumnarSet]:
    """Re-express both sets on the smallest common refinement of their grids."""
    fine = e.grid.refine_with(f.grid)
    return on_grid(e, fine), on_grid(f, fine)


def symdiff_volume(e: ColumnarSet, f: ColumnarSet) -> float:
    """Gaussian measure of the symmetric difference of two columnar sets.

    Grids are refined to a common one automatically; sets extend by
    emptiness outside their own grids.
    """
    if e.grid != f.grid:
        e, f = common_refinement(e, f)
    g = e.grid
    cells = sorted(set(e.support()) | set(f.support()))
    return math.fsum(
        g.cell_gauss(cid) * gamma1(e.section(cid).symdiff(f.section(cid)))
        for cid in cells
    )


# ----------------------------------------------------------------------
# half-line classification


class HalflineClass(Enum):
    """Shape of one column, up to Gaussian null sets."""

    PLUS = "G+"
    MINUS = "G-"
    NULL = "G0"
    FULL = "G1"
    OTHER = "NotHalfline"


@dataclass(frozen=True)
class ColumnClassification:
    """Per-cell half-line labels for a columnar set."""

    labels: dict[CellId, HalflineClass]
    tolerance: float

    @property
    def total(self) -> bool:
        """True when every column matched one of the four half-line shapes."""
        return all(k is not HalflineClass.OTHER for k in self.labels.values())

    def count(self, kind: HalflineClass) -> int:
        return sum(1 for k in self.labels.values() if k is kind)


def halfline_classification(
    e: ColumnarSet, tolerance: float = 1e-10
) -> ColumnClassification:
    """Label every column as an up/down half-line, null, full, or neither.

    A column of mass v matches G+ when it differs from (psi(v), inf) by at
    most ``tolerance`` in gamma1 mass, and G- symmetrically with
    (-inf, -psi(v)). Null and full columns are tested first; the sign of
    the Gaussian barycenter then decides which half-line shape to try
    (an up half-line always has positive barycenter, a down one negative).
    """
    labels: dict[CellId, HalflineClass] = {}
    line = IntervalSet.line()
    for cid in e.grid.cells():
        s = e.section(cid)
        mass = gamma1(s)
        if mass <= 0.0:
            labels[cid] = HalflineClass.NULL
            continue
        if gamma1(s.symdiff(line)) <= tolerance:
            labels[cid] = HalflineClass.FULL
            continue
        bary = gaussian_barycenter(s)
        label = HalflineClass.OTHER
        if bary >= 0.0 and gamma1(s.symdiff(IntervalSet.above(psi(mass)))) <= tolerance:
            label = HalflineClass.PLUS
        if (
            label is HalflineClass.OTHER
            and bary <= 0.0
            and gamma1(s.symdiff(IntervalSet.below(-psi(mass)))) <= tolerance
        ):
            label = HalflineClass.MINUS
        labels[cid] = label
    return ColumnClassification(labels=labels, tolerance=tolerance)
