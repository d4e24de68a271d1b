"""Volume profiles on grids, their limits, scenes, and model sets.

A profile assigns each base cell a volume fraction v in [0, 1]. It stands
for the family of sets whose column over each cell carries Gaussian mass
v, and in particular for the distinguished model set whose columns are
upper half-lines (see :func:`from_profile`). The cells with 0 < v < 1 form
the region G where symmetrization has any freedom.

One-sided limits at cells, facets, and vertices come from the cell values;
a :class:`SingularAnnotation` overrides the limits at a facet to record
behavior of an underlying continuum object that the grid sampling cannot
see (a pinch to 0 or a bulge to 1 along an interface). Facets against the
exterior of the grid take the exterior value 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from .columnar import ColumnarSet
from .connectedness import Scene, SceneCell, SceneFacet
from .errors import ProfileError
from .gauss import gamma1, psi
from .grids import CellId, Facet, Grid
from .intervals import IntervalSet

INF = math.inf


@dataclass(frozen=True, slots=True)
class SingularAnnotation:
    """Declared one-sided limits (wedge <= vee) on an interior facet."""

    facet: Facet
    wedge: float
    vee: float

    def __post_init__(self) -> None:
        w = float(self.wedge)
        v = float(self.vee)
        if math.isnan(w) or math.isnan(v):
            raise ProfileError("annotation limits must not be NaN")
        if not (0.0 <= w <= v <= 1.0):
            raise ProfileError(
                f"annotation limits must satisfy 0 <= wedge <= vee <= 1, got ({w}, {v})"
            )
        object.__setattr__(self, "wedge", w)
        object.__setattr__(self, "vee", v)


class Profile:
    """Cell values in [0, 1] on a grid, plus optional facet annotations."""

    __slots__ = ("_grid", "_values", "_annotations", "_ann_map")

    def __init__(
        self,
        grid: Grid,
        values: Mapping[CellId, float],
        annotations: Iterable[SingularAnnotation] = (),
    ) -> None:
        cooked: dict[CellId, float] = {}
        for cid in grid.cells():
            if cid not in values:
                raise ProfileError(f"missing value for cell {cid}")
            v = float(values[cid])
            if math.isnan(v) or not 0.0 <= v <= 1.0:
                raise ProfileError(f"cell {cid} value {v!r} outside [0, 1]")
            cooked[cid] = v
        if len(values) != len(cooked):
            extra = set(map(tuple, values)) - set(cooked)
            raise ProfileError(f"values given for cells outside the grid: {sorted(extra)}")
        ann_map: dict[Facet, SingularAnnotation] = {}
        for ann in annotations:
            if not isinstance(ann, SingularAnnotation):
                raise ProfileError(
                    f"expected SingularAnnotation, got {type(ann).__name__}"
                )
            lo_cid, hi_cid = grid.facet_cells(ann.facet)
            if lo_cid is None or hi_cid is None:
                raise ProfileError(
                    f"annotation on {ann.facet} is not on an interior facet"
                )
            if ann.facet in ann_map:
                raise ProfileError(f"duplicate annotation on {ann.facet}")
            ann_map[ann.facet] = ann
        self._grid = grid
        self._values = cooked
        self._annotations = tuple(sorted(ann_map.values(), key=lambda a: a.facet))
        self._ann_map = ann_map

    @property
    def grid(self) -> Grid:
        return self._grid

    @property
    def values(self) -> dict[CellId, float]:
        return dict(self._values)

    @property
    def annotations(self) -> tuple[SingularAnnotation, ...]:
        return self._annotations

    def value(self, cid: CellId) -> float:
        cid = tuple(cid)
        if cid not in self._values:
            raise ProfileError(f"cell {cid} outside grid")
        return self._values[cid]

    def annotation(self, facet: Facet) -> Optional[SingularAnnotation]:
        return self._ann_map.get(facet)

    def g_cells(self) -> list[CellId]:
        """Cells with 0 < v < 1, in lexicographic order."""
        return [cid for cid in sorted(self._values) if 0.0 < self._values[cid] < 1.0]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Profile):
            return NotImplemented
        return (
            self._grid == other._grid
            and self._values == other._values
            and self._annotations == other._annotations
        )

    def __repr__(self) -> str:
        return (
            f"Profile({self._grid!r}, {len(self.g_cells())} G-cells, "
            f"{len(self._annotations)} annotations)"
        )

    # ------------------------------------------------------------------
    # grid surgery

    def split_cell(self, axis: int, coordinate: float) -> "Profile":
        """Insert a breakpoint, copying values and re-indexing annotations.

        A null modification: the new facets along the cut are unannotated
        and both halves keep the old value, so every limit, scene, and
        verdict downstream is unchanged.
        """
        coordinate = float(coordinate)
        bps = self._grid.axes[axis]
        if coordinate in bps:
            return self
        if not bps[0] < coordinate < bps[-1]:
            raise ProfileError(f"coordinate {coordinate} outside axis {axis} span")
        cut_at = self._grid.axis_parent(axis, coordinate)
        new_axes = list(self._grid.axes)
        new_axes[axis] = tuple(sorted(bps + (coordinate,)))
        fine = Grid(*new_axes)

        def parent_index(k: int) -> int:
            return k if k <= cut_at else k - 1

        values: dict[CellId, float] = {}
        for cid in fine.cells():
            old = list(cid)
            old[axis] = parent_index(old[axis])
            values[cid] = self._values[tuple(old)]

        anns: list[SingularAnnotation] = []
        for a in self._annotations:
            f = a.facet
            if f.axis == axis:
                line = f.line if f.line <= cut_at else f.line + 1
                anns.append(SingularAnnotation(Facet(f.axis, line, f.lateral), a.wedge, a.vee))
            elif self._grid.base_dim == 2 and f.lateral == cut_at:
                # the lateral cell split in two: the annotation covers both halves
                anns.append(SingularAnnotation(Facet(f.axis, f.line, cut_at), a.wedge, a.vee))
                anns.append(SingularAnnotation(Facet(f.axis, f.line, cut_at + 1), a.wedge, a.vee))
            else:
                lat = f.lateral if (self._grid.base_dim == 1 or f.lateral <= cut_at) else f.lateral + 1
                anns.append(SingularAnnotation(Facet(f.axis, f.line, lat), a.wedge, a.vee))
        return Profile(fine, values, anns)

    def refined(self, max_width: float) -> "Profile":
        """Split every finite cell side until no side exceeds ``max_width``."""
        if not max_width > 0.0:
            raise ProfileError("max_width must be positive")
        p = self
        for axis in range(self._grid.base_dim):
            while True:
                bps = p.grid.axes[axis]
                cut = None
                for a, b in zip(bps, bps[1:]):
                    if not math.isinf(a) and not math.isinf(b) and b - a > max_width:
                        cut = 0.5 * (a + b)
                        break
                if cut is None:
                    break
                p = p.split_cell(axis, cut)
        return p


# ----------------------------------------------------------------------
# limits


def approx_limits(
    p: Profile,
    *,
    cell: Optional[CellId] = None,
    facet: Optional[Facet] = None,
    vertex: Optional[tuple[int, int]] = None,
) -> tuple[float, float]:
    """One-sided (lower, upper) value limits at a cell, facet, or vertex.

    Exactly one locus must be given. Cell limits are (v, v). Facet limits
    are the min/max of the two neighboring values, with the exterior
    counting as 0; an annotation on the facet overrides both. Vertex
    limits (2-D bases only; a vertex is a pair of breakpoint indices) are
    the min/max over the up-to-four incident cells; vertices cannot be
    annotated, since they never carry measure.
    """
    given = [x is not None for x in (cell, facet, vertex)]
    if sum(given) != 1:
        raise ProfileError("give exactly one of cell=, facet=, vertex=")
    if cell is not None:
        v = p.value(cell)
        return (v, v)
    if facet is not None:
        ann = p.annotation(facet)
        if ann is not None:
            return (ann.wedge, ann.vee)
        lo_cid, hi_cid = p.grid.facet_cells(facet)
        vals = [
            p.value(c) if c is not None else 0.0
            for c in (lo_cid, hi_cid)
        ]
        return (min(vals), max(vals))
    if p.grid.base_dim != 2:
        raise ProfileError("vertex limits need a 2-D base")
    i, j = vertex
    nx, ny = p.grid.shape
    vals = [
        p.value((a, b))
        for a in (i - 1, i)
        for b in (j - 1, j)
        if 0 <= a < nx and 0 <= b < ny
    ]
    if not vals:
        raise ProfileError(f"vertex {vertex!r} outside grid")
    return (min(vals), max(vals))


def f_limits(p: Profile, facet: Facet) -> tuple[float, float]:
    """Limits of the section boundary height across a facet.

    The model set's column over a cell of value v is (psi(v), inf), and
    psi is decreasing, so the height limits swap and negate the roles:
    the lower height limit is psi(vee) and the upper is psi(wedge).
    """
    wedge, vee = approx_limits(p, facet=facet)
    return (psi(vee), psi(wedge))


@dataclass(frozen=True, slots=True)
class JumpInterface:
    """Facet where the one-sided limits disagree.

    ``toward_upper`` is True when the higher value sits on the side of the
    larger coordinate, orienting the jump normal from lower to higher
    values.
    """

    facet: Facet
    wedge: float
    vee: float
    toward_upper: bool


def jump_interfaces(p: Profile) -> list[JumpInterface]:
    """All facets with wedge < vee, including those against the exterior."""
    out = []
    for f in p.grid.facets():
        wedge, vee = approx_limits(p, facet=f)
        if wedge < vee:
            lo_cid, hi_cid = p.grid.facet_cells(f)
            v_lo = p.value(lo_cid) if lo_cid is not None else 0.0
            v_hi = p.value(hi_cid) if hi_cid is not None else 0.0
            out.append(
                JumpInterface(facet=f, wedge=wedge, vee=vee, toward_upper=v_hi >= v_lo)
            )
    return out


# ----------------------------------------------------------------------
# scenes and model sets


def scene(p: Profile, kind: str = "ehrhard") -> Scene:
    """Combinatorial scene of the profile for the chosen symmetrization.

    Ehrhard scenes take G = {0 < v < 1} and block interfaces whose limits
    reach 0 from below or 1 from above; Steiner scenes take G = {v > 0}
    and block only interfaces pinched to 0. Only interfaces between two
    G-cells appear; interfaces of zero base measure are dropped.
    """
    if kind not in ("ehrhard", "steiner"):
        raise ProfileError(f"unknown scene kind {kind!r}")
    cells = []
    in_g: dict[CellId, bool] = {}
    for cid in p.grid.cells():
        v = p.value(cid)
        flag = (0.0 < v < 1.0) if kind == "ehrhard" else v > 0.0
        in_g[cid] = flag
        cells.append(
            SceneCell(
                id=cid,
                value=v,
                in_g=flag,
                gauss=p.grid.cell_gauss(cid),
                lebesgue=p.grid.cell_lebesgue(cid),
            )
        )
    facets = []
    for f in p.grid.facets(interior_only=True):
        lo_cid, hi_cid = p.grid.facet_cells(f)
        if not (in_g[lo_cid] and in_g[hi_cid]):
            continue
        mass = p.grid.facet_gauss(f)
        if mass <= 0.0:
            continue
        wedge, vee = approx_limits(p, facet=f)
        blocked = wedge == 0.0 or (kind == "ehrhard" and vee == 1.0)
        facets.append(
            SceneFacet(
                facet=f,
                cells=(lo_cid, hi_cid),
                gauss=mass,
                wedge=wedge,
                vee=vee,
                blocked=blocked,
                annotated=p.annotation(f) is not None,
            )
        )
    return Scene(
        kind=kind,
        base_dim=p.grid.base_dim,
        cells=tuple(cells),
        facets=tuple(facets),
    )


def from_profile(p: Profile) -> ColumnarSet:
    """The model set of the profile: columns (psi(v), inf) over each cell.

    Cells with v = 0 stay empty and cells with v = 1 become full lines,
    exactly (psi hits the infinite endpoints without rounding).
    """
    sections: dict[CellId, IntervalSet] = {}
    for cid in p.grid.cells():
        v = p.value(cid)
        if v > 0.0:
            sections[cid] = IntervalSet.above(psi(v))
    return ColumnarSet(p.grid, sections)


def distribution(e: ColumnarSet) -> Profile:
    """Profile of per-cell Gaussian masses of a columnar set."""
    values: dict[CellId, float] = {}
    for cid in e.grid.cells():
        v = gamma1(e.section(cid))
        values[cid] = min(v, 1.0)  # summed rounding can overshoot 1 by ulps
    return Profile(e.grid, values)


def g_boundary_gauss(p: Profile) -> float:
    """Base surface measure of the boundary of the region G = {0 < v < 1}.

    Sums the measures of all facets with exactly one side in G, counting
    the exterior of the grid as not in G.
    """
    total = []
    for f in p.grid.facets():
        lo_cid, hi_cid = p.grid.facet_cells(f)
        sides = []
        for c in (lo_cid, hi_cid):
            sides.append(False if c is None else 0.0 < p.value(c) < 1.0)
        if sides[0] != sides[1]:
            total.append(p.grid.facet_gauss(f))
    return math.fsum(total)
