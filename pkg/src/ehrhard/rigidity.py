"""Rigidity analysis for symmetrized model sets.

A profile is *rigid* when every set that matches its column masses and
ties the model set's Gaussian perimeter is, up to null sets and a global
mirror, the model set itself. The decision runs through essential
connectedness: the model set is rigid exactly when the singular
interfaces fail to disconnect the region G, and every essential
disconnection converts into an explicit competitor by mirroring the
columns on one side of the partition.

Each crossing interface of a candidate partition pays a computable
Gaussian cost (see :func:`ehrhard.gauss.gap`), which is zero exactly on
blocked interfaces. That identity powers both the theorem route (graph
connectivity) and the exhaustive route (enumerate all two-colorings and
price them); the two must always agree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Iterable, Optional, Sequence, Union

from .columnar import (
    ColumnarSet,
    ColumnClassification,
    gauss_perimeter,
    halfline_classification,
    reflect,
    restrict,
    symdiff_volume,
)
from .connectedness import (
    PartitionCertificate,
    SpanningStructure,
    certificate_for,
    complement_indecomposable,
    essentially_disconnects,
    indecomposable,
)
from .errors import EhrhardError, PartitionError, ProfileError, SearchBoundError
from .gauss import gamma1, gap, psi
from .grids import CellId, Facet
from .intervals import IntervalSet
from .profiles import Profile, approx_limits, from_profile, scene

__all__ = [
    "Verdict",
    "PerimeterCheck",
    "SymdiffCheck",
    "RigidityReport",
    "rigidity_verdict",
    "rigidity_verdict_planar",
    "build_counterexample",
    "EqualityCaseReport",
    "verify_equality_case",
    "exhaustive_search",
    "gap",
    "LevelRestrictionReport",
    "check_pino",
    "default_levels",
    "ComplementSplitReport",
    "check_gino",
]


class Verdict(Enum):
    RIGID = "Rigid"
    NONRIGID = "NonRigid"


@dataclass(frozen=True)
class PerimeterCheck:
    """Gaussian perimeters of a competitor and of the model set."""

    candidate: float
    symmetral: float
    difference: float


@dataclass(frozen=True)
class SymdiffCheck:
    """Distances (in symmetric-difference mass) to the model set and its mirror."""

    vs_symmetral: float
    vs_reflected: float


@dataclass(frozen=True)
class RigidityReport:
    """Outcome of a rigidity decision.

    A NonRigid report carries the separating certificate, the mirrored
    competitor, its perimeter comparison against the model set, and its
    distances to the model set and to the fully mirrored set. A Rigid
    report from the theorem route carries the spanning structure that
    connects G. For profiles without annotations the competitor ties the
    model perimeter exactly; with annotations the tie is asymptotic along
    refinements and the report's notes say so.
    """

    verdict: Verdict
    method: str
    annotated: bool
    certificate: Optional[PartitionCertificate] = None
    connectivity: Optional[SpanningStructure] = None
    counterexample: Optional[ColumnarSet] = None
    perimeter_check: Optional[PerimeterCheck] = None
    symdiff_check: Optional[SymdiffCheck] = None
    partitions_checked: int = 0
    notes: tuple[str, ...] = ()

    @property
    def rigid(self) -> bool:
        return self.verdict is Verdict.RIGID


def _nonrigid_report(
    p: Profile, cert: PartitionCertificate, method: str, checked: int = 0
) -> RigidityReport:
    e = build_counterexample(p, cert)
    f = from_profile(p)
    pe = gauss_perimeter(e).total_gauss
    pf = gauss_perimeter(f).total_gauss
    annotated = bool(p.annotations)
    notes = ()
    if annotated:
        notes = (
            "annotated profile: the mirrored competitor ties the perimeter only "
            "asymptotically along refinements; the reported difference is for "
            "this grid",
        )
    return RigidityReport(
        verdict=Verdict.NONRIGID,
        method=method,
        annotated=annotated,
        certificate=cert,
        counterexample=e,
        perimeter_check=PerimeterCheck(pe, pf, pe - pf),
        symdiff_check=SymdiffCheck(
            vs_symmetral=symdiff_volume(e, f),
            vs_reflected=symdiff_volume(e, reflect(f)),
        ),
        partitions_checked=checked,
        notes=notes,
    )


def rigidity_verdict(p: Profile, tolerance: float = 1e-10) -> RigidityReport:
    """Decide rigidity through essential connectedness of the scene graph."""
    sc = scene(p)
    disconnected, witness = essentially_disconnects(sc)
    if not disconnected:
        notes = ()
        if not sc.g_cells():
            notes = ("no cells with 0 < v < 1: rigid vacuously",)
        return RigidityReport(
            verdict=Verdict.RIGID,
            method="theorem",
            annotated=bool(p.annotations),
            connectivity=witness,
            notes=notes,
        )
    return _nonrigid_report(p, witness, "theorem")


def _planar_rigid(p: Profile) -> bool:
    """Direct 1-D criterion: G is one contiguous run with no blocked interior facet."""
    g = [cid[0] for cid in p.g_cells()]
    if not g:
        return True
    if max(g) - min(g) + 1 != len(g):
        return False
    for line in range(min(g) + 1, max(g) + 1):
        wedge, vee = approx_limits(p, facet=Facet(0, line, 0))
        if wedge == 0.0 or vee == 1.0:
            return False
    return True


def rigidity_verdict_planar(p: Profile, tolerance: float = 1e-10) -> RigidityReport:
    """Decide rigidity of a 1-D profile by the run criterion.

    The contiguous-run test is evaluated independently and cross-checked
    against the scene route on every call; a disagreement would be a bug
    in one of the routes and raises immediately.
    """
    if p.grid.base_dim != 1:
        raise ProfileError("planar rigidity criterion needs a 1-D base")
    report = rigidity_verdict(p, tolerance)
    if _planar_rigid(p) != report.rigid:
        raise EhrhardError("planar run criterion disagrees with the scene route")
    return replace(report, method="planar-theorem")


def build_counterexample(p: Profile, cert: PartitionCertificate) -> ColumnarSet:
    """Mirror the minus-side columns of the model set.

    Cells on the plus side keep their upper half-lines (psi(v), inf),
    minus-side cells flip to (-inf, -psi(v)), full cells stay full and
    empty cells stay empty. The result has the same column masses as the
    model set; it ties the perimeter exactly when the certificate's
    crossing interfaces are all blocked and the profile is unannotated.
    """
    g = set(p.g_cells())
    plus = {tuple(c) for c in cert.plus_cells}
    minus = {tuple(c) for c in cert.minus_cells}
    if plus & minus:
        raise PartitionError("certificate sides overlap")
    if (plus | minus) != g:
        raise PartitionError("certificate sides must partition the cells with 0 < v < 1")
    sections: dict[CellId, IntervalSet] = {}
    for cid in p.grid.cells():
        v = p.value(cid)
        if v == 0.0:
            continue
        if v == 1.0:
            sections[cid] = IntervalSet.line()
        elif cid in minus:
            sections[cid] = IntervalSet.below(-psi(v))
        else:
            sections[cid] = IntervalSet.above(psi(v))
    return ColumnarSet(p.grid, sections)


@dataclass(frozen=True)
class EqualityCaseReport:
    """Verification that a competitor realizes the equality case.

    ``halfline_total`` is None when the perimeter tie fails at 1e-9, in
    which case the column classification is not informative.
    """

    max_distribution_error: float
    is_distributed: bool
    perimeter_check: PerimeterCheck
    equality: bool
    classification: Optional[ColumnClassification]
    halfline_total: Optional[bool]
    symdiff_check: SymdiffCheck

    @property
    def passed(self) -> bool:
        return self.is_distributed and self.equality and self.halfline_total is True


def verify_equality_case(
    e: ColumnarSet, p: Profile, tolerance: float = 1e-10
) -> EqualityCaseReport:
    """Check a candidate equality case: masses, perimeter tie, column shapes."""
    if e.grid != p.grid:
        raise PartitionError("candidate and profile must share a grid")
    f = from_profile(p)
    max_err = max(
        abs(gamma1(e.section(cid)) - p.value(cid)) for cid in p.grid.cells()
    )
    pe = gauss_perimeter(e).total_gauss
    pf = gauss_perimeter(f).total_gauss
    diff = pe - pf
    classification = None
    halfline_total = None
    if abs(diff) <= 1e-9:
        classification = halfline_classification(e)
        halfline_total = classification.total
    return EqualityCaseReport(
        max_distribution_error=max_err,
        is_distributed=max_err <= 1e-12,
        perimeter_check=PerimeterCheck(pe, pf, diff),
        equality=abs(diff) <= tolerance,
        classification=classification,
        halfline_total=halfline_total,
        symdiff_check=SymdiffCheck(
            vs_symmetral=symdiff_volume(e, f),
            vs_reflected=symdiff_volume(e, reflect(f)),
        ),
    )


def exhaustive_search(
    p: Profile, max_cells: int = 12, tolerance: float = 1e-9
) -> RigidityReport:
    """Price every non-trivial two-coloring of the G-cells.

    Enumerates all 2^g - 2 colorings in ascending bitmask order (bit k is
    the k-th G-cell in lexicographic order; set bits form the minus side)
    and accepts the first whose crossing interfaces cost at most
    ``tolerance`` while both mirrored-versus-kept mass differences stay
    above 1e-12. The interface cost is the closed-form mirror cost
    2*min(wedge, 1 - vee) per unit of base measure, which is what the
    perimeter difference of the built competitor works out to; blocked
    interfaces cost exactly zero. Instances with more than ``max_cells``
    G-cells are refused outright to keep the enumeration honest.
    """
    g = p.g_cells()
    n = len(g)
    if n > max_cells:
        raise SearchBoundError(
            f"exhaustive search over {n} cells with 0 < v < 1 exceeds the bound "
            f"of {max_cells}; pass a larger max_cells to force it"
        )
    sc = scene(p)
    bit = {cid: 1 << k for k, cid in enumerate(g)}
    facet_terms = [
        (bit[sf.cells[0]], bit[sf.cells[1]], sf.gauss * 2.0 * min(sf.wedge, 1.0 - sf.vee))
        for sf in sc.facets
    ]
    cell_terms = [
        p.grid.cell_gauss(cid) * 2.0 * min(p.value(cid), 1.0 - p.value(cid))
        for cid in g
    ]
    checked = 0
    for mask in range(1, (1 << n) - 1):
        checked += 1
        cost = 0.0
        for ba, bb, w in facet_terms:
            if bool(mask & ba) != bool(mask & bb):
                cost += w
                if cost > tolerance:
                    break
        if cost > tolerance:
            continue
        minus_mass = math.fsum(
            t for k, t in enumerate(cell_terms) if mask & (1 << k)
        )
        plus_mass = math.fsum(
            t for k, t in enumerate(cell_terms) if not mask & (1 << k)
        )
        if minus_mass > 1e-12 and plus_mass > 1e-12:
            minus = [cid for cid in g if mask & bit[cid]]
            cert = certificate_for(sc, minus)
            return _nonrigid_report(p, cert, "exhaustive-search", checked)
    return RigidityReport(
        verdict=Verdict.RIGID,
        method="exhaustive-search",
        annotated=bool(p.annotations),
        partitions_checked=checked,
        notes=("every non-trivial two-coloring pays positive interface cost",),
    )


# ----------------------------------------------------------------------
# sufficient conditions


@dataclass(frozen=True)
class LevelRestrictionReport:
    """Connectivity of the model set restricted between symmetric levels.

    For each level t the model set is cut down to the columns with
    t < v < 1 - t, interfaces whose declared limits leave that band are
    severed, and the restriction must be one essential piece. ``overall``
    (and truthiness) requires every level to pass.
    """

    levels: tuple[float, ...]
    passed: tuple[bool, ...]
    overall: bool

    def __bool__(self) -> bool:
        return self.overall


def default_levels(p: Profile) -> tuple[float, ...]:
    """Three decreasing levels fitted under the profile's value range.

    The largest level is half the distance from the G-values to {0, 1}
    (capped at 1/4), so even the coarsest restriction keeps every G-cell.
    """
    margins = [min(v, 1.0 - v) for v in (p.value(c) for c in p.g_cells())]
    if not margins:
        return (0.25,)
    b = min(0.25, min(margins) / 2.0)
    return (b, b / 4.0, b / 16.0)


def check_pino(p: Profile, levels: Optional[Sequence[float]] = None) -> LevelRestrictionReport:
    """Level-restriction connectivity check (sufficient for rigidity).

    With the default levels, which keep every cell with 0 < v < 1 while
    severing at least every blocked interface, a pass implies rigidity:
    the restricted piece graph is a subgraph of the scene graph on the
    same cells. Explicit levels trade that guarantee for control: a
    coarse level restricts to fewer columns and can pass or fail on its
    own terms. The converse fails either way; rigid profiles with tall
    thin features fail every reasonable level choice.
    """
    if levels is None:
        levels = default_levels(p)
    ts = tuple(float(t) for t in levels)
    if not ts:
        raise ProfileError("need at least one level")
    for t in ts:
        if math.isnan(t) or not 0.0 < t < 0.5:
            raise ProfileError(f"level {t!r} outside (0, 1/2)")
    for a, b in zip(ts, ts[1:]):
        if not b < a:
            raise ProfileError("levels must be strictly decreasing")
    f = from_profile(p)
    passed = []
    for t in ts:
        keep = [cid for cid in p.grid.cells() if t < p.value(cid) < 1.0 - t]
        severed = [
            a.facet for a in p.annotations if a.wedge <= t or a.vee >= 1.0 - t
        ]
        passed.append(indecomposable(restrict(f, keep), severed))
    return LevelRestrictionReport(
        levels=ts, passed=tuple(passed), overall=all(passed)
    )


@dataclass(frozen=True)
class ComplementSplitReport:
    """Indecomposability of the model set and of its complement."""

    set_indecomposable: bool
    complement_indecomposable: bool
    overall: bool

    def __bool__(self) -> bool:
        return self.overall


def check_gino(p: Profile) -> ComplementSplitReport:
    """Two-sided indecomposability check for 1-D bases (sufficient for rigidity).

    The model set must be one essential piece with interfaces pinched to 0
    severed, and its complement one essential piece with interfaces
    saturated at 1 severed. Either failure leaves room for an essential
    disconnection, but a failure alone does not certify one: the check is
    sufficient, not necessary.
    """
    if p.grid.base_dim != 1:
        raise ProfileError("complement split check needs a 1-D base")
    f = from_profile(p)
    severed_low = [a.facet for a in p.annotations if a.wedge == 0.0]
    severed_high = [a.facet for a in p.annotations if a.vee == 1.0]
    set_ok = indecomposable(f, severed_low)
    comp_ok = complement_indecomposable(f, severed_high)
    return ComplementSplitReport(
        set_indecomposable=set_ok,
        complement_indecomposable=comp_ok,
        overall=set_ok and comp_ok,
    )
