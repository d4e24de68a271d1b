"""JSON encodings for grids, interval sets, profiles, columnar sets, reports.

JSON has no infinities, so the sentinels ``"inf"`` and ``"-inf"`` stand in
for the infinite endpoints wherever a number is expected. Facets encode as
``[axis, line, lateral]``; on 1-D bases the shorthand ``[line]`` is
accepted on input. Cell values and sections nest by cell index: a flat
list for 1-D bases, a list of rows (first axis index outermost) for 2-D.
"""

from __future__ import annotations

import math
from typing import Any, Optional

from .columnar import ColumnarSet, PerimeterBreakdown
from .connectedness import PartitionCertificate, Scene, SpanningStructure
from .errors import FormatError
from .grids import Facet, Grid
from .intervals import IntervalSet
from .profiles import Profile, SingularAnnotation
from .rigidity import (
    ComplementSplitReport,
    EqualityCaseReport,
    LevelRestrictionReport,
    RigidityReport,
)

INF = math.inf


def encode_number(x: float) -> Any:
    if x == INF:
        return "inf"
    if x == -INF:
        return "-inf"
    return x


def decode_number(x: Any) -> float:
    if x == "inf":
        return INF
    if x == "-inf":
        return -INF
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise FormatError(f"expected a number or inf sentinel, got {x!r}")
    return float(x)


# ----------------------------------------------------------------------
# interval sets


def interval_set_to_json(s: IntervalSet) -> list[list[Any]]:
    return [[encode_number(iv.lo), encode_number(iv.hi)] for iv in s]


def interval_set_from_json(data: Any) -> IntervalSet:
    if not isinstance(data, list):
        raise FormatError("interval set must be a list of [lo, hi] pairs")
    pairs = []
    for item in data:
        if not isinstance(item, list) or len(item) != 2:
            raise FormatError(f"bad interval {item!r}, expected [lo, hi]")
        pairs.append((decode_number(item[0]), decode_number(item[1])))
    return IntervalSet.from_pairs(pairs)


# ----------------------------------------------------------------------
# grids


def grid_to_json(g: Grid) -> dict[str, Any]:
    return {
        "base_dim": g.base_dim,
        "breakpoints": [[encode_number(b) for b in axis] for axis in g.axes],
    }


def grid_from_json(data: Any) -> Grid:
    if not isinstance(data, dict) or "breakpoints" not in data:
        raise FormatError("grid must be an object with a 'breakpoints' list")
    bps = data["breakpoints"]
    if not isinstance(bps, list) or not bps:
        raise FormatError("'breakpoints' must be a non-empty list of axes")
    axes = []
    for axis in bps:
        if not isinstance(axis, list):
            raise FormatError("each axis must be a list of breakpoints")
        axes.append([decode_number(b) for b in axis])
    if "base_dim" in data and data["base_dim"] != len(axes):
        raise FormatError("base_dim does not match the number of axes")
    return Grid(*axes)


# ----------------------------------------------------------------------
# facets


def facet_to_json(f: Facet) -> list[int]:
    return [f.axis, f.line, f.lateral]


def facet_from_json(data: Any, base_dim: int) -> Facet:
    if not isinstance(data, list) or not all(isinstance(x, int) for x in data):
        raise FormatError(f"bad facet {data!r}")
    if len(data) == 1 and base_dim == 1:
        return Facet(0, data[0], 0)
    if len(data) == 3:
        return Facet(data[0], data[1], data[2])
    raise FormatError(f"bad facet {data!r}, expected [axis, line, lateral]")


# ----------------------------------------------------------------------
# profiles


def _nest(grid: Grid, flat: dict) -> Any:
    if grid.base_dim == 1:
        return [flat[(i,)] for i in range(grid.shape[0])]
    nx, ny = grid.shape
    return [[flat[(i, j)] for j in range(ny)] for i in range(nx)]


def _unnest(grid: Grid, data: Any, what: str) -> dict:
    out = {}
    try:
        if grid.base_dim == 1:
            (n,) = grid.shape
            if len(data) != n:
                raise FormatError(f"{what}: expected {n} entries, got {len(data)}")
            for i in range(n):
                out[(i,)] = data[i]
        else:
            nx, ny = grid.shape
            if len(data) != nx:
                raise FormatError(f"{what}: expected {nx} rows, got {len(data)}")
            for i in range(nx):
                if len(data[i]) != ny:
                    raise FormatError(f"{what}: row {i} has {len(data[i])} entries, expected {ny}")
                for j in range(ny):
                    out[(i, j)] = data[i][j]
    except TypeError as exc:
        raise FormatError(f"{what}: malformed nesting") from exc
    return out


def profile_to_json(p: Profile) -> dict[str, Any]:
    doc = {
        "base_dim": p.grid.base_dim,
        "breakpoints": [[encode_number(b) for b in axis] for axis in p.grid.axes],
        "values": _nest(p.grid, p.values),
    }
    if p.annotations:
        doc["annotations"] = [
            {"facet": facet_to_json(a.facet), "wedge": a.wedge, "vee": a.vee}
            for a in p.annotations
        ]
    return doc


def profile_from_json(data: Any) -> Profile:
    if not isinstance(data, dict):
        raise FormatError("profile must be a JSON object")
    grid = grid_from_json(data)
    raw = _unnest(grid, data.get("values"), "values")
    values = {cid: decode_number(v) for cid, v in raw.items()}
    annotations = []
    for item in data.get("annotations", ()):
        if not isinstance(item, dict) or "facet" not in item:
            raise FormatError(f"bad annotation {item!r}")
        annotations.append(
            SingularAnnotation(
                facet=facet_from_json(item["facet"], grid.base_dim),
                wedge=decode_number(item.get("wedge")),
                vee=decode_number(item.get("vee")),
            )
        )
    return Profile(grid, values, annotations)


# ----------------------------------------------------------------------
# columnar sets


def columnar_to_json(e: ColumnarSet) -> dict[str, Any]:
    sections = {cid: interval_set_to_json(e.section(cid)) for cid in e.grid.cells()}
    return {"grid": grid_to_json(e.grid), "sections": _nest(e.grid, sections)}


def columnar_from_json(data: Any) -> ColumnarSet:
    if not isinstance(data, dict) or "grid" not in data:
        raise FormatError("columnar set must be an object with 'grid' and 'sections'")
    grid = grid_from_json(data["grid"])
    raw = _unnest(grid, data.get("sections"), "sections")
    sections = {cid: interval_set_from_json(s) for cid, s in raw.items()}
    return ColumnarSet(grid, sections)


# ----------------------------------------------------------------------
# report documents (output only)


def certificate_to_json(c: PartitionCertificate) -> dict[str, Any]:
    return {
        "plus_cells": [list(x) for x in c.plus_cells],
        "minus_cells": [list(x) for x in c.minus_cells],
        "interface_facets": [facet_to_json(f) for f in c.interface_facets],
        "unblocked_interface_measure": c.unblocked_interface_measure,
        "plus_gauss": c.plus_gauss,
        "minus_gauss": c.minus_gauss,
    }


def spanning_to_json(s: SpanningStructure) -> dict[str, Any]:
    return {
        "cells": [list(x) for x in s.cells],
        "tree_facets": [facet_to_json(f) for f in s.tree_facets],
    }


def breakdown_to_json(b: PerimeterBreakdown) -> dict[str, Any]:
    return {
        "horizontal": [
            {
                "cell": list(face.cell),
                "level": face.level,
                "normal": face.normal,
                "gauss": face.gauss,
                "lebesgue": encode_number(face.lebesgue),
            }
            for face in b.horizontal
        ],
        "vertical": [
            {
                "facet": facet_to_json(face.facet),
                "section_symdiff": face.section_symdiff,
                "gauss": face.gauss,
                "lebesgue": encode_number(face.lebesgue),
                "normal": face.normal,
            }
            for face in b.vertical
        ],
        "horizontal_gauss": b.horizontal_gauss,
        "vertical_gauss": b.vertical_gauss,
        "total_gauss": b.total_gauss,
        "total_lebesgue": encode_number(b.total_lebesgue),
    }


def scene_to_json(s: Scene) -> dict[str, Any]:
    return {
        "kind": s.kind,
        "base_dim": s.base_dim,
        "cells": [
            {
                "id": list(c.id),
                "value": c.value,
                "in_g": c.in_g,
                "gauss": c.gauss,
                "lebesgue": encode_number(c.lebesgue),
            }
            for c in s.cells
        ],
        "facets": [
            {
                "facet": facet_to_json(f.facet),
                "cells": [list(f.cells[0]), list(f.cells[1])],
                "gauss": f.gauss,
                "wedge": f.wedge,
                "vee": f.vee,
                "blocked": f.blocked,
                "annotated": f.annotated,
            }
            for f in s.facets
        ],
    }


def rigidity_report_to_json(r: RigidityReport) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "verdict": r.verdict.value,
        "method": r.method,
        "annotated": r.annotated,
        "partitions_checked": r.partitions_checked,
        "notes": list(r.notes),
    }
    if r.certificate is not None:
        doc["certificate"] = certificate_to_json(r.certificate)
    if r.connectivity is not None:
        doc["connectivity"] = spanning_to_json(r.connectivity)
    if r.counterexample is not None:
        doc["counterexample"] = columnar_to_json(r.counterexample)
    if r.perimeter_check is not None:
        doc["perimeter_check"] = {
            "candidate": r.perimeter_check.candidate,
            "symmetral": r.perimeter_check.symmetral,
            "difference": r.perimeter_check.difference,
        }
    if r.symdiff_check is not None:
        doc["symdiff_check"] = {
            "vs_symmetral": r.symdiff_check.vs_symmetral,
            "vs_reflected": r.symdiff_check.vs_reflected,
        }
    return doc


def equality_report_to_json(r: EqualityCaseReport) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "max_distribution_error": r.max_distribution_error,
        "is_distributed": r.is_distributed,
        "perimeter_check": {
            "candidate": r.perimeter_check.candidate,
            "symmetral": r.perimeter_check.symmetral,
            "difference": r.perimeter_check.difference,
        },
        "equality": r.equality,
        "halfline_total": r.halfline_total,
        "symdiff_check": {
            "vs_symmetral": r.symdiff_check.vs_symmetral,
            "vs_reflected": r.symdiff_check.vs_reflected,
        },
        "passed": r.passed,
    }
    if r.classification is not None:
        doc["classification"] = {
            ",".join(map(str, cid)): kind.value
            for cid, kind in sorted(r.classification.labels.items())
        }
    return doc


def level_report_to_json(r: LevelRestrictionReport) -> dict[str, Any]:
    return {
        "levels": list(r.levels),
        "passed": list(r.passed),
        "overall": r.overall,
    }


def complement_report_to_json(r: ComplementSplitReport) -> dict[str, Any]:
    return {
        "set_indecomposable": r.set_indecomposable,
        "complement_indecomposable": r.complement_indecomposable,
        "overall": r.overall,
    }
