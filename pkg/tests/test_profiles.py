import math
import random

import pytest

from ehrhard import (
    Facet,
    Grid,
    IntervalSet,
    Profile,
    ProfileError,
    SingularAnnotation,
    approx_limits,
    distribution,
    f_limits,
    from_profile,
    g_boundary_gauss,
    gauss_perimeter,
    gauss_volume,
    jump_interfaces,
    psi,
    scene,
)
from conftest import random_profile_1d

INF = math.inf

THREE = Grid((-INF, -1.0, 1.0, INF))


def three_column(a, b, c, annotations=()):
    return Profile(THREE, {(0,): a, (1,): b, (2,): c}, annotations)


class TestAnnotation:
    def test_validation(self):
        with pytest.raises(ProfileError):
            SingularAnnotation(Facet(0, 1, 0), 0.6, 0.4)
        with pytest.raises(ProfileError):
            SingularAnnotation(Facet(0, 1, 0), -0.1, 0.5)
        with pytest.raises(ProfileError):
            SingularAnnotation(Facet(0, 1, 0), 0.0, 1.5)
        with pytest.raises(ProfileError):
            SingularAnnotation(Facet(0, 1, 0), float("nan"), 0.5)

    def test_coercion(self):
        a = SingularAnnotation(Facet(0, 1, 0), 0, 1)
        assert a.wedge == 0.0 and a.vee == 1.0


class TestProfileConstruction:
    def test_requires_every_cell(self):
        with pytest.raises(ProfileError):
            Profile(THREE, {(0,): 0.5, (1,): 0.5})

    def test_rejects_alien_cells(self):
        with pytest.raises(ProfileError):
            Profile(THREE, {(0,): 0.5, (1,): 0.5, (2,): 0.5, (3,): 0.5})

    def test_rejects_out_of_range(self):
        for bad in (-0.1, 1.1, float("nan")):
            with pytest.raises(ProfileError):
                three_column(bad, 0.5, 0.5)

    def test_rejects_non_annotation(self):
        with pytest.raises(ProfileError):
            three_column(0.5, 0.5, 0.5, annotations=[(0, 1, 0)])

    def test_rejects_boundary_annotation(self):
        g = Grid((0.0, 1.0, 2.0))
        ann = SingularAnnotation(Facet(0, 0, 0), 0.0, 0.5)
        with pytest.raises(ProfileError):
            Profile(g, {(0,): 0.5, (1,): 0.5}, [ann])

    def test_rejects_duplicate_annotation(self):
        anns = [
            SingularAnnotation(Facet(0, 1, 0), 0.0, 0.5),
            SingularAnnotation(Facet(0, 1, 0), 0.1, 0.5),
        ]
        with pytest.raises(ProfileError):
            three_column(0.5, 0.5, 0.5, annotations=anns)

    def test_annotations_sorted(self):
        anns = [
            SingularAnnotation(Facet(0, 2, 0), 0.1, 0.2),
            SingularAnnotation(Facet(0, 1, 0), 0.3, 0.4),
        ]
        p = three_column(0.5, 0.5, 0.5, annotations=anns)
        assert [a.facet for a in p.annotations] == [Facet(0, 1, 0), Facet(0, 2, 0)]
        assert p.annotation(Facet(0, 1, 0)).vee == 0.4
        assert p.annotation(Facet(0, 2, 0)).wedge == 0.1

    def test_value_accessor(self):
        p = three_column(0.3, 1.0, 0.6)
        assert p.value((1,)) == 1.0
        with pytest.raises(ProfileError):
            p.value((5,))

    def test_g_cells(self):
        assert three_column(0.3, 1.0, 0.6).g_cells() == [(0,), (2,)]
        assert three_column(0.0, 0.0, 0.0).g_cells() == []

    def test_equality(self):
        assert three_column(0.3, 1.0, 0.6) == three_column(0.3, 1.0, 0.6)
        assert three_column(0.3, 1.0, 0.6) != three_column(0.3, 0.0, 0.6)
        assert three_column(0.3, 1.0, 0.6) != "not a profile"


class TestSplitAndRefine:
    def test_split_copies_values(self):
        p = three_column(0.3, 1.0, 0.6)
        q = p.split_cell(0, 0.0)
        assert q.grid.axes[0] == (-INF, -1.0, 0.0, 1.0, INF)
        assert [q.value((i,)) for i in range(4)] == [0.3, 1.0, 1.0, 0.6]

    def test_split_at_existing_breakpoint_is_identity(self):
        p = three_column(0.3, 1.0, 0.6)
        assert p.split_cell(0, 1.0) is p

    def test_split_outside_span_rejected(self):
        p = Profile(Grid((0.0, 1.0)), {(0,): 0.5})
        with pytest.raises(ProfileError):
            p.split_cell(0, 2.0)

    def test_split_reindexes_annotations(self):
        ann = SingularAnnotation(Facet(0, 2, 0), 0.0, 0.5)
        p = three_column(0.3, 1.0, 0.6, annotations=[ann])
        q = p.split_cell(0, 0.0)
        assert [a.facet for a in q.annotations] == [Facet(0, 3, 0)]
        r = p.split_cell(0, 1.5)
        assert [a.facet for a in r.annotations] == [Facet(0, 2, 0)]

    def test_split_duplicates_lateral_annotation(self):
        g = Grid((0.0, 1.0, 2.0), (0.0, 1.0))
        vals = {(0, 0): 0.4, (1, 0): 0.6}
        ann = SingularAnnotation(Facet(0, 1, 0), 0.0, 0.4)
        p = Profile(g, vals, [ann])
        q = p.split_cell(1, 0.5)
        assert [a.facet for a in q.annotations] == [Facet(0, 1, 0), Facet(0, 1, 1)]

    def test_split_is_a_null_modification(self):
        p = three_column(0.3, 1.0, 0.6)
        q = p.split_cell(0, 0.25)
        assert gauss_volume(from_profile(q)) == pytest.approx(
            gauss_volume(from_profile(p)), abs=1e-14
        )
        assert gauss_perimeter(from_profile(q)).total_gauss == pytest.approx(
            gauss_perimeter(from_profile(p)).total_gauss, rel=1e-12
        )
        assert len(jump_interfaces(q)) == len(jump_interfaces(p))

    def test_refined(self):
        p = Profile(Grid((-INF, -1.0, 1.0, INF)), {(0,): 0.2, (1,): 0.5, (2,): 0.8})
        q = p.refined(0.5)
        widths = [
            b - a
            for a, b in zip(q.grid.axes[0], q.grid.axes[0][1:])
            if not math.isinf(a) and not math.isinf(b)
        ]
        assert all(w <= 0.5 + 1e-12 for w in widths)
        assert q.value((0,)) == 0.2 and q.value((q.grid.shape[0] - 1,)) == 0.8

    def test_refined_rejects_bad_width(self):
        with pytest.raises(ProfileError):
            three_column(0.3, 1.0, 0.6).refined(0.0)


class TestLimits:
    def test_exactly_one_locus(self):
        p = three_column(0.3, 1.0, 0.6)
        with pytest.raises(ProfileError):
            approx_limits(p)
        with pytest.raises(ProfileError):
            approx_limits(p, cell=(0,), facet=Facet(0, 1, 0))

    def test_cell_limits(self):
        p = three_column(0.3, 1.0, 0.6)
        assert approx_limits(p, cell=(0,)) == (0.3, 0.3)

    def test_facet_limits(self):
        p = three_column(0.3, 1.0, 0.6)
        assert approx_limits(p, facet=Facet(0, 1, 0)) == (0.3, 1.0)
        assert approx_limits(p, facet=Facet(0, 2, 0)) == (0.6, 1.0)

    def test_exterior_counts_as_zero(self):
        g = Grid((0.0, 1.0))
        p = Profile(g, {(0,): 0.7})
        assert approx_limits(p, facet=Facet(0, 0, 0)) == (0.0, 0.7)
        assert approx_limits(p, facet=Facet(0, 1, 0)) == (0.0, 0.7)

    def test_annotation_overrides(self):
        ann = SingularAnnotation(Facet(0, 1, 0), 0.0, 0.9)
        p = three_column(0.3, 1.0, 0.6, annotations=[ann])
        assert approx_limits(p, facet=Facet(0, 1, 0)) == (0.0, 0.9)

    def test_vertex_limits(self):
        g = Grid((0.0, 1.0, 2.0), (0.0, 1.0, 2.0))
        vals = {(i, j): 0.125 + 0.25 * (i + 2 * j) for i in range(2) for j in range(2)}
        p = Profile(g, vals)
        assert approx_limits(p, vertex=(1, 1)) == (0.125, 0.875)
        assert approx_limits(p, vertex=(0, 0)) == (0.125, 0.125)
        with pytest.raises(ProfileError):
            approx_limits(p, vertex=(5, 5))

    def test_vertex_needs_planar_base(self):
        with pytest.raises(ProfileError):
            approx_limits(three_column(0.3, 1.0, 0.6), vertex=(1, 1))

    def test_f_limits_swap_and_negate(self):
        p = three_column(0.3, 1.0, 0.6)
        lo, hi = f_limits(p, Facet(0, 1, 0))
        assert lo == psi(1.0) == -INF
        assert hi == psi(0.3)
        g = Grid((0.0, 1.0))
        q = Profile(g, {(0,): 0.0})
        assert f_limits(q, Facet(0, 0, 0)) == (INF, INF)


class TestJumpInterfaces:
    def test_exterior_jumps_included(self):
        p = Profile(Grid((0.0, 1.0)), {(0,): 0.7})
        jumps = jump_interfaces(p)
        assert [j.facet for j in jumps] == [Facet(0, 0, 0), Facet(0, 1, 0)]
        assert jumps[0].toward_upper and not jumps[1].toward_upper

    def test_equal_values_do_not_jump(self):
        p = three_column(0.5, 0.5, 0.5)
        assert jump_interfaces(p) == []

    def test_annotation_can_create_and_suppress_jumps(self):
        create = SingularAnnotation(Facet(0, 1, 0), 0.2, 0.8)
        p = three_column(0.5, 0.5, 0.5, annotations=[create])
        assert [j.facet for j in jump_interfaces(p)] == [Facet(0, 1, 0)]
        suppress = SingularAnnotation(Facet(0, 1, 0), 0.65, 0.65)
        q = three_column(0.3, 1.0, 0.6, annotations=[suppress])
        assert Facet(0, 1, 0) not in [j.facet for j in jump_interfaces(q)]

    def test_orientation(self):
        p = three_column(0.3, 1.0, 0.6)
        by_facet = {j.facet: j for j in jump_interfaces(p)}
        assert by_facet[Facet(0, 1, 0)].toward_upper is True
        assert by_facet[Facet(0, 2, 0)].toward_upper is False


class TestScene:
    def test_kind_validation(self):
        with pytest.raises(ProfileError):
            scene(three_column(0.3, 1.0, 0.6), kind="other")

    def test_g_membership(self):
        p = three_column(0.3, 1.0, 0.0)
        s = scene(p)
        flags = {c.id: c.in_g for c in s.cells}
        assert flags == {(0,): True, (1,): False, (2,): False}
        st = scene(p, kind="steiner")
        flags = {c.id: c.in_g for c in st.cells}
        assert flags == {(0,): True, (1,): True, (2,): False}

    def test_only_interior_g_to_g_facets(self):
        p = three_column(0.3, 1.0, 0.6)
        assert scene(p).facets == ()
        q = three_column(0.3, 0.5, 0.6)
        assert [f.facet for f in scene(q).facets] == [Facet(0, 1, 0), Facet(0, 2, 0)]

    def test_blocked_flags(self):
        pinch = SingularAnnotation(Facet(0, 1, 0), 0.0, 0.5)
        bulge = SingularAnnotation(Facet(0, 2, 0), 0.6, 1.0)
        p = three_column(0.3, 0.5, 0.6, annotations=[pinch, bulge])
        by_facet = {f.facet: f for f in scene(p).facets}
        assert by_facet[Facet(0, 1, 0)].blocked
        assert by_facet[Facet(0, 2, 0)].blocked
        st = {f.facet: f for f in scene(p, kind="steiner").facets}
        assert st[Facet(0, 1, 0)].blocked
        assert not st[Facet(0, 2, 0)].blocked

    def test_annotated_flag_and_measures(self):
        ann = SingularAnnotation(Facet(0, 1, 0), 0.3, 0.5)
        p = three_column(0.3, 0.5, 0.6, annotations=[ann])
        s = scene(p)
        by_facet = {f.facet: f for f in s.facets}
        assert by_facet[Facet(0, 1, 0)].annotated
        assert not by_facet[Facet(0, 2, 0)].annotated
        assert by_facet[Facet(0, 1, 0)].gauss == pytest.approx(math.exp(-0.5))
        cell = next(c for c in s.cells if c.id == (1,))
        assert cell.gauss == pytest.approx(0.6826894921370859, rel=1e-15)


class TestModelSets:
    def test_from_profile_extremes_exact(self):
        p = three_column(0.0, 1.0, 0.5)
        e = from_profile(p)
        assert e.section((0,)).is_empty
        assert e.section((1,)) == IntervalSet.line()
        assert e.section((2,)) == IntervalSet.above(0.0)

    def test_distribution_round_trip(self):
        rng = random.Random(25)
        for _ in range(25):
            p = random_profile_1d(rng)
            d = distribution(from_profile(p))
            for cid, v in p.values.items():
                assert d.value(cid) == pytest.approx(v, abs=1e-12)

    def test_distribution_clamps_overshoot(self):
        e = from_profile(three_column(0.0, 1.0, 0.5))
        assert distribution(e).value((1,)) == 1.0


class TestGBoundary:
    def test_three_column_boundary(self):
        p = three_column(0.3, 1.0, 0.6)
        assert g_boundary_gauss(p) == pytest.approx(2.0 * math.exp(-0.5), rel=1e-14)

    def test_no_g_no_boundary(self):
        assert g_boundary_gauss(three_column(0.0, 1.0, 0.0)) == 0.0

    def test_grid_edge_counts(self):
        p = Profile(Grid((0.0, 1.0, 2.0)), {(0,): 0.5, (1,): 0.0})
        want = math.exp(0.0) + math.exp(-0.5)
        assert g_boundary_gauss(p) == pytest.approx(want, rel=1e-14)
