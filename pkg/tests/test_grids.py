import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ehrhard import Facet, Grid, GridError, gamma1, gauss_weight
from ehrhard.intervals import Interval

INF = math.inf


class TestConstruction:
    def test_accepts_one_or_two_axes(self):
        assert Grid((-INF, 0.0, INF)).base_dim == 1
        assert Grid((-INF, 0.0, INF), (0.0, 1.0)).base_dim == 2

    def test_rejects_zero_or_three_axes(self):
        with pytest.raises(GridError):
            Grid()
        with pytest.raises(GridError):
            Grid((0.0, 1.0), (0.0, 1.0), (0.0, 1.0))

    def test_rejects_short_axis(self):
        with pytest.raises(GridError):
            Grid((0.0,))

    def test_rejects_nan(self):
        with pytest.raises(GridError):
            Grid((0.0, float("nan"), 1.0))

    def test_rejects_unsorted(self):
        with pytest.raises(GridError):
            Grid((0.0, 2.0, 1.0))
        with pytest.raises(GridError):
            Grid((0.0, 0.0, 1.0))

    def test_rejects_interior_infinity(self):
        with pytest.raises(GridError):
            Grid((0.0, INF, 1.0))
        with pytest.raises(GridError):
            Grid((-INF, -INF, 1.0))

    def test_shape_and_axes(self):
        g = Grid((-INF, -1.0, 1.0, INF), (0.0, 0.5, 1.0))
        assert g.shape == (3, 2)
        assert g.axes == ((-INF, -1.0, 1.0, INF), (0.0, 0.5, 1.0))

    def test_equality_and_hash(self):
        a = Grid((-INF, 0.0, INF))
        b = Grid((-INF, 0.0, INF))
        c = Grid((-INF, 1.0, INF))
        assert a == b and hash(a) == hash(b)
        assert a != c
        assert a != "not a grid"

    def test_regular_axis(self):
        bps = Grid.regular(-2.0, 2.0, 4)
        assert bps == (-2.0, -1.0, 0.0, 1.0, 2.0)
        assert bps[0] == -2.0 and bps[-1] == 2.0

    def test_regular_rejects_empty(self):
        with pytest.raises(GridError):
            Grid.regular(0.0, 1.0, 0)


class TestCells:
    def test_enumeration_order(self):
        g1 = Grid((-INF, 0.0, 1.0, INF))
        assert list(g1.cells()) == [(0,), (1,), (2,)]
        g2 = Grid((0.0, 1.0, 2.0), (0.0, 1.0))
        assert list(g2.cells()) == [(0, 0), (1, 0)]

    def test_check_cell(self):
        g = Grid((-INF, 0.0, INF))
        assert g.check_cell((1,)) == (1,)
        for bad in [(2,), (-1,), (0, 0)]:
            with pytest.raises(GridError):
                g.check_cell(bad)

    def test_cell_box(self):
        g = Grid((-INF, 0.0, INF), (0.0, 1.0, 3.0))
        assert g.cell_box((0, 1)) == (Interval(-INF, 0.0), Interval(1.0, 3.0))

    def test_cell_gauss_matches_interval_mass(self):
        g = Grid((-INF, -1.0, 1.0, INF))
        assert g.cell_gauss((1,)) == pytest.approx(0.6826894921370859, rel=1e-15)
        assert g.cell_gauss((0,)) == g.cell_gauss((2,))

    def test_cell_gauss_product_rule(self):
        g = Grid((-INF, 0.0, INF), (-INF, 0.0, INF))
        assert g.cell_gauss((0, 1)) == 0.25

    def test_cell_masses_fill_the_line(self):
        g = Grid((-INF, -1.5, -0.25, 0.5, 2.0, INF))
        total = math.fsum(g.cell_gauss(c) for c in g.cells())
        assert total == pytest.approx(1.0, abs=1e-15)

    def test_cell_lebesgue(self):
        g = Grid((0.0, 1.0, 3.0), (0.0, 2.0))
        assert g.cell_lebesgue((1, 0)) == 4.0
        assert Grid((-INF, 0.0, INF)).cell_lebesgue((0,)) == INF


class TestFacets:
    def test_ordering(self):
        assert Facet(0, 1, 0) < Facet(0, 2, 0) < Facet(1, 0, 0)
        assert sorted([Facet(1, 0, 1), Facet(0, 3, 0)])[0] == Facet(0, 3, 0)

    def test_enumeration_skips_infinite_lines(self):
        g = Grid((-INF, 0.0, 1.0, INF))
        assert list(g.facets()) == [Facet(0, 1, 0), Facet(0, 2, 0)]
        assert list(g.facets(interior_only=True)) == [Facet(0, 1, 0), Facet(0, 2, 0)]

    def test_enumeration_boundary_vs_interior(self):
        g = Grid((0.0, 1.0, 2.0))
        assert list(g.facets()) == [Facet(0, 0, 0), Facet(0, 1, 0), Facet(0, 2, 0)]
        assert list(g.facets(interior_only=True)) == [Facet(0, 1, 0)]

    def test_two_dimensional_enumeration(self):
        g = Grid((0.0, 1.0), (0.0, 1.0, 2.0))
        got = set(g.facets())
        want = {
            Facet(0, 0, 0), Facet(0, 0, 1), Facet(0, 1, 0), Facet(0, 1, 1),
            Facet(1, 0, 0), Facet(1, 1, 0), Facet(1, 2, 0),
        }
        assert got == want

    def test_facet_cells(self):
        g = Grid((-INF, 0.0, 1.0, INF))
        assert g.facet_cells(Facet(0, 1, 0)) == ((0,), (1,))
        g2 = Grid((0.0, 1.0, 2.0))
        assert g2.facet_cells(Facet(0, 0, 0)) == (None, (0,))
        assert g2.facet_cells(Facet(0, 2, 0)) == ((1,), None)

    def test_facet_cells_two_dimensional(self):
        g = Grid((0.0, 1.0, 2.0), (0.0, 1.0, 2.0))
        assert g.facet_cells(Facet(0, 1, 1)) == ((0, 1), (1, 1))
        assert g.facet_cells(Facet(1, 1, 1)) == ((1, 0), (1, 1))

    def test_facet_validation(self):
        g = Grid((-INF, 0.0, INF))
        for bad in [Facet(1, 0, 0), Facet(0, 3, 0), Facet(0, 1, 1)]:
            with pytest.raises(GridError):
                g.facet_cells(bad)

    def test_coordinate_and_span(self):
        g = Grid((-INF, 0.5, INF))
        assert g.facet_coordinate(Facet(0, 1, 0)) == 0.5
        assert g.facet_span(Facet(0, 1, 0)) is None
        g2 = Grid((0.0, 1.0), (2.0, 3.0, 5.0))
        assert g2.facet_span(Facet(0, 0, 1)) == Interval(3.0, 5.0)
        assert g2.facet_span(Facet(1, 1, 0)) == Interval(0.0, 1.0)

    def test_facet_gauss_point(self):
        g = Grid((-INF, 0.0, 1.0, INF))
        assert g.facet_gauss(Facet(0, 1, 0)) == 1.0
        assert g.facet_gauss(Facet(0, 2, 0)) == pytest.approx(
            math.exp(-0.5), rel=1e-15
        )

    def test_facet_gauss_segment(self):
        from ehrhard.intervals import IntervalSet

        g = Grid((-INF, 1.0, INF), (-1.0, 1.0))
        want = math.exp(-0.5) * gamma1(IntervalSet.of(-1.0, 1.0))
        assert g.facet_gauss(Facet(0, 1, 0)) == pytest.approx(want, rel=1e-14)

    def test_facet_lebesgue(self):
        g = Grid((-INF, 0.0, INF))
        assert g.facet_lebesgue(Facet(0, 1, 0)) == 1.0
        g2 = Grid((0.0, 1.0), (2.0, 4.5))
        assert g2.facet_lebesgue(Facet(0, 1, 0)) == 2.5


class TestRefinement:
    def test_refine_with_merges_breakpoints(self):
        a = Grid((-INF, 0.0, INF))
        b = Grid((-INF, -1.0, 0.0, 2.0, INF))
        assert a.refine_with(b) == b
        assert b.refine_with(a) == b

    def test_refine_dimension_mismatch(self):
        with pytest.raises(GridError):
            Grid((0.0, 1.0)).refine_with(Grid((0.0, 1.0), (0.0, 1.0)))

    def test_axis_parent(self):
        g = Grid((-INF, 0.0, 2.0, INF))
        assert g.axis_parent(0, -INF) == 0
        assert g.axis_parent(0, 0.0) == 1
        assert g.axis_parent(0, 1.0) == 1
        assert g.axis_parent(0, 2.0) == 2
        assert g.axis_parent(0, INF) is None

    @given(
        st.lists(
            st.floats(min_value=-3.0, max_value=3.0, allow_nan=False),
            min_size=2,
            max_size=6,
            unique=True,
        )
    )
    def test_refinement_preserves_total_mass(self, pts):
        bps = (-INF, *sorted(pts), INF)
        g = Grid(bps)
        total = math.fsum(g.cell_gauss(c) for c in g.cells())
        assert total == pytest.approx(1.0, abs=1e-14)

    def test_facet_gauss_matches_weight_helper(self):
        g = Grid((-INF, 0.7, INF))
        assert g.facet_gauss(Facet(0, 1, 0)) == gauss_weight(0.7)
