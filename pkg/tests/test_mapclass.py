import random

import pytest
from hypothesis import given, strategies as st

from fareyarc import (
    INFINITY,
    FareyEdge,
    FareyTriangle,
    FixedEdge,
    FixedTriangle,
    MappingClass,
    Periodic,
    PseudoAnosov,
    QuadraticIrrational,
    Reducible,
    Slope,
    TrivialAction,
    compare_boundary,
    enumerate_slopes,
    extend_axis,
    intersection_number,
)
from fareyarc.sweep import random_mapping_classes

S = Slope


def random_slope(rng, size=40):
    while True:
        p, q = rng.randint(-size, size), rng.randint(0, size)
        if (p, q) != (0, 0):
            return Slope(p, q)


class TestConstruction:
    def test_identity(self):
        assert MappingClass.identity() == MappingClass(1, 0, 0, 1)

    def test_determinant_checked(self):
        with pytest.raises(ValueError):
            MappingClass(1, 1, 1, 0)

    def test_parse_and_str(self):
        m = MappingClass.parse("2,1;1,1")
        assert (m.a, m.b, m.c, m.d) == (2, 1, 1, 1)
        assert str(m) == "2,1;1,1"
        assert MappingClass.parse(" -1 , 0 ; 0 , -1 ") == MappingClass(-1, 0, 0, -1)
        for bad in ("2,1;1", "a,b;c,d", "2 1;1 1", "1,0,0,1"):
            with pytest.raises(ValueError):
                MappingClass.parse(bad)

    def test_psl_normalization(self):
        assert MappingClass(-2, -1, -1, -1).psl_rep == MappingClass(2, 1, 1, 1)
        assert MappingClass(2, 1, 1, 1).psl_rep == MappingClass(2, 1, 1, 1)
        assert MappingClass(0, 1, -1, 0).psl_rep == MappingClass(0, -1, 1, 0)

    def test_matmul_and_inverse(self):
        m = MappingClass(2, 1, 1, 1)
        assert m @ m.inverse() == MappingClass.identity()
        assert m @ m == MappingClass(5, 3, 3, 2)


class TestAction:
    def test_examples(self):
        m = MappingClass(2, 1, 1, 1)
        assert m.act(INFINITY) == S(2, 1)
        assert m.act(S(0, 1)) == S(1, 1)
        assert MappingClass(1, 1, -1, 0).act(S(-1, 1)) == S(0, 1)

    def test_preserves_intersection_number(self):
        rng = random.Random(4242)
        mats = random_mapping_classes(50, 14, seed=11)
        for _ in range(1000):
            m = rng.choice(mats)
            a, b = random_slope(rng), random_slope(rng)
            assert intersection_number(m.act(a), m.act(b)) == intersection_number(a, b)

    def test_negation_acts_identically(self):
        rng = random.Random(5)
        for m in random_mapping_classes(30, 12, seed=3):
            s = random_slope(rng)
            assert m.act(s) == (-m).act(s)

    def test_edge_image(self):
        m = MappingClass(2, 1, 1, 1)
        e = FareyEdge(S(0, 1), INFINITY)
        assert m.act_edge(e) == FareyEdge(S(1, 1), S(2, 1))


class TestClassify:
    def test_examples(self):
        assert MappingClass(1, 5, 0, 1).classify() == Reducible(
            n=5, fixed_slope=INFINITY, conjugator=MappingClass.identity()
        )
        cls = MappingClass(2, 1, 1, 1).classify()
        assert isinstance(cls, PseudoAnosov)
        assert cls.attracting == QuadraticIrrational(1, 1, 5, 2)
        assert cls.repelling == QuadraticIrrational(1, -1, 5, 2)
        assert MappingClass(1, 1, -1, 0).classify() == Periodic(psl_order=3)
        assert MappingClass(-1, 0, 0, -1).classify() == TrivialAction()

    def test_period_three_cubes_to_identity(self):
        m = MappingClass(1, 1, -1, 0)
        assert (m @ m @ m).classify() == TrivialAction()

    def test_kind_is_conjugation_invariant(self):
        rng = random.Random(17)
        mats = random_mapping_classes(40, 12, seed=23)
        conjs = random_mapping_classes(40, 12, seed=29)
        for _ in range(60):
            m, g = rng.choice(mats), rng.choice(conjs)
            c1, c2 = m.classify(), (g @ m @ g.inverse()).classify()
            assert type(c1) is type(c2)
            if isinstance(c1, Periodic):
                assert c1.psl_order == c2.psl_order
            if isinstance(c1, Reducible):
                assert abs(c1.n) == abs(c2.n)


class TestFixedBoundaryPoints:
    def test_golden_ratio(self):
        rep, att = MappingClass(2, 1, 1, 1).fixed_boundary_points()
        assert att == QuadraticIrrational(1, 1, 5, 2)
        assert rep == QuadraticIrrational(1, -1, 5, 2)
        # exact bracketing: rep < 3/2 < att
        assert compare_boundary(rep, S(3, 2)) == -1
        assert compare_boundary(att, S(3, 2)) == 1

    def test_transposed(self):
        rep, att = MappingClass(1, 1, 1, 2).fixed_boundary_points()
        assert att == QuadraticIrrational(-1, 1, 5, 2)
        assert rep == QuadraticIrrational(-1, -1, 5, 2)

    def test_wrong_classification(self):
        with pytest.raises(ValueError):
            MappingClass(0, -1, 1, 0).fixed_boundary_points()

    @pytest.mark.parametrize(
        "mat", [MappingClass(2, 1, 1, 1), MappingClass(1, 1, 1, 2), MappingClass(5, 2, 2, 1)]
    )
    def test_even_iterates_of_zero_approach_attracting(self, mat):
        _, att = mat.fixed_boundary_points()
        m2 = mat @ mat
        seq = [S(0, 1)]
        for _ in range(8):
            seq.append(m2.act(seq[-1]))
        for prev, cur in zip(seq, seq[1:]):
            assert compare_boundary(prev, cur) == -1
            assert compare_boundary(cur, att) == -1


class TestParabolicNormalForm:
    def test_examples(self):
        assert MappingClass(1, 1, 0, 1).parabolic_normal_form() == (
            INFINITY, 1, MappingClass.identity()
        )
        fixed, n, conj = MappingClass(1, 0, -1, 1).parabolic_normal_form()
        assert fixed == S(0, 1) and n == 1
        assert conj.act(INFINITY) == S(0, 1)
        assert MappingClass(1, -3, 0, 1).parabolic_normal_form()[:2] == (INFINITY, -3)

    def test_conjugation_returns_shear(self):
        for m in random_mapping_classes(200, 14, seed=101):
            if not isinstance(m.classify(), Reducible):
                continue
            fixed, n, conj = m.parabolic_normal_form()
            assert m.act(fixed) == fixed
            assert conj.inverse() @ m.psl_rep @ conj == MappingClass(1, n, 0, 1)

    def test_wrong_classification(self):
        with pytest.raises(ValueError):
            MappingClass(2, 1, 1, 1).parabolic_normal_form()
        with pytest.raises(ValueError):
            MappingClass.identity().parabolic_normal_form()


class TestEllipticFixedCell:
    def test_quarter_turn_fixes_an_edge(self):
        cell = MappingClass(0, -1, 1, 0).elliptic_fixed_cell()
        assert cell == FixedEdge(FareyEdge(S(0, 1), INFINITY))

    def test_order_three_examples(self):
        cell = MappingClass(1, 1, -1, 0).elliptic_fixed_cell()
        assert cell == FixedTriangle(FareyTriangle(S(0, 1), S(-1, 1), INFINITY))
        cell = MappingClass(0, -1, 1, -1).elliptic_fixed_cell()
        assert cell == FixedTriangle(FareyTriangle(S(0, 1), S(1, 1), INFINITY))

    def test_cell_kind_matches_order(self):
        for m in random_mapping_classes(300, 14, seed=55):
            cls = m.classify()
            if not isinstance(cls, Periodic):
                continue
            cell = m.elliptic_fixed_cell()
            if cls.psl_order == 2:
                assert isinstance(cell, FixedEdge)
                u, w = cell.edge.endpoints
                assert m.act(u) == w and m.act(w) == u
            else:
                assert isinstance(cell, FixedTriangle)
                verts = set(cell.triangle.vertices)
                assert {m.act(v) for v in verts} == verts

    def test_order_returns_every_slope(self):
        universe = enumerate_slopes(10)
        for m in (MappingClass(0, -1, 1, 0), MappingClass(1, 1, -1, 0), MappingClass(0, -1, 1, -1)):
            order = m.classify().psl_order
            for s in universe:
                x = s
                for _ in range(order):
                    x = m.act(x)
                assert x == s

    def test_wrong_classification(self):
        with pytest.raises(ValueError):
            MappingClass(1, 1, 0, 1).elliptic_fixed_cell()


class TestAxis:
    def test_golden_example(self, fig8):
        ax = fig8.axis()
        assert ax.period == 2
        assert ax.edges == (
            FareyEdge(S(0, 1), INFINITY),
            FareyEdge(S(1, 1), INFINITY),
            FareyEdge(S(1, 1), S(2, 1)),
        )
        assert ax.side_form == (1, -1, -1)
        assert ax.form_value(S(0, 1)) == -1
        assert ax.form_value(INFINITY) == 1

    def test_transposed_starts_at_base_edge(self):
        ax = MappingClass(1, 1, 1, 2).axis()
        assert ax.edges[0] == FareyEdge(S(0, 1), INFINITY)
        assert ax.form_value(INFINITY) == 1 and ax.form_value(S(0, 1)) == -1

    def test_square_doubles_period_on_same_line(self, fig8):
        ax = fig8.axis()
        ax2 = (fig8 @ fig8).axis()
        assert ax2.period == 4
        assert set(ax.edges) <= set(ax2.edges)

    def test_every_edge_separates(self):
        for m in random_mapping_classes(120, 14, seed=77):
            if not isinstance(m.classify(), PseudoAnosov):
                continue
            ax = m.axis()
            for e in ax.edges:
                assert ax.side(e.low) != ax.side(e.high)

    def test_form_never_vanishes_on_slopes(self):
        rng = random.Random(321)
        for m in random_mapping_classes(40, 14, seed=88):
            if not isinstance(m.classify(), PseudoAnosov):
                continue
            ax = m.axis()
            for _ in range(25):
                assert ax.form_value(random_slope(rng)) != 0

    def test_action_shifts_walk_by_one_period(self):
        checked = 0
        for m in random_mapping_classes(400, 12, seed=99):
            if not isinstance(m.classify(), PseudoAnosov):
                continue
            ax = m.axis()
            extended = extend_axis(ax, ax.period)
            for i, e in enumerate(ax.edges):
                assert m.act_edge(e) == extended[i + ax.period]
            checked += 1
            if checked >= 40:
                break
        assert checked == 40

    def test_wrong_classification(self):
        with pytest.raises(ValueError):
            MappingClass(1, 1, 0, 1).axis()


class TestAxisSides:
    def test_same_side_examples(self, fig8):
        ax = fig8.axis()
        assert ax.same_side(S(0, 1), S(1, 1))
        assert not ax.same_side(S(0, 1), INFINITY)
        assert ax.same_side(S(1, 2), S(1, 2))

    def test_order_examples(self, fig8):
        ax = fig8.axis()
        assert ax.order_less(S(0, 1), S(1, 1))
        assert not ax.order_less(S(1, 1), S(0, 1))
        assert ax.order_less(INFINITY, S(2, 1))

    def test_order_rejects_opposite_sides(self, fig8):
        ax = fig8.axis()
        with pytest.raises(ValueError):
            ax.order_less(S(0, 1), INFINITY)

    def test_order_preserved_by_action(self, fig8):
        ax = fig8.axis()
        rng = random.Random(7)
        hits = 0
        while hits < 200:
            x, y = random_slope(rng), random_slope(rng)
            if x == y or not ax.same_side(x, y):
                continue
            hits += 1
            assert ax.order_less(x, y) == ax.order_less(fig8.act(x), fig8.act(y))
