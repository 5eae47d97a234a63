import pytest

from fareyarc import (
    INFINITY,
    MappingClass,
    Periodic,
    Provenance,
    PseudoAnosov,
    Reducible,
    Slope,
    check_class_bound,
    h_equivalent,
    is_solution,
    solve,
)
from fareyarc.sweep import random_mapping_classes

S = Slope


def class_containing(result, slope):
    for c in result.classes:
        if slope in c.members:
            return c
    raise AssertionError(f"{slope} not in any class of {result}")


class TestIsSolution:
    def test_examples(self, fig8):
        assert is_solution(fig8, S(2, 1))  # image 5/3 meets it once
        assert not is_solution(fig8, S(1, 2))  # image 4/3, intersection 5
        assert is_solution(MappingClass(1, 1, 0, 1), INFINITY)  # invariant slope


class TestSolve:
    def test_unit_shear(self):
        result = solve(MappingClass(1, 1, 0, 1))
        assert len(result.classes) == 2 and result.bound_ok
        fixed = class_containing(result, INFINITY)
        assert fixed.members == (INFINITY,)
        assert fixed.provenance == Provenance.PARABOLIC_FIXED
        neighbors = class_containing(result, S(0, 1))
        assert neighbors.provenance == Provenance.PARABOLIC_NEIGHBORS
        assert set(neighbors.members) == {S(0, 1), S(1, 1), S(2, 1), S(3, 1)}

    def test_wide_shear_has_one_class(self):
        result = solve(MappingClass(1, 3, 0, 1))
        assert len(result.classes) == 1
        assert result.classes[0].representative == INFINITY

    def test_trefoil_monodromy(self, trefoil):
        result = solve(trefoil)
        assert len(result.classes) == 1 and result.bound_ok
        assert set(result.classes[0].members) == {S(0, 1), S(-1, 1), INFINITY}
        assert result.classes[0].provenance == Provenance.ELLIPTIC_TRIANGLE

    def test_quarter_turn(self):
        result = solve(MappingClass(0, -1, 1, 0))
        assert len(result.classes) == 1
        assert set(result.classes[0].members) == {S(0, 1), INFINITY}
        assert result.classes[0].provenance == Provenance.ELLIPTIC_EDGE

    def test_figure_eight_monodromy(self, fig8):
        result = solve(fig8)
        assert len(result.classes) == 2 and result.bound_ok
        negative = class_containing(result, S(0, 1))
        positive = class_containing(result, INFINITY)
        assert negative is not positive
        assert S(1, 1) in negative.members and negative.side == -1
        assert S(2, 1) in positive.members and positive.side == 1
        assert {c.provenance for c in result.classes} == {Provenance.LOXODROMIC_VISIBLE}

    def test_trivial_rejected(self):
        with pytest.raises(ValueError):
            solve(MappingClass.identity())
        with pytest.raises(ValueError):
            solve(MappingClass(-1, 0, 0, -1))

    def test_pseudo_anosov_may_have_no_solutions(self, fig8):
        result = solve(fig8 @ fig8)
        assert result.classes == () and result.bound_ok

    def test_members_are_solutions_reachable_from_representative(self):
        for m in random_mapping_classes(200, 14, seed=1000):
            result = solve(m)
            for c in result.classes:
                for member in c.members:
                    assert is_solution(m, member)
                    orbit = {c.representative}
                    fwd = bwd = c.representative
                    for _ in range(len(c.members) + 8):
                        fwd = m.act(fwd)
                        bwd = m.inverse().act(bwd)
                        orbit.update((fwd, bwd))
                    assert member in orbit

    def test_pseudo_anosov_solutions_touch_the_axis(self):
        checked = 0
        for m in random_mapping_classes(300, 14, seed=1001):
            if not isinstance(m.classify(), PseudoAnosov):
                continue
            ax = m.axis()
            result = solve(m)
            for c in result.classes:
                for member in c.members:
                    assert any(member in e for e in ax.edges)
            checked += 1
            if checked >= 50:
                break
        assert checked == 50

    def test_class_count_bound_on_sample(self):
        for m in random_mapping_classes(500, 20, seed=1002):
            result = solve(m)
            assert len(result.classes) <= 2
            if isinstance(result.classification, Periodic):
                assert len(result.classes) <= 1
            if isinstance(result.classification, PseudoAnosov):
                sides = {c.side for c in result.classes}
                assert len(sides) == len(result.classes)

    def test_stable_under_negation_and_inverse(self):
        for m in random_mapping_classes(80, 12, seed=1003):
            base = solve(m)
            for other in (-m, m.inverse()):
                alt = solve(other)
                assert len(alt.classes) == len(base.classes)
                for c in base.classes:
                    matches = [
                        d for d in alt.classes
                        if h_equivalent(m, c.representative, d.representative)
                    ]
                    assert len(matches) == 1

    def test_infinite_orbit_of_solutions(self, fig8):
        # a pseudo-Anosov never repeats a slope, yet stays solution forever
        orbit = [INFINITY]
        for _ in range(6):
            orbit.append(fig8.act(orbit[-1]))
        assert len(set(orbit)) == 7
        assert all(is_solution(fig8, v) for v in orbit)


class TestHEquivalent:
    def test_shear_orbit(self):
        sh = MappingClass(1, 1, 0, 1)
        assert h_equivalent(sh, S(0, 1), S(5, 1))
        assert not h_equivalent(sh, S(0, 1), INFINITY)

    def test_pseudo_anosov_power(self, fig8):
        assert h_equivalent(fig8, INFINITY, S(5, 3))  # two applications
        assert h_equivalent(fig8, S(-13, 21), INFINITY)
        assert not h_equivalent(fig8, S(0, 1), INFINITY)  # opposite sides

    def test_periodic(self, trefoil):
        assert h_equivalent(trefoil, S(0, 1), S(-1, 1))
        assert h_equivalent(trefoil, S(0, 1), INFINITY)

    def test_non_solutions_rejected(self, fig8):
        with pytest.raises(ValueError):
            h_equivalent(fig8, S(1, 2), S(0, 1))

    def test_symmetric_on_solutions(self, fig8):
        pairs = [(INFINITY, S(2, 1)), (S(0, 1), S(3, 2)), (S(-1, 1), S(5, 3))]
        for x, y in pairs:
            assert h_equivalent(fig8, x, y) == h_equivalent(fig8, y, x)


class TestClassBoundReport:
    def test_periodic(self, trefoil):
        report = check_class_bound(trefoil)
        assert not report.excluded and report.bound_ok
        assert report.class_count == 1
        assert isinstance(report.classification, Periodic)

    def test_pseudo_anosov(self, fig8):
        report = check_class_bound(fig8)
        assert report.class_count == 2 and report.bound_ok
        assert report.axis_period == 2
        assert len(report.representatives) == 2

    def test_trivial_excluded(self):
        report = check_class_bound(MappingClass.identity())
        assert report.excluded and report.class_count == 0
