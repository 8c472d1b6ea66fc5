from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import (
    arrangement_graphs,
    crossing_powers_closed_form,
    graph,
    line_and_nodal_cubic,
    nodal_cubic,
    pencil_graph,
    triangle_graph,
    two_line_powers,
)
from curvespec.arrangement import ArrangementGraph, Branch, SingularPoint, derived
from curvespec.binomial import ceil_div
from curvespec.formulas import (
    spectrum_binary_linear,
    spectrum_general,
    spectrum_hyperplane,
    spectrum_irreducible_power,
    spectrum_isolated,
    spectrum_reduced,
    spectrum_smooth_components,
    twist_coefficients,
)
from curvespec.spectrum import Spectrum, dummy_shift


class TestTwistCoefficients:
    def test_nodal_cubic(self):
        tw = twist_coefficients(nodal_cubic(), 1)
        assert tw.e0 == 2
        assert tw.ev == {"v1": 1}

    def test_two_double_lines_midpoint(self):
        tw = twist_coefficients(two_line_powers(2, 2), 2)
        assert tw.e0 == 0
        assert tw.ev == {"v1": 0}

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            twist_coefficients(nodal_cubic(), 0)
        with pytest.raises(ValueError):
            twist_coefficients(nodal_cubic(), 4)

    @given(arrangement_graphs(reduced=True), st.data())
    def test_reduced_specialization(self, g, data):
        d = derived(g).total_degree
        j = data.draw(st.integers(1, d))
        tw = twist_coefficients(g, j)
        assert tw.e0 == d - j
        for p in g.points:
            m_v = derived(g).point_mult[p.id]
            assert tw.ev[p.id] == m_v - ceil_div(j * m_v, d)

    @given(arrangement_graphs())
    def test_top_index_vanishes(self, g):
        d = derived(g).total_degree
        tw = twist_coefficients(g, d)
        assert tw.e0 == 0
        assert all(x == 0 for x in tw.ev.values())


class TestGeneral:
    def test_nodal_cubic(self):
        assert spectrum_general(nodal_cubic()) == Spectrum(
            {1: 1, Fraction(4, 3): 2, Fraction(5, 3): 2}
        )

    def test_single_line(self):
        assert spectrum_general(graph([(1, 1)])) == Spectrum.zero()

    @pytest.mark.parametrize("m1,m2,g", [(1, 1, 1), (2, 2, 2), (2, 4, 2), (3, 6, 3), (5, 3, 1)])
    def test_crossing_line_powers(self, m1, m2, g):
        assert spectrum_general(two_line_powers(m1, m2)) == crossing_powers_closed_form(g)

    @given(arrangement_graphs())
    def test_support_bound(self, g):
        d = derived(g).total_degree
        for alpha, n in spectrum_general(g).items():
            assert 0 < alpha <= 3
            assert (alpha * d).denominator == 1
            assert isinstance(n, int)

    @given(arrangement_graphs(max_components=3, max_points=4))
    def test_component_and_point_order_irrelevant(self, g):
        reordered = ArrangementGraph(tuple(reversed(g.components)), tuple(reversed(g.points)))
        assert spectrum_general(reordered) == spectrum_general(g)

    @given(arrangement_graphs(max_degree=3, max_mult=12))
    def test_large_multiplicities_stay_exact(self, g):
        # No overflow or precision ceiling: coefficients are plain ints.
        assert spectrum_general(g) is not None


class TestReduced:
    def test_line_and_nodal_cubic(self):
        expected = Spectrum(
            {1: 2, Fraction(5, 4): 2, Fraction(3, 2): 2, Fraction(7, 4): 2, 2: -1}
        )
        assert spectrum_reduced(line_and_nodal_cubic()) == expected

    def test_two_crossing_lines(self):
        assert spectrum_reduced(two_line_powers(1, 1)) == Spectrum.term(2, -1)

    def test_triangle(self):
        assert spectrum_reduced(triangle_graph()) == Spectrum({1: 1, 2: -2})

    def test_rejects_non_reduced(self):
        with pytest.raises(ValueError):
            spectrum_reduced(two_line_powers(2, 2))

    @given(arrangement_graphs(reduced=True))
    def test_agrees_with_general(self, g):
        assert spectrum_reduced(g) == spectrum_general(g)


class TestSmoothComponents:
    def test_two_crossing_lines(self):
        assert spectrum_smooth_components(two_line_powers(1, 1)) == Spectrum.term(2, -1)

    def test_single_conic(self):
        assert spectrum_smooth_components(graph([(2, 1)])) == Spectrum.term(Fraction(3, 2))

    def test_triangle(self):
        assert spectrum_smooth_components(triangle_graph()) == Spectrum({1: 1, 2: -2})

    def test_rejects_multiple_branch(self):
        with pytest.raises(ValueError):
            spectrum_smooth_components(nodal_cubic())

    @given(arrangement_graphs(simple_branches=True))
    def test_agrees_with_general(self, g):
        assert spectrum_smooth_components(g) == spectrum_general(g)


class TestHyperplane:
    def test_crossing_lines(self):
        assert spectrum_hyperplane(two_line_powers(1, 1)) == Spectrum.term(2, -1)
        assert spectrum_hyperplane(two_line_powers(2, 2)) == Spectrum(
            {Fraction(3, 2): -1, 2: -1, Fraction(5, 2): 1}
        )

    def test_pencil_matches_dummy_shifted_planar_value(self):
        assert spectrum_hyperplane(pencil_graph()) == dummy_shift(spectrum_binary_linear([1, 1, 1]))

    def test_rejects_higher_degree(self):
        with pytest.raises(ValueError):
            spectrum_hyperplane(nodal_cubic())

    @given(arrangement_graphs(lines_only=True))
    def test_agrees_with_general(self, g):
        assert spectrum_hyperplane(g) == spectrum_general(g)


class TestIrreduciblePower:
    def test_nodal_cubic(self):
        assert spectrum_irreducible_power(3, 1, [2]) == spectrum_general(nodal_cubic())

    def test_smooth_conic(self):
        assert spectrum_irreducible_power(2, 1, []) == Spectrum.term(Fraction(3, 2))

    def test_squared_nodal_cubic_matches_general(self):
        g = graph([(3, 2)], [[(0, 2)]])
        assert spectrum_irreducible_power(3, 2, [2]) == spectrum_general(g)

    def test_multiplicity_out_of_range(self):
        with pytest.raises(ValueError):
            spectrum_irreducible_power(3, 1, [1])
        with pytest.raises(ValueError):
            spectrum_irreducible_power(3, 1, [4])
        with pytest.raises(ValueError):
            spectrum_irreducible_power(0, 1, [])

    @given(st.integers(2, 5), st.integers(1, 4), st.lists(st.integers(2, 5), max_size=4))
    def test_support_on_fine_grid(self, d, m, mults):
        mults = [min(mu, d) for mu in mults]
        s = spectrum_irreducible_power(d, m, mults)
        for alpha, _ in s.items():
            assert 0 < alpha <= 3
            assert (alpha * m * d).denominator == 1

    @given(st.integers(1, 4), st.integers(1, 4), st.lists(st.integers(2, 4), max_size=3))
    def test_agrees_with_general_on_one_component_graph(self, d, m, mults):
        mults = [mu for mu in mults if mu <= d]
        g = graph([(d, m)], [[(0, mu)] for mu in mults])
        assert spectrum_irreducible_power(d, m, mults) == spectrum_general(g)


class TestBinaryLinear:
    def test_two_distinct_forms(self):
        assert spectrum_binary_linear([1, 1]) == Spectrum.term(1)

    def test_single_squared_form(self):
        assert spectrum_binary_linear([2]) == Spectrum.term(Fraction(3, 2), -1)

    def test_non_isolated_mixed(self):
        assert spectrum_binary_linear([2, 1]) == Spectrum.term(1)

    def test_matches_isolated_closed_form(self):
        for d in range(2, 11):
            assert spectrum_binary_linear([1] * d) == spectrum_isolated(d, 2)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            spectrum_binary_linear([])
        with pytest.raises(ValueError):
            spectrum_binary_linear([1, 0])

    @given(st.lists(st.integers(1, 5), min_size=1, max_size=6))
    def test_support_bound(self, mults):
        d = sum(mults)
        for alpha, _ in spectrum_binary_linear(mults).items():
            assert 0 < alpha <= 2
            assert (alpha * d).denominator == 1


class TestIsolated:
    def test_conic(self):
        assert spectrum_isolated(2, 3) == Spectrum.term(Fraction(3, 2))

    def test_cubic(self):
        assert spectrum_isolated(3, 3) == Spectrum(
            {1: 1, Fraction(4, 3): 3, Fraction(5, 3): 3, 2: 1}
        )

    def test_degree_one_is_zero(self):
        for n in (1, 2, 3):
            assert spectrum_isolated(1, n) == Spectrum.zero()

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            spectrum_isolated(0, 3)
        with pytest.raises(ValueError):
            spectrum_isolated(3, 4)

    @given(st.integers(1, 12), st.integers(1, 3))
    def test_milnor_number(self, d, n):
        assert spectrum_isolated(d, n).eval_at_one() == (d - 1) ** n

    @given(st.integers(1, 12))
    def test_matches_pointless_single_component(self, d):
        assert spectrum_general(graph([(d, 1)])) == spectrum_isolated(d, 3)


class TestPointSetInvariance:
    @given(arrangement_graphs(max_components=3, max_points=3), st.data())
    def test_extra_simple_node_is_neutral(self, g, data):
        assume(len(g.components) >= 2)
        i = data.draw(st.integers(0, len(g.components) - 2))
        k = data.draw(st.integers(i + 1, len(g.components) - 1))
        node = SingularPoint(
            "extra",
            (Branch(g.components[i].id, 1), Branch(g.components[k].id, 1)),
        )
        enlarged = ArrangementGraph(g.components, g.points + (node,))
        assert spectrum_general(enlarged) == spectrum_general(g)

    @given(arrangement_graphs(max_components=3, max_points=3), st.data())
    def test_extra_smooth_point_is_neutral(self, g, data):
        idx = data.draw(st.integers(0, len(g.components) - 1))
        point = SingularPoint("extra", (Branch(g.components[idx].id, 1),))
        enlarged = ArrangementGraph(g.components, g.points + (point,))
        assert spectrum_general(enlarged) == spectrum_general(g)
