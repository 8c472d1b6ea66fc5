import json

import pytest
from hypothesis import given

from conftest import (
    arrangement_graphs,
    graph,
    line_and_nodal_cubic,
    nodal_cubic,
    two_line_powers,
)
from curvespec.arrangement import (
    ArrangementFormatError,
    ArrangementGraph,
    Branch,
    Component,
    InvalidArrangementError,
    SingularPoint,
    derived,
    graph_from_dict,
    graph_to_dict,
    load_arrangement,
    require_valid,
    validate,
)


def error_codes(g):
    return {code for code, _, _ in validate(g).errors}


def warning_codes(g):
    return {code for code, _, _ in validate(g).warnings}


class TestValidate:
    def test_nodal_cubic_clean(self):
        report = validate(nodal_cubic())
        assert report.ok
        assert not report.warnings

    def test_empty_components(self):
        assert "empty-components" in error_codes(ArrangementGraph(()))

    def test_duplicate_component_id(self):
        g = ArrangementGraph((Component("a", 1), Component("a", 2)))
        assert "duplicate-component-id" in error_codes(g)

    def test_nonpositive_degree_and_multiplicity(self):
        g = ArrangementGraph((Component("a", 0), Component("b", 2, 0)))
        codes = error_codes(g)
        assert "nonpositive-degree" in codes
        assert "nonpositive-multiplicity" in codes

    def test_unknown_component_reference(self):
        g = ArrangementGraph(
            (Component("a", 2),),
            (SingularPoint("v", (Branch("missing", 1),)),),
        )
        assert "unknown-component" in error_codes(g)

    def test_duplicate_point_id_and_branch(self):
        g = ArrangementGraph(
            (Component("a", 2),),
            (
                SingularPoint("v", (Branch("a", 1), Branch("a", 1))),
                SingularPoint("v", (Branch("a", 2),)),
            ),
        )
        codes = error_codes(g)
        assert "duplicate-point-id" in codes
        assert "duplicate-branch" in codes

    def test_empty_branches(self):
        g = ArrangementGraph((Component("a", 1),), (SingularPoint("v", ()),))
        assert "empty-branches" in error_codes(g)

    def test_branch_multiplicity_exceeds_degree(self):
        g = graph([(2, 1)], [[(0, 3)]])
        assert "branch-mult-exceeds-degree" in error_codes(g)

    def test_nonpositive_branch_multiplicity(self):
        g = ArrangementGraph((Component("a", 2),), (SingularPoint("v", (Branch("a", 0),)),))
        assert "nonpositive-branch-mult" in error_codes(g)

    def test_empty_ids(self):
        g = ArrangementGraph((Component("", 1),), (SingularPoint("", (Branch("", 1),)),))
        assert "empty-id" in error_codes(g)

    def test_snc_warning(self):
        assert warning_codes(two_line_powers(1, 1)) == {"snc-node"}

    def test_smooth_point_warning(self):
        g = graph([(2, 1)], [[(0, 1)]])
        assert warning_codes(g) == {"smooth-point"}

    def test_ordinary_point_no_warning(self):
        assert not validate(nodal_cubic()).warnings

    @given(arrangement_graphs())
    def test_generated_graphs_valid(self, g):
        assert validate(g).ok

    def test_require_valid_raises_with_report(self):
        g = ArrangementGraph(())
        with pytest.raises(InvalidArrangementError) as err:
            require_valid(g)
        assert err.value.report.errors


class TestDerived:
    def test_line_and_nodal_cubic(self):
        data = derived(line_and_nodal_cubic())
        assert data.total_degree == 4
        assert data.reduced_degree == 4
        assert data.point_mult == {"v1": 3, "v2": 2}
        assert data.reduced_point_mult == {"v1": 3, "v2": 2}

    def test_single_component_with_double_point(self):
        data = derived(nodal_cubic())
        assert data.total_degree == 3
        assert data.point_mult == {"v1": 2}

    def test_two_double_lines(self):
        data = derived(two_line_powers(2, 2))
        assert data.total_degree == 4
        assert data.reduced_degree == 2
        assert data.point_mult == {"v1": 4}
        assert data.reduced_point_mult == {"v1": 2}

    @given(arrangement_graphs())
    def test_aggregates_are_sums(self, g):
        data = derived(g)
        assert data.total_degree == sum(c.multiplicity * c.degree for c in g.components)
        assert data.reduced_degree == sum(c.degree for c in g.components)
        mult = {c.id: c.multiplicity for c in g.components}
        for p in g.points:
            assert data.reduced_point_mult[p.id] == sum(b.mult for b in p.branches)
            assert data.point_mult[p.id] == sum(mult[b.component] * b.mult for b in p.branches)


class TestSerialization:
    @given(arrangement_graphs())
    def test_round_trip(self, g):
        assert graph_from_dict(graph_to_dict(g)) == g

    def test_defaults_applied(self):
        g = graph_from_dict(
            {
                "components": [{"id": "c", "degree": 3}],
                "points": [{"id": "v", "branches": [{"component": "c"}]}],
            }
        )
        assert g.components[0].multiplicity == 1
        assert g.points[0].branches[0].mult == 1

    def test_points_key_optional(self):
        g = graph_from_dict({"components": [{"id": "c", "degree": 1}]})
        assert g.points == ()

    @pytest.mark.parametrize(
        "data",
        [
            [],
            {"components": {}},
            {"components": [{"id": "c"}]},
            {"components": [{"id": "c", "degree": "3"}]},
            {"components": [{"id": 1, "degree": 3}]},
            {"components": [{"id": "c", "degree": 3.0}]},
            {"components": [{"id": "c", "degree": True}]},
            {"components": [{"id": "c", "degree": 3, "extra": 1}]},
            {"components": [{"id": "c", "degree": 3}], "points": [{"id": "v"}]},
            {"components": [{"id": "c", "degree": 3}], "points": [{"id": "v", "branches": [{}]}]},
            {"components": [{"id": "c", "degree": 3}], "points": [{"id": "v", "branches": [{"component": "c", "mult": "2"}]}]},
            {"components": [{"id": "c", "degree": 3}], "extra": []},
        ],
    )
    def test_schema_violations(self, data):
        with pytest.raises(ArrangementFormatError):
            graph_from_dict(data)

    def test_graphs_are_hashable(self):
        cache = {nodal_cubic(): "a"}
        assert cache[nodal_cubic()] == "a"


class TestLoadArrangement(object):
    def test_round_trip_via_file(self, tmp_path):
        path = tmp_path / "g.json"
        path.write_text(json.dumps(graph_to_dict(line_and_nodal_cubic())))
        assert load_arrangement(str(path)) == line_and_nodal_cubic()

    def test_missing_file(self, tmp_path):
        with pytest.raises(ArrangementFormatError):
            load_arrangement(str(tmp_path / "nope.json"))

    def test_bad_json(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        with pytest.raises(ArrangementFormatError):
            load_arrangement(str(path))

    def test_invalid_data(self, tmp_path):
        path = tmp_path / "invalid.json"
        path.write_text(
            json.dumps(
                {
                    "components": [{"id": "c", "degree": 2}],
                    "points": [{"id": "v", "branches": [{"component": "c", "mult": 5}]}],
                }
            )
        )
        with pytest.raises(InvalidArrangementError):
            load_arrangement(str(path))
