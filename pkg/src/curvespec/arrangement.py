"""Combinatorial model of a plane curve arrangement with ordinary singularities.

An :class:`ArrangementGraph` records the discrete data of a homogeneous
polynomial f = prod(f_l^{m_l}) in three variables whose reduced zero set is a
union of curves C_l meeting only in ordinary multiple points: one node per
irreducible component (with its degree d_l and multiplicity m_l in f) and one
node per singular point of the union, carrying the local intersection
multiplicity m_{v,l} of each branch of C_l through that point.

Everything downstream consumes only this graph; no defining equations are
needed.  Validation is total: :func:`validate` returns a report instead of
raising, so the CLI can distinguish malformed files (format errors) from
well-formed files describing impossible data (validation errors).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Tuple

__all__ = [
    "ArrangementFormatError",
    "ArrangementGraph",
    "Branch",
    "Component",
    "DerivedData",
    "InvalidArrangementError",
    "SingularPoint",
    "ValidationReport",
    "derived",
    "graph_from_dict",
    "graph_to_dict",
    "load_arrangement",
    "require_valid",
    "validate",
]


class ArrangementFormatError(ValueError):
    """Input file or dict does not match the arrangement schema."""


class InvalidArrangementError(ValueError):
    """Structurally well-formed graph that violates an arrangement invariant."""

    def __init__(self, report: "ValidationReport"):
        lines = [f"{code} at {loc}: {msg}" for code, msg, loc in report.errors]
        super().__init__("invalid arrangement: " + "; ".join(lines))
        self.report = report


@dataclass(frozen=True)
class Component:
    """One irreducible curve in the arrangement.

    ``degree`` is the degree of the reduced component, ``multiplicity`` the
    exponent it carries in the (possibly non-reduced) defining polynomial.
    """

    id: str
    degree: int
    multiplicity: int = 1


@dataclass(frozen=True)
class Branch:
    """A component passing through a singular point with local multiplicity ``mult``."""

    component: str
    mult: int = 1


@dataclass(frozen=True)
class SingularPoint:
    id: str
    branches: Tuple[Branch, ...]

    def __post_init__(self):
        object.__setattr__(self, "branches", tuple(self.branches))


@dataclass(frozen=True)
class ArrangementGraph:
    """Bipartite incidence record: components on one side, singular points on the other."""

    components: Tuple[Component, ...]
    points: Tuple[SingularPoint, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        object.__setattr__(self, "points", tuple(self.points))

    def component(self, cid: str) -> Component:
        for comp in self.components:
            if comp.id == cid:
                return comp
        raise KeyError(cid)

    def is_reduced(self) -> bool:
        return all(comp.multiplicity == 1 for comp in self.components)


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of :func:`validate`: (code, message, location) triples."""

    errors: Tuple[Tuple[str, str, str], ...] = ()
    warnings: Tuple[Tuple[str, str, str], ...] = ()

    @property
    def ok(self) -> bool:
        return not self.errors


def validate(graph: ArrangementGraph) -> ValidationReport:
    """Check every arrangement invariant, accumulating all violations."""
    errors: list[Tuple[str, str, str]] = []
    warnings: list[Tuple[str, str, str]] = []

    if not graph.components:
        errors.append(("empty-components", "arrangement needs at least one component", "components"))

    seen_comp: dict[str, Component] = {}
    for comp in graph.components:
        loc = f"component {comp.id!r}"
        if not comp.id:
            errors.append(("empty-id", "component id must be a nonempty string", loc))
        if comp.id in seen_comp:
            errors.append(("duplicate-component-id", f"component id {comp.id!r} repeats", loc))
        else:
            seen_comp[comp.id] = comp
        if comp.degree < 1:
            errors.append(("nonpositive-degree", f"degree must be >= 1, got {comp.degree}", loc))
        if comp.multiplicity < 1:
            errors.append(
                ("nonpositive-multiplicity", f"multiplicity must be >= 1, got {comp.multiplicity}", loc)
            )

    seen_pt: set[str] = set()
    for point in graph.points:
        loc = f"point {point.id!r}"
        if not point.id:
            errors.append(("empty-id", "point id must be a nonempty string", loc))
        if point.id in seen_pt:
            errors.append(("duplicate-point-id", f"point id {point.id!r} repeats", loc))
        seen_pt.add(point.id)
        if not point.branches:
            errors.append(("empty-branches", "point must lie on at least one component", loc))
        branch_comps: set[str] = set()
        for br in point.branches:
            bloc = f"{loc}, branch {br.component!r}"
            comp = seen_comp.get(br.component)
            if comp is None:
                errors.append(("unknown-component", f"branch names unknown component {br.component!r}", bloc))
            if br.component in branch_comps:
                errors.append(("duplicate-branch", f"component {br.component!r} listed twice", bloc))
            branch_comps.add(br.component)
            if br.mult < 1:
                errors.append(("nonpositive-branch-mult", f"branch multiplicity must be >= 1, got {br.mult}", bloc))
            elif comp is not None and br.mult > comp.degree:
                errors.append(
                    (
                        "branch-mult-exceeds-degree",
                        f"branch multiplicity {br.mult} exceeds component degree {comp.degree}",
                        bloc,
                    )
                )
        if not any(code for code, _, l in errors if l.startswith(loc)):
            m_red = sum(br.mult for br in point.branches)
            if m_red == 1:
                warnings.append(
                    ("smooth-point", "total branch multiplicity 1: point is a smooth point of the union", loc)
                )
            elif (
                len(point.branches) == 2
                and all(br.mult == 1 for br in point.branches)
                and len(branch_comps) == 2
            ):
                warnings.append(("snc-node", "transverse crossing of two components (simple node)", loc))

    return ValidationReport(tuple(errors), tuple(warnings))


def require_valid(graph: ArrangementGraph) -> ArrangementGraph:
    report = validate(graph)
    if not report.ok:
        raise InvalidArrangementError(report)
    return graph


@dataclass(frozen=True)
class DerivedData:
    """Aggregates every formula consumes, computed once from the graph.

    ``total_degree`` is deg f = sum(m_l * d_l); ``reduced_degree`` is the
    degree sum(d_l) of the reduced union.  ``point_mult[v]`` is the
    multiplicity sum(m_l * m_{v,l}) of f at v; ``reduced_point_mult[v]``
    the multiplicity sum(m_{v,l}) of the reduced union at v.
    """

    total_degree: int
    reduced_degree: int
    point_mult: Mapping[str, int] = field(default_factory=dict)
    reduced_point_mult: Mapping[str, int] = field(default_factory=dict)


def derived(graph: ArrangementGraph) -> DerivedData:
    comp_mult = {comp.id: comp.multiplicity for comp in graph.components}
    total = sum(comp.multiplicity * comp.degree for comp in graph.components)
    reduced = sum(comp.degree for comp in graph.components)
    point_mult: dict[str, int] = {}
    reduced_point_mult: dict[str, int] = {}
    for point in graph.points:
        point_mult[point.id] = sum(comp_mult[br.component] * br.mult for br in point.branches)
        reduced_point_mult[point.id] = sum(br.mult for br in point.branches)
    return DerivedData(total, reduced, point_mult, reduced_point_mult)


# ---------------------------------------------------------------------
# JSON interchange
# ---------------------------------------------------------------------


def _require_int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ArrangementFormatError(f"{what} must be an integer, got {value!r}")
    return value


def _require_str(value, what: str) -> str:
    if not isinstance(value, str):
        raise ArrangementFormatError(f"{what} must be a string, got {value!r}")
    return value


def _check_keys(obj: Mapping, allowed: Iterable[str], what: str) -> None:
    extra = set(obj) - set(allowed)
    if extra:
        raise ArrangementFormatError(f"{what} has unknown keys: {sorted(extra)}")


def graph_from_dict(data) -> ArrangementGraph:
    """Build a graph from the JSON object layout; schema errors raise
    :class:`ArrangementFormatError`, semantic problems are left to
    :func:`validate`."""
    if not isinstance(data, Mapping):
        raise ArrangementFormatError(f"arrangement must be a JSON object, got {type(data).__name__}")
    _check_keys(data, ("components", "points"), "arrangement")
    raw_comps = data.get("components")
    if not isinstance(raw_comps, list):
        raise ArrangementFormatError("'components' must be a list")
    comps = []
    for i, rc in enumerate(raw_comps):
        if not isinstance(rc, Mapping):
            raise ArrangementFormatError(f"components[{i}] must be an object")
        _check_keys(rc, ("id", "degree", "multiplicity"), f"components[{i}]")
        if "id" not in rc or "degree" not in rc:
            raise ArrangementFormatError(f"components[{i}] needs 'id' and 'degree'")
        comps.append(
            Component(
                id=_require_str(rc["id"], f"components[{i}].id"),
                degree=_require_int(rc["degree"], f"components[{i}].degree"),
                multiplicity=_require_int(rc.get("multiplicity", 1), f"components[{i}].multiplicity"),
            )
        )
    raw_pts = data.get("points", [])
    if not isinstance(raw_pts, list):
        raise ArrangementFormatError("'points' must be a list")
    points = []
    for i, rp in enumerate(raw_pts):
        if not isinstance(rp, Mapping):
            raise ArrangementFormatError(f"points[{i}] must be an object")
        _check_keys(rp, ("id", "branches"), f"points[{i}]")
        if "id" not in rp or "branches" not in rp:
            raise ArrangementFormatError(f"points[{i}] needs 'id' and 'branches'")
        raw_brs = rp["branches"]
        if not isinstance(raw_brs, list):
            raise ArrangementFormatError(f"points[{i}].branches must be a list")
        branches = []
        for k, rb in enumerate(raw_brs):
            if not isinstance(rb, Mapping):
                raise ArrangementFormatError(f"points[{i}].branches[{k}] must be an object")
            _check_keys(rb, ("component", "mult"), f"points[{i}].branches[{k}]")
            if "component" not in rb:
                raise ArrangementFormatError(f"points[{i}].branches[{k}] needs 'component'")
            branches.append(
                Branch(
                    component=_require_str(rb["component"], f"points[{i}].branches[{k}].component"),
                    mult=_require_int(rb.get("mult", 1), f"points[{i}].branches[{k}].mult"),
                )
            )
        points.append(SingularPoint(id=_require_str(rp["id"], f"points[{i}].id"), branches=tuple(branches)))
    return ArrangementGraph(tuple(comps), tuple(points))


def graph_to_dict(graph: ArrangementGraph) -> dict:
    return {
        "components": [
            {"id": c.id, "degree": c.degree, "multiplicity": c.multiplicity} for c in graph.components
        ],
        "points": [
            {"id": p.id, "branches": [{"component": b.component, "mult": b.mult} for b in p.branches]}
            for p in graph.points
        ],
    }


def load_arrangement(path: str) -> ArrangementGraph:
    """Read an arrangement JSON file; raises :class:`ArrangementFormatError`
    on bad JSON or schema, :class:`InvalidArrangementError` on bad data."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ArrangementFormatError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ArrangementFormatError(f"{path} is not valid JSON: {exc}") from exc
    return require_valid(graph_from_dict(data))
