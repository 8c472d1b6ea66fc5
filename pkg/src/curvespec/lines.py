"""Exact incidence geometry for projective line arrangements.

Turns an explicit list of rational linear forms a*x + b*y + c*z into the
combinatorial arrangement graph: proportional forms are merged into one
component with summed multiplicity, every pairwise intersection point is
computed by a cross product of coefficient triples, and coincident
intersections are merged by canonical primitive integer coordinates.  All
arithmetic is exact, so collinearity and concurrency decisions are never
subject to rounding.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Sequence, Tuple, Union

from .arrangement import ArrangementGraph, Branch, Component, SingularPoint

__all__ = [
    "LineFileError",
    "LinearForm",
    "ZeroFormError",
    "incidence_graph",
    "load_lines",
    "normalize_form",
]

RationalLike = Union[Fraction, int, str]


class ZeroFormError(ValueError):
    """The zero triple does not define a projective line."""


class LineFileError(ValueError):
    """Line-arrangement file does not match the expected schema."""


@dataclass(frozen=True)
class LinearForm:
    """Primitive integer representative of a projective line.

    Canonical: gcd(|a|, |b|, |c|) = 1 and the first nonzero coefficient is
    positive, so two triples define the same line iff their canonical forms
    are equal.
    """

    a: int
    b: int
    c: int

    def coefficients(self) -> Tuple[int, int, int]:
        return (self.a, self.b, self.c)


def _canonical_triple(triple: Sequence[Fraction]) -> Tuple[int, int, int]:
    denom_lcm = 1
    for x in triple:
        denom_lcm = denom_lcm * x.denominator // gcd(denom_lcm, x.denominator)
    ints = [int(x * denom_lcm) for x in triple]
    content = gcd(gcd(abs(ints[0]), abs(ints[1])), abs(ints[2]))
    if content == 0:
        raise ZeroFormError("all three coefficients are zero")
    ints = [x // content for x in ints]
    for x in ints:
        if x != 0:
            if x < 0:
                ints = [-y for y in ints]
            break
    return (ints[0], ints[1], ints[2])


def _to_fraction(x: RationalLike, what: str) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (Rational, str)):
        raise LineFileError(f"{what} must be an integer or 'p/q' string, got {x!r}")
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError) as exc:
        raise LineFileError(f"{what} is not a valid rational: {x!r}") from exc


def normalize_form(raw: Sequence[RationalLike]) -> LinearForm:
    """Clear denominators, divide by the content, and fix the sign so the
    first nonzero coefficient is positive."""
    if len(raw) != 3:
        raise LineFileError(f"a linear form needs exactly 3 coefficients, got {len(raw)}")
    triple = tuple(_to_fraction(x, f"coefficient {i}") for i, x in enumerate(raw))
    return LinearForm(*_canonical_triple(triple))


def _cross(p: LinearForm, q: LinearForm) -> Tuple[int, int, int]:
    return (
        p.b * q.c - p.c * q.b,
        p.c * q.a - p.a * q.c,
        p.a * q.b - p.b * q.a,
    )


def incidence_graph(forms: Sequence[Tuple[Sequence[RationalLike], int]]) -> ArrangementGraph:
    """Arrangement graph of a weighted list of linear forms.

    Proportional forms merge (multiplicities summed, first-seen order kept);
    the points are all pairwise intersections, each recording every line
    through it with branch multiplicity 1 (a line meets a point simply).
    """
    if not forms:
        raise LineFileError("need at least one linear form")
    lines: list[LinearForm] = []
    mults: dict[LinearForm, int] = {}
    for raw, mult in forms:
        if isinstance(mult, bool) or not isinstance(mult, int):
            raise LineFileError(f"multiplicity must be an integer, got {mult!r}")
        # Nonpositive multiplicities flow into the graph and fail validation
        # there, keeping the schema/data error split uniform across inputs.
        form = normalize_form(raw)
        if form not in mults:
            lines.append(form)
            mults[form] = 0
        mults[form] += mult

    points: set[Tuple[int, int, int]] = set()
    for i, p in enumerate(lines):
        for q in lines[i + 1 :]:
            coords = tuple(Fraction(x) for x in _cross(p, q))
            points.add(_canonical_triple(coords))

    comp_ids = {form: f"l{i + 1}" for i, form in enumerate(lines)}
    components = tuple(
        Component(id=comp_ids[form], degree=1, multiplicity=mults[form]) for form in lines
    )
    singular_points = []
    for i, coords in enumerate(sorted(points)):
        through = tuple(
            Branch(component=comp_ids[form], mult=1)
            for form in lines
            if form.a * coords[0] + form.b * coords[1] + form.c * coords[2] == 0
        )
        singular_points.append(SingularPoint(id=f"v{i + 1}", branches=through))
    return ArrangementGraph(components, tuple(singular_points))


def load_lines(path: str) -> list[Tuple[Tuple[RationalLike, ...], int]]:
    """Read a line-arrangement JSON file: an array of
    {"form": [a, b, c], "multiplicity": m} with integer or "p/q" entries."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise LineFileError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise LineFileError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(data, list):
        raise LineFileError("line file must be a JSON array")
    out = []
    for i, entry in enumerate(data):
        if not isinstance(entry, dict):
            raise LineFileError(f"entry {i} must be an object")
        extra = set(entry) - {"form", "multiplicity"}
        if extra:
            raise LineFileError(f"entry {i} has unknown keys: {sorted(extra)}")
        if "form" not in entry:
            raise LineFileError(f"entry {i} needs a 'form'")
        raw = entry["form"]
        if not isinstance(raw, list) or len(raw) != 3:
            raise LineFileError(f"entry {i}: 'form' must be a 3-element array")
        for k, x in enumerate(raw):
            _to_fraction(x, f"entry {i}, coefficient {k}")
        mult = entry.get("multiplicity", 1)
        if isinstance(mult, bool) or not isinstance(mult, int):
            raise LineFileError(f"entry {i}: multiplicity must be an integer, got {mult!r}")
        out.append((tuple(raw), mult))
    return out
