"""Shared builders and hypothesis strategies for the test suite."""

from __future__ import annotations

from fractions import Fraction

from hypothesis import settings
from hypothesis import strategies as st

from curvespec.arrangement import ArrangementGraph, Branch, Component, SingularPoint
from curvespec.spectrum import Spectrum

settings.register_profile("curvespec", deadline=None)
settings.load_profile("curvespec")


def graph(comps, pts=()):
    """Compact graph builder: comps is [(degree, mult)], pts is
    [[(component index, branch mult)]]."""
    return ArrangementGraph(
        tuple(Component(f"l{i + 1}", d, m) for i, (d, m) in enumerate(comps)),
        tuple(
            SingularPoint(f"v{k + 1}", tuple(Branch(f"l{c + 1}", mu) for c, mu in brs))
            for k, brs in enumerate(pts)
        ),
    )


def nodal_cubic():
    """Irreducible cubic with one ordinary double point."""
    return graph([(3, 1)], [[(0, 2)]])


def line_and_nodal_cubic():
    """Nodal cubic plus a line through the node and one transverse crossing."""
    return graph([(1, 1), (3, 1)], [[(0, 1), (1, 2)], [(0, 1), (1, 1)]])


def two_line_powers(m1: int, m2: int):
    """Two distinct lines with multiplicities m1, m2, crossing once."""
    return graph([(1, m1), (1, m2)], [[(0, 1), (1, 1)]])


def triangle_graph():
    """Three lines in general position: three simple nodes."""
    return graph([(1, 1)] * 3, [[(0, 1), (1, 1)], [(0, 1), (2, 1)], [(1, 1), (2, 1)]])


def pencil_graph():
    """Three concurrent lines: one ordinary triple point."""
    return graph([(1, 1)] * 3, [[(0, 1), (1, 1), (2, 1)]])


@st.composite
def arrangement_graphs(
    draw,
    max_components: int = 4,
    max_points: int = 5,
    max_degree: int = 4,
    max_mult: int = 3,
    reduced: bool = False,
    simple_branches: bool = False,
    lines_only: bool = False,
):
    """Valid-by-construction arrangement graphs."""
    n = draw(st.integers(1, max_components))
    comps = []
    for i in range(n):
        degree = 1 if lines_only else draw(st.integers(1, max_degree))
        mult = 1 if reduced else draw(st.integers(1, max_mult))
        comps.append(Component(f"l{i + 1}", degree, mult))
    n_points = draw(st.integers(0, max_points))
    points = []
    for k in range(n_points):
        idxs = draw(st.sets(st.integers(0, n - 1), min_size=1, max_size=n))
        branches = []
        for idx in sorted(idxs):
            top = 1 if (simple_branches or lines_only) else comps[idx].degree
            branches.append(Branch(comps[idx].id, draw(st.integers(1, top))))
        points.append(SingularPoint(f"v{k + 1}", tuple(branches)))
    return ArrangementGraph(tuple(comps), tuple(points))


def crossing_powers_closed_form(g: int) -> Spectrum:
    """Expected spectrum of x^m1*y^m2 with gcd(m1, m2) = g: the exact
    expansion of -t^(1+1/g)*(1-t)^2/(1-t^(1/g)) - t^3, computed via
    (1-t) = (1-t^(1/g)) * (1 + t^(1/g) + ... + t^((g-1)/g))."""
    partial_geometric = Spectrum({Fraction(i, g): 1 for i in range(g)})
    one_minus_t = Spectrum.term(0) - Spectrum.term(1)
    return Spectrum.term(Fraction(g + 1, g), -1) * one_minus_t * partial_geometric - Spectrum.term(3)


@st.composite
def spectra(draw, max_terms: int = 6):
    """Arbitrary fractional Laurent polynomials with small support."""
    n = draw(st.integers(0, max_terms))
    terms: dict[Fraction, int] = {}
    for _ in range(n):
        alpha = Fraction(draw(st.integers(-12, 12)), draw(st.integers(1, 8)))
        terms[alpha] = terms.get(alpha, 0) + draw(st.integers(-5, 5))
    return Spectrum(terms)
