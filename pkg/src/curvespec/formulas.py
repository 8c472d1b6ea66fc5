"""Closed-form spectrum formulas for curve arrangements with ordinary points.

Each function here evaluates one closed combinatorial display directly,
without delegating to the others, so the specializations double as
independent implementations: every specialized function must agree with
:func:`spectrum_general` on its own domain, and the test suite checks that.

Shared shape of all the plane-curve formulas: for each j in [1, d] (d the
total degree) three integer coefficients are produced at the exponents
j/d, 1 + j/d and 2 + j/d, built from the twist coefficients

    u0(j) = sum_l ceil(j*m_l/d)*d_l - j
    uv(j) = sum_{l through v} ceil(j*m_l/d)*m_{v,l} - ceil(j*m_v/d)

via generalized binomials (binom(-1, 2) = 1 matters: it produces the
-delta(j, d) cancellation pattern at the top exponent).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .arrangement import ArrangementGraph, derived, require_valid
from .binomial import binom, ceil_div
from .spectrum import Spectrum

__all__ = [
    "TwistCoefficients",
    "spectrum_binary_linear",
    "spectrum_general",
    "spectrum_hyperplane",
    "spectrum_irreducible_power",
    "spectrum_isolated",
    "spectrum_reduced",
    "spectrum_smooth_components",
    "twist_coefficients",
]


@dataclass(frozen=True)
class TwistCoefficients:
    """Integer coefficients of the j-th twisting divisor class.

    ``e0`` is the coefficient on the pulled-back hyperplane direction,
    ``ev`` maps each singular point id to the coefficient on its
    exceptional direction.  For reduced arrangements e0 = d - j and
    ev[v] = m_v - ceil(j*m_v/d).
    """

    j: int
    e0: int
    ev: Mapping[str, int]


def _twist(graph: ArrangementGraph, data, j: int) -> TwistCoefficients:
    d = data.total_degree
    ceil_by_comp = {c.id: ceil_div(j * c.multiplicity, d) for c in graph.components}
    e0 = sum(ceil_by_comp[c.id] * c.degree for c in graph.components) - j
    ev = {}
    for point in graph.points:
        total = sum(ceil_by_comp[br.component] * br.mult for br in point.branches)
        ev[point.id] = total - ceil_div(j * data.point_mult[point.id], d)
    return TwistCoefficients(j, e0, ev)


def twist_coefficients(graph: ArrangementGraph, j: int) -> TwistCoefficients:
    """Evaluate u0(j) and uv(j) for a valid graph and 1 <= j <= d."""
    require_valid(graph)
    data = derived(graph)
    if not 1 <= j <= data.total_degree:
        raise ValueError(f"j must lie in [1, {data.total_degree}], got {j}")
    return _twist(graph, data, j)


def _three_level_spectrum(d: int, rows) -> Spectrum:
    """Assemble coefficients {(j, n0, n1, n2)} into a spectrum over exponents
    j/d, 1 + j/d, 2 + j/d."""
    terms: dict[Fraction, int] = {}
    for j, n0, n1, n2 in rows:
        base = Fraction(j, d)
        for level, n in enumerate((n0, n1, n2)):
            if n:
                alpha = level + base
                terms[alpha] = terms.get(alpha, 0) + n
    return Spectrum(terms)


def spectrum_general(graph: ArrangementGraph) -> Spectrum:
    """Spectrum of a possibly non-reduced ordinary curve arrangement."""
    require_valid(graph)
    data = derived(graph)
    d = data.total_degree
    d_red = data.reduced_degree
    comp_pairs = sum(binom(c.degree, 2) for c in graph.components)
    branch_pairs = {p.id: sum(binom(br.mult, 2) for br in p.branches) for p in graph.points}

    rows = []
    for j in range(1, d + 1):
        tw = _twist(graph, data, j)
        u0 = tw.e0
        n0 = binom(d_red - u0 - 1, 2)
        n1 = (u0 - 1) * (d_red - u0 - 1) + comp_pairs
        n2 = binom(u0 - 1, 2)
        for point in graph.points:
            uv = tw.ev[point.id]
            m_red = data.reduced_point_mult[point.id]
            n0 -= binom(m_red - uv - 1, 2)
            n1 -= uv * (m_red - uv - 1) + branch_pairs[point.id]
            n2 -= binom(uv, 2)
        if j == d:
            n2 -= 1
        rows.append((j, n0, n1, n2))
    return _three_level_spectrum(d, rows)


def spectrum_reduced(graph: ArrangementGraph) -> Spectrum:
    """Spectrum of a reduced arrangement (all component multiplicities 1),
    via the simplified display where u0 = d - j."""
    require_valid(graph)
    if not graph.is_reduced():
        bad = [c.id for c in graph.components if c.multiplicity != 1]
        raise ValueError(f"reduced formula needs all multiplicities 1; components {bad} violate that")
    data = derived(graph)
    d = data.total_degree
    comp_pairs = sum(binom(c.degree, 2) for c in graph.components)
    branch_pairs = {p.id: sum(binom(br.mult, 2) for br in p.branches) for p in graph.points}

    rows = []
    for j in range(1, d + 1):
        n0 = binom(j - 1, 2)
        n1 = (j - 1) * (d - j - 1) + comp_pairs
        n2 = binom(d - j - 1, 2)
        for point in graph.points:
            m_v = data.point_mult[point.id]
            ceil_v = ceil_div(j * m_v, d)
            n0 -= binom(ceil_v - 1, 2)
            n1 -= (ceil_v - 1) * (m_v - ceil_v) + branch_pairs[point.id]
            n2 -= binom(m_v - ceil_v, 2)
        if j == d:
            n2 -= 1
        rows.append((j, n0, n1, n2))
    return _three_level_spectrum(d, rows)


def spectrum_smooth_components(graph: ArrangementGraph) -> Spectrum:
    """Spectrum when every component is a smooth curve, i.e. every branch
    multiplicity m_{v,l} is 1 (so the per-branch pair counts vanish)."""
    require_valid(graph)
    bad = [
        (p.id, br.component)
        for p in graph.points
        for br in p.branches
        if br.mult != 1
    ]
    if bad:
        raise ValueError(f"smooth-components formula needs every branch multiplicity 1; got {bad}")
    data = derived(graph)
    d = data.total_degree
    d_red = data.reduced_degree
    comp_pairs = sum(binom(c.degree, 2) for c in graph.components)

    rows = []
    for j in range(1, d + 1):
        ceil_by_comp = {c.id: ceil_div(j * c.multiplicity, d) for c in graph.components}
        u0 = sum(ceil_by_comp[c.id] * c.degree for c in graph.components) - j
        n0 = binom(d_red - u0 - 1, 2)
        n1 = (u0 - 1) * (d_red - u0 - 1) + comp_pairs
        n2 = binom(u0 - 1, 2)
        for point in graph.points:
            m_red = data.reduced_point_mult[point.id]
            uv = sum(ceil_by_comp[br.component] for br in point.branches) - ceil_div(
                j * data.point_mult[point.id], d
            )
            n0 -= binom(m_red - uv - 1, 2)
            n1 -= uv * (m_red - uv - 1)
            n2 -= binom(uv, 2)
        if j == d:
            n2 -= 1
        rows.append((j, n0, n1, n2))
    return _three_level_spectrum(d, rows)


def spectrum_hyperplane(graph: ArrangementGraph) -> Spectrum:
    """Spectrum of a line arrangement (all component degrees 1), where both
    the component pair count and the branch pair counts vanish."""
    require_valid(graph)
    bad = [c.id for c in graph.components if c.degree != 1]
    if bad:
        raise ValueError(f"hyperplane formula needs all component degrees 1; components {bad} violate that")
    data = derived(graph)
    d = data.total_degree
    d_red = data.reduced_degree

    rows = []
    for j in range(1, d + 1):
        ceil_by_comp = {c.id: ceil_div(j * c.multiplicity, d) for c in graph.components}
        u0 = sum(ceil_by_comp.values()) - j
        n0 = binom(d_red - u0 - 1, 2)
        n1 = (u0 - 1) * (d_red - u0 - 1)
        n2 = binom(u0 - 1, 2)
        for point in graph.points:
            m_red = data.reduced_point_mult[point.id]
            uv = sum(ceil_by_comp[br.component] for br in point.branches) - ceil_div(
                j * data.point_mult[point.id], d
            )
            n0 -= binom(m_red - uv - 1, 2)
            n1 -= uv * (m_red - uv - 1)
            n2 -= binom(uv, 2)
        if j == d:
            n2 -= 1
        rows.append((j, n0, n1, n2))
    return _three_level_spectrum(d, rows)


def spectrum_irreducible_power(d: int, m: int, point_mults: Sequence[int]) -> Spectrum:
    """Spectrum of the m-th power of one irreducible degree-d curve whose
    ordinary multiple points have the given reduced multiplicities.

    Sampling runs over j in [1, m*d]; exponents live on the 1/(m*d) grid.
    """
    if d < 1:
        raise ValueError(f"degree must be >= 1, got {d}")
    if m < 1:
        raise ValueError(f"power must be >= 1, got {m}")
    for mu in point_mults:
        if not 2 <= mu <= d:
            raise ValueError(f"point multiplicity must lie in [2, {d}], got {mu}")
    total = m * d
    curve_pairs = binom(d, 2)

    rows = []
    for j in range(1, total + 1):
        q = ceil_div(j, d)
        u0 = q * d - j
        n0 = binom(d - u0 - 1, 2)
        n1 = (u0 - 1) * (d - u0 - 1) + curve_pairs
        n2 = binom(u0 - 1, 2)
        for mu in point_mults:
            uv = q * mu - ceil_div(j * mu, d)
            n0 -= binom(mu - uv - 1, 2)
            n1 -= uv * (mu - uv - 1) + binom(mu, 2)
            n2 -= binom(uv, 2)
        if j == total:
            n2 -= 1
        rows.append((j, n0, n1, n2))
    return _three_level_spectrum(total, rows)


def spectrum_binary_linear(mults: Sequence[int]) -> Spectrum:
    """Spectrum of a product of distinct linear forms in two variables,
    the l-th form raised to mults[l].  Exponents lie in (0, 2]."""
    if not mults:
        raise ValueError("need at least one linear form")
    for m in mults:
        if m < 1:
            raise ValueError(f"multiplicity must be >= 1, got {m}")
    d = sum(mults)
    d_red = len(mults)
    terms: dict[Fraction, int] = {}
    for j in range(1, d + 1):
        ceil_sum = sum(ceil_div(j * m, d) for m in mults)
        base = Fraction(j, d)
        n0 = d_red - ceil_sum + j - 1
        n1 = ceil_sum - j - 1 + (1 if j == d else 0)
        if n0:
            terms[base] = terms.get(base, 0) + n0
        if n1:
            terms[1 + base] = terms.get(1 + base, 0) + n1
    return Spectrum(terms)


def spectrum_isolated(d: int, n: int) -> Spectrum:
    """Spectrum of a homogeneous polynomial of degree d in n variables with
    an isolated singularity: the n-th power of t^(1/d) + ... + t^((d-1)/d).

    d = 1 gives the zero spectrum (empty geometric sum).
    """
    if d < 1:
        raise ValueError(f"degree must be >= 1, got {d}")
    if n not in (1, 2, 3):
        raise ValueError(f"ambient dimension must be 1, 2 or 3, got {n}")
    factor = Spectrum({Fraction(i, d): 1 for i in range(1, d)})
    result = Spectrum.term(0)
    for _ in range(n):
        result = result * factor
    return result
