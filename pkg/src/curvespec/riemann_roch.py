"""Independent spectrum computation via characteristic classes.

Pipeline: build the Chern class of the log cotangent bundle of the blown-up
plane from product formulas (tangent Chern class of a blow-up, multiplicative
inverses for the log twist), take Chern characters of its wedge powers, twist
by an explicit divisor class depending on an integer sample index j, multiply
by the Todd class, and integrate.  The resulting Euler characteristics
assemble into spectrum coefficients.

Everything is computed from first principles in the truncated cohomology
ring; the closed-form expansions (`*_closed` functions) are kept only as
regression targets so the two routes check each other.  Agreement of
:func:`spectrum_via_riemann_roch` with the combinatorial formulas in
:mod:`curvespec.formulas` is the package's central cross-validation.
"""

from __future__ import annotations

from fractions import Fraction

from .arrangement import ArrangementGraph, derived, require_valid
from .cohomology import ONE, CohClass, exceptional_class, hyperplane_e0, point_e
from .spectrum import Spectrum

__all__ = [
    "chern_cotangent",
    "chern_cotangent_log",
    "chern_cotangent_log_closed",
    "chern_tangent",
    "euler_characteristic",
    "line_bundle_ch",
    "spectrum_via_riemann_roch",
    "todd",
    "todd_closed",
    "twist_class",
    "wedge_ch",
]


def _strict_transform_classes(graph: ArrangementGraph) -> list[CohClass]:
    """[E_l] = -(d_l*e0 + sum_v m_{v,l}*e_v) for each component l."""
    through: dict[str, dict[str, int]] = {c.id: {} for c in graph.components}
    for point in graph.points:
        for br in point.branches:
            through[br.component][point.id] = br.mult
    return [exceptional_class(c.degree, through[c.id]) for c in graph.components]


def chern_tangent(graph: ArrangementGraph) -> CohClass:
    """Total Chern class of the tangent bundle of the blow-up, by the
    product formula c = (1 - e0)^3 * prod_v (1 + e_v)((1 - e0 - e_v)/(1 - e0))^2."""
    require_valid(graph)
    e0 = hyperplane_e0()
    base = (ONE - e0) * (ONE - e0) * (ONE - e0)
    total = base
    for point in graph.points:
        ev = point_e(point.id)
        ratio = (ONE - e0 - ev) * (ONE - e0).inverse()
        total = total * (ONE + ev) * ratio * ratio
    return total


def chern_cotangent(graph: ArrangementGraph) -> CohClass:
    """Total Chern class of the cotangent bundle: rank-2 duality negates the
    degree-1 part and keeps degree 2."""
    c = chern_tangent(graph)
    return c.degree_part(0) - c.degree_part(1) + c.degree_part(2)


def chern_cotangent_log(graph: ArrangementGraph) -> CohClass:
    """Total Chern class of the sheaf of 1-forms with log poles along the
    total transform of the arrangement (exceptional curves and strict
    transforms), via truncated inverses."""
    total = chern_cotangent(graph)
    for point in graph.points:
        total = total * (ONE - point_e(point.id)).inverse()
    for e_class in _strict_transform_classes(graph):
        total = total * (ONE - e_class).inverse()
    return total


def chern_cotangent_log_closed(graph: ArrangementGraph) -> CohClass:
    """Closed-form expansion of :func:`chern_cotangent_log`, used as a
    regression target for the product route.

    Degree 1 carries -(d_red - 3) on e0 and -(m_{v,red} - 2) on each e_v;
    degree 2 is assembled with e_v^2 rewritten as -e0^2.  The reduced degree
    d_red enters (not the total degree): log poles see each component once,
    whatever its multiplicity.
    """
    require_valid(graph)
    data = derived(graph)
    d_red = data.reduced_degree
    sq_deg = sum(c.degree**2 for c in graph.components)
    sq_branch = {p.id: sum(br.mult**2 for br in p.branches) for p in graph.points}

    b0 = Fraction(-(d_red - 3))
    bv = {p.id: Fraction(-(data.reduced_point_mult[p.id] - 2)) for p in graph.points}
    c2_e0 = Fraction(d_red**2 + sq_deg, 2) + 3 * (1 - d_red)
    top = c2_e0
    for p in graph.points:
        m_red = data.reduced_point_mult[p.id]
        # e_v^2 coefficient, flipped in sign by e_v^2 = -e0^2.
        top -= Fraction(m_red**2 + sq_branch[p.id], 2) - 2 * m_red + 1
    return CohClass(a=1, b0=b0, bv=bv, c=top)


def todd(graph: ArrangementGraph) -> CohClass:
    """Todd class 1 + c1/2 + (c1^2 + c2)/12 of the blown-up surface."""
    c = chern_tangent(graph)
    c1 = c.degree_part(1)
    c2 = c.degree_part(2)
    return ONE + c1 * Fraction(1, 2) + (c1 * c1 + c2) * Fraction(1, 12)


def todd_closed(graph: ArrangementGraph) -> CohClass:
    """Closed form 1 - (sum_v e_v + 3 e0)/2 + e0^2, regression target."""
    require_valid(graph)
    return CohClass(
        a=1,
        b0=Fraction(-3, 2),
        bv={p.id: Fraction(-1, 2) for p in graph.points},
        c=1,
    )


def wedge_ch(c_total: CohClass, p: int) -> CohClass:
    """Chern character of the p-th wedge power of a rank-2 bundle with the
    given total Chern class (p = 0, 1, 2)."""
    if c_total.degree_part(0) != ONE:
        raise ValueError("total Chern class must have scalar part 1")
    c1 = c_total.degree_part(1)
    c2 = c_total.degree_part(2)
    if p == 0:
        return ONE
    if p == 1:
        return CohClass(a=2) + c1 + (c1 * c1 - 2 * c2) * Fraction(1, 2)
    if p == 2:
        return ONE + c1 + c1 * c1 * Fraction(1, 2)
    raise ValueError(f"wedge power must be 0, 1 or 2, got {p}")


def line_bundle_ch(divisor: CohClass) -> CohClass:
    """Chern character 1 + u + u^2/2 of the line bundle with divisor class u."""
    if not divisor.is_divisor():
        raise ValueError(f"expected a pure degree-1 class, got {divisor!r}")
    return ONE + divisor + divisor * divisor * Fraction(1, 2)


def _twist_class(graph: ArrangementGraph, data, strict_classes, j: int) -> CohClass:
    d = data.total_degree
    i = d - j
    total = hyperplane_e0(i)
    for point in graph.points:
        total = total + point_e(point.id, (i * data.point_mult[point.id]) // d)
    for comp, e_class in zip(graph.components, strict_classes):
        total = total + e_class * ((i * comp.multiplicity) // d)
    return total


def twist_class(graph: ArrangementGraph, j: int) -> CohClass:
    """Divisor class of the j-th twist, built from floor divisions:
    (d - j)*e0 + sum_v floor((d-j)*m_v/d)*e_v + sum_l floor((d-j)*m_l/d)*[E_l].

    Expanding [E_l] reproduces the ceiling-based twist coefficients of the
    combinatorial formulas via floor((d-j)*m/d) = m - ceil(j*m/d).
    """
    require_valid(graph)
    data = derived(graph)
    if not 1 <= j <= data.total_degree:
        raise ValueError(f"j must lie in [1, {data.total_degree}], got {j}")
    return _twist_class(graph, data, _strict_transform_classes(graph), j)


def _integer(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise ArithmeticError(f"{what} must be an integer, got {value}")
    return value.numerator


def euler_characteristic(graph: ArrangementGraph, p: int, divisor: CohClass) -> int:
    """Euler characteristic of the p-th wedge of log 1-forms twisted by the
    line bundle of the given divisor class, by Hirzebruch-Riemann-Roch.

    Rational numbers appear mid-computation (Todd denominators); the result
    is asserted integral, so a fractional value signals an internal bug.
    """
    product = wedge_ch(chern_cotangent_log(graph), p) * line_bundle_ch(divisor) * todd(graph)
    return _integer(product.integrate(), f"chi_{p}")


def spectrum_via_riemann_roch(graph: ArrangementGraph) -> Spectrum:
    """Assemble the spectrum from Euler characteristics: the coefficient at
    exponent k + j/d is (-1)^k * (chi_{2-k}(twist_j) - delta), where delta
    is 1 exactly at the top exponent 3 (reduced cohomology correction)."""
    require_valid(graph)
    data = derived(graph)
    d = data.total_degree
    strict_classes = _strict_transform_classes(graph)
    log_chern = chern_cotangent_log(graph)
    td = todd(graph)
    weighted = [wedge_ch(log_chern, p) * td for p in range(3)]

    terms: dict[Fraction, int] = {}
    for j in range(1, d + 1):
        ch_twist = line_bundle_ch(_twist_class(graph, data, strict_classes, j))
        base = Fraction(j, d)
        for k in range(3):
            chi = _integer((weighted[2 - k] * ch_twist).integrate(), f"chi_{2 - k}")
            if k == 2 and j == d:
                chi -= 1
            n = chi if k % 2 == 0 else -chi
            if n:
                alpha = k + base
                terms[alpha] = terms.get(alpha, 0) + n
    return Spectrum(terms)
