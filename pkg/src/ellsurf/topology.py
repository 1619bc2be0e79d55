"""Topology of the real locus from the arc structure of the base circle.

The real points of the base P^1 form a circle; the real zeros of the
discriminant cut it into arcs.  Over each arc the fibers are smooth real
cubics with one or two circles, and the count flips across every simple
zero.  For a surface whose real singular fibers are all nodal the mod-2
Betti numbers of the real locus are read off from the arc bookkeeping:

    h0 = 1 + arc_plus        h1 = 2 + 2 * arc_minus

where arc_plus / arc_minus count two-circle arcs whose two boundary
fibers both have non-connected / connected real nodal locus.  The Euler
characteristic equals the signed count of nodal types, and the two
expressions are cross-checked against each other on every run (and
against the independent cell-complex oracle in the test suite).

Nodal real types are decided by a sign rule derived from the double
root of the fiber cubic: writing the degenerate fiber as
y^2 = (x - a)^2 (x + 2a), the node has real tangents iff a > 0 iff
q > 0 at the point.  Likewise a smooth fiber has two circles iff the
cubic has three real roots iff the discriminant is negative there.
Both conventions are validated against the oracle, never assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .roots import INFINITY, CirclePoint, FinitePoint, sample_between, sign_at
from .weierstrass import (
    FiberReport,
    KodairaType,
    WeierstrassTriple,
    classify_fibers,
    discriminant,
)


class NotRealGeneric(Exception):
    """Some real singular fiber is not nodal; full topology is refused.

    Carries the offending fiber reports so callers can still present the
    per-fiber data.
    """

    def __init__(self, offenders: Sequence[FiberReport]):
        self.offenders = list(offenders)
        kinds = ", ".join(
            f"{r.kodaira.symbol} at {r.location}" for r in self.offenders
        )
        super().__init__(f"non-nodal real singular fibers: {kinds}")


@dataclass(frozen=True)
class RealFiberType:
    """Real type of a singular fiber: nodal with a sign, or anything else."""

    label: str  # 'I1+', 'I1-' or 'other'
    kodaira: Optional[KodairaType] = None

    @property
    def is_nodal(self) -> bool:
        return self.label in ("I1+", "I1-")

    def flipped(self) -> "RealFiberType":
        if self.label == "I1+":
            return I1_MINUS
        if self.label == "I1-":
            return I1_PLUS
        return self

    def __str__(self) -> str:
        return self.label


I1_PLUS = RealFiberType("I1+")
I1_MINUS = RealFiberType("I1-")


def real_type_of_nodal(t: WeierstrassTriple, c: CirclePoint) -> RealFiberType:
    """Type of the nodal fiber at c: 'I1-' iff q(c) > 0, 'I1+' iff q(c) < 0.

    c must be a simple real zero of the discriminant; anything else is
    rejected.
    """
    from .roots import valuation_at

    if valuation_at(discriminant(t), c) != 1:
        raise ValueError(f"the fiber at {c} is not nodal")
    return _nodal_type_unchecked(t, c)


def _nodal_type_unchecked(t: WeierstrassTriple, c: CirclePoint) -> RealFiberType:
    s = sign_at(t.q, c)
    if s == 0:
        raise ValueError("q vanishes at c, so the fiber at c is not nodal")
    return I1_MINUS if s > 0 else I1_PLUS


def smooth_fiber_components(t: WeierstrassTriple, c: CirclePoint) -> int:
    """Circles in the real fiber at a non-singular point: 2 iff Delta(c) < 0."""
    s = sign_at(discriminant(t), c)
    if s == 0:
        raise ValueError("c is a zero of the discriminant")
    return 2 if s < 0 else 1


@dataclass(frozen=True)
class Arc:
    """Open arc between consecutive real singular points (cyclically)."""

    start: CirclePoint
    end: CirclePoint
    sample: FinitePoint
    component_count: int
    start_type: RealFiberType
    end_type: RealFiberType


@dataclass(frozen=True)
class ArcDecomposition:
    points: Tuple[CirclePoint, ...]
    types: Tuple[RealFiberType, ...]
    arcs: Tuple[Arc, ...]
    arc_plus: int
    arc_minus: int
    n_plus: int
    n_minus: int


def arc_decomposition(t: WeierstrassTriple, reports: Optional[List[FiberReport]] = None) -> ArcDecomposition:
    """Singular points in cyclic order with nodal types and arc data.

    Requires at least one real singular fiber with every real zero of
    the discriminant simple; otherwise NotRealGeneric is raised.
    """
    if reports is None:
        reports, _ = classify_fibers(t)
    real = [r for r in reports if r.is_real]
    offenders = [r for r in real if r.v_delta != 1]
    if offenders:
        raise NotRealGeneric(offenders)
    if not real:
        raise NotRealGeneric([])
    points = _cyclic_real_points(real)
    types = tuple(_nodal_type_unchecked(t, c) for c in points)
    delta = discriminant(t)
    n = len(points)
    arcs: List[Arc] = []
    for i in range(n):
        left = points[i]
        right = points[(i + 1) % n]
        wraps = i == n - 1
        sample = sample_between(left, right, wraps=wraps)
        s = sign_at(delta, sample)
        assert s != 0, "arc sample landed on a discriminant zero"
        count = 2 if s < 0 else 1
        arcs.append(Arc(left, right, sample, count, types[i], types[(i + 1) % n]))
    for i in range(n):
        if arcs[i].component_count == arcs[(i + 1) % n].component_count:
            raise AssertionError(
                "circle count fails to alternate across a simple discriminant zero"
            )
    arc_plus = sum(
        1
        for a in arcs
        if a.component_count == 2 and a.start_type == I1_PLUS and a.end_type == I1_PLUS
    )
    arc_minus = sum(
        1
        for a in arcs
        if a.component_count == 2 and a.start_type == I1_MINUS and a.end_type == I1_MINUS
    )
    n_plus = sum(1 for ty in types if ty == I1_PLUS)
    n_minus = len(types) - n_plus
    return ArcDecomposition(
        points=tuple(points),
        types=types,
        arcs=tuple(arcs),
        arc_plus=arc_plus,
        arc_minus=arc_minus,
        n_plus=n_plus,
        n_minus=n_minus,
    )


def _cyclic_real_points(real: List[FiberReport]) -> List[CirclePoint]:
    """Sort real fiber locations along the circle.

    Locations come from classification, so algebraic points belong to
    distinct irreducible factors or distinct roots of one factor; they
    are refined until the cyclic order is unambiguous.
    """
    from .roots import circle_sort_key_refine

    return circle_sort_key_refine([r.location for r in real])


_SPHERE = "S0"


def _surface_label(orientable: bool, h1: int) -> str:
    """S_g for the orientable surface of genus g, V_q for chi = 2 - q."""
    if orientable:
        assert h1 % 2 == 0
        return f"S{h1 // 2}"
    return f"V{h1}"


@dataclass(frozen=True)
class BoundChecks:
    k: int
    h0: int
    h1: int
    component_bound_ok: bool  # h0 <= 5k
    betti_bound_ok: bool  # h1 <= 10k
    h1_even_ok: bool
    orientability_ok: bool  # orientable iff k even

    @property
    def all_ok(self) -> bool:
        return (
            self.component_bound_ok
            and self.betti_bound_ok
            and self.h1_even_ok
            and self.orientability_ok
        )


@dataclass(frozen=True)
class RealTopologyReport:
    h0: int
    h1: int
    h2: int
    chi_top: int
    orientable: bool
    components: Tuple[str, ...]
    arc_plus: int
    arc_minus: int
    n_plus: int
    n_minus: int
    no_real_singular_fibers: bool
    # With no real singular fiber and Delta > 0 the count computed from
    # signs is a single torus/Klein component; flagged because a real
    # section forces two in the standard degeneration picture and the
    # one-component reading deserves scrutiny downstream.
    single_component_caveat: bool = False

    @property
    def h_star(self) -> int:
        return self.h0 + self.h1 + self.h2


def betti(t: WeierstrassTriple, reports: Optional[List[FiberReport]] = None) -> RealTopologyReport:
    """Mod-2 Betti numbers, Euler characteristic and component types.

    Real-generic surfaces with at least one real nodal fiber use the arc
    formulas; surfaces with no real singular fiber are circle bundles
    over the circle with one or two torus/Klein components by the sign
    of the discriminant.  Everything else raises NotRealGeneric.
    """
    if reports is None:
        reports, _ = classify_fibers(t)
    orientable = t.k % 2 == 0
    if not any(r.is_real for r in reports):
        s = sign_at(discriminant(t), _nonvanishing_sample(t))
        assert s != 0
        h0 = 1 if s > 0 else 2
        label = "S1" if orientable else "V2"
        return RealTopologyReport(
            h0=h0,
            h1=2 * h0,
            h2=h0,
            chi_top=0,
            orientable=orientable,
            components=tuple([label] * h0),
            arc_plus=0,
            arc_minus=0,
            n_plus=0,
            n_minus=0,
            no_real_singular_fibers=True,
            single_component_caveat=(h0 == 1),
        )
    dec = arc_decomposition(t, reports)
    h0 = 1 + dec.arc_plus
    h1 = 2 + 2 * dec.arc_minus
    chi = dec.n_plus - dec.n_minus
    if chi != 2 * h0 - h1:
        raise AssertionError(
            f"Euler characteristic mismatch: nodal count gives {chi}, "
            f"arc formulas give {2 * h0 - h1}"
        )
    components = tuple([_SPHERE] * (h0 - 1) + [_surface_label(orientable, h1)])
    return RealTopologyReport(
        h0=h0,
        h1=h1,
        h2=h0,
        chi_top=chi,
        orientable=orientable,
        components=components,
        arc_plus=dec.arc_plus,
        arc_minus=dec.arc_minus,
        n_plus=dec.n_plus,
        n_minus=dec.n_minus,
        no_real_singular_fibers=False,
    )


def _nonvanishing_sample(t: WeierstrassTriple) -> CirclePoint:
    """Some real point where Delta does not vanish (Delta has no real zero here)."""
    delta = discriminant(t)
    for candidate in (FinitePoint(Fraction(0)), INFINITY, FinitePoint(Fraction(1))):
        if sign_at(delta, candidate) != 0:
            return candidate
    raise AssertionError("discriminant vanishes at every probe point")


def check_bounds(report: RealTopologyReport, k: int) -> BoundChecks:
    """Verdicts for the component and first-Betti bounds and parities."""
    return BoundChecks(
        k=k,
        h0=report.h0,
        h1=report.h1,
        component_bound_ok=report.h0 <= 5 * k,
        betti_bound_ok=report.h1 <= 10 * k,
        h1_even_ok=report.h1 % 2 == 0,
        orientability_ok=report.orientable == (k % 2 == 0),
    )
