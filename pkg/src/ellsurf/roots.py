"""Exact points of the real projective line and queries at them.

A point of P^1(R) is rational, irrational algebraic (carried by a
squarefree defining form plus an open isolating interval with rational
endpoints), or the point at infinity (1:0).  Everything here is exact:
signs and vanishing orders of forms at such points are decided by gcd
computations, Sturm counts and interval bisection, never by numerics.

The circle is ordered the standard way: the reals ascending, then
infinity, wrapping back to -infinity.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

from . import _intpoly as ip
from .binform import BinForm, form_gcd, squarefree_part

Rational = Fraction


@dataclass(frozen=True)
class FinitePoint:
    value: Fraction

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class AlgebraicPoint:
    """Irrational real root of `defining`, isolated in (lo, hi).

    `defining` is squarefree with integer primitive coefficients; it has
    exactly one root in the open interval and the endpoints are not
    roots.
    """

    defining: BinForm
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError("isolating interval must be non-degenerate")

    def refined(self) -> "AlgebraicPoint":
        """Halve the isolating interval (exact bisection step)."""
        lo, hi = ip.refine_interval(self.defining.affine_int(), self.lo, self.hi)
        return AlgebraicPoint(self.defining, lo, hi)

    def refined_below_width(self, width: Fraction) -> "AlgebraicPoint":
        pt = self
        while pt.hi - pt.lo >= width:
            pt = pt.refined()
        return pt

    def excluding(self, x: Fraction) -> "AlgebraicPoint":
        """Refine until the rational x lies outside [lo, hi]."""
        pt = self
        while pt.lo <= x <= pt.hi:
            pt = pt.refined()
        return pt

    def __str__(self) -> str:
        return f"root of {self.defining} in ({self.lo}, {self.hi})"


@dataclass(frozen=True)
class InfinityPoint:
    def __str__(self) -> str:
        return "inf"


INFINITY = InfinityPoint()

CirclePoint = Union[FinitePoint, AlgebraicPoint, InfinityPoint]


def finite(x) -> FinitePoint:
    return FinitePoint(Fraction(x))


# ---------------------------------------------------------------------------
# comparisons


def points_equal(a: CirclePoint, b: CirclePoint) -> bool:
    if isinstance(a, InfinityPoint) or isinstance(b, InfinityPoint):
        return isinstance(a, InfinityPoint) and isinstance(b, InfinityPoint)
    if isinstance(a, FinitePoint) and isinstance(b, FinitePoint):
        return a.value == b.value
    if isinstance(a, FinitePoint):
        a, b = b, a
    if isinstance(b, FinitePoint):
        # an algebraic point is irrational whenever its defining form has
        # no rational root in the interval; test by direct evaluation
        assert isinstance(a, AlgebraicPoint)
        if not (a.lo < b.value < a.hi):
            return False
        return a.defining.evaluate(b.value) == 0
    assert isinstance(a, AlgebraicPoint) and isinstance(b, AlgebraicPoint)
    lo = max(a.lo, b.lo)
    hi = min(a.hi, b.hi)
    if not lo < hi:
        return False
    g = form_gcd(a.defining, b.defining)
    ga = g.affine_int()
    if ip.degree(ga) < 1:
        return False
    return ip.count_real_roots(ga, lo, hi) >= 1


def compare_finite(a: CirclePoint, b: CirclePoint) -> int:
    """-1, 0, +1 ordering of two non-infinite points on the real line."""
    if points_equal(a, b):
        return 0
    av, bv = a, b
    while True:
        alo, ahi = _bounds(av)
        blo, bhi = _bounds(bv)
        if ahi <= blo:
            return -1
        if bhi <= alo:
            return 1
        if isinstance(av, AlgebraicPoint):
            av = av.refined()
        if isinstance(bv, AlgebraicPoint):
            bv = bv.refined()


def _bounds(p: CirclePoint) -> Tuple[Fraction, Fraction]:
    if isinstance(p, FinitePoint):
        return p.value, p.value
    assert isinstance(p, AlgebraicPoint)
    return p.lo, p.hi


def circle_sort_key_refine(points: Sequence[CirclePoint]) -> List[CirclePoint]:
    """Sort distinct points along R then infinity, refining as needed.

    Algebraic points are refined until intervals are pairwise disjoint
    and exclude every rational point in the list; the refined copies are
    returned.
    """
    infs = [p for p in points if isinstance(p, InfinityPoint)]
    if len(infs) > 1:
        raise ValueError("duplicate point at infinity")
    fin: List[CirclePoint] = [p for p in points if not isinstance(p, InfinityPoint)]
    rationals = [p.value for p in fin if isinstance(p, FinitePoint)]
    refined: List[CirclePoint] = []
    for p in fin:
        if isinstance(p, AlgebraicPoint):
            for x in rationals:
                p = p.excluding(x)
        refined.append(p)
    # pairwise disjoint algebraic intervals
    changed = True
    while changed:
        changed = False
        for i in range(len(refined)):
            for j in range(i + 1, len(refined)):
                a, b = refined[i], refined[j]
                if isinstance(a, AlgebraicPoint) and isinstance(b, AlgebraicPoint):
                    alo, ahi = _bounds(a)
                    blo, bhi = _bounds(b)
                    if ahi > blo and bhi > alo:
                        if points_equal(a, b):
                            raise ValueError("duplicate algebraic point")
                        refined[i] = a.refined()
                        refined[j] = b.refined()
                        changed = True
    refined.sort(key=functools.cmp_to_key(compare_finite))
    for prev, cur in zip(refined, refined[1:]):
        if points_equal(prev, cur):
            raise ValueError("duplicate point in circle order")
    return refined + infs


@dataclass(frozen=True)
class CircleOrder:
    """Distinct points of P^1(R) in cyclic order (reals ascending, then inf)."""

    points: Tuple[CirclePoint, ...]

    @staticmethod
    def from_points(points: Sequence[CirclePoint]) -> "CircleOrder":
        return CircleOrder(tuple(circle_sort_key_refine(points)))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


# ---------------------------------------------------------------------------
# isolation of all real roots of a form on the circle


def isolate_real_roots(f: BinForm) -> CircleOrder:
    """All distinct real roots of f on P^1(R) as exact circle points.

    Rational roots come back as FinitePoint, irrational ones as
    AlgebraicPoint against the irreducible factor that vanishes there,
    and infinity as InfinityPoint when v divides f.
    """
    if f.is_zero:
        raise ValueError("zero form")
    pts: List[CirclePoint] = []
    for factor in irreducible_factors(squarefree_part(f).affine_int()):
        pts.extend(points_of_irreducible(factor))
    if f.v_order_at_infinity() >= 1:
        pts.append(INFINITY)
    return CircleOrder.from_points(pts)


def irreducible_factors(poly: list) -> List[list]:
    """Distinct irreducible integer factors of a squarefree integer poly.

    Degree-0 content is dropped.  Uses sympy's factorization over Q;
    everything downstream stays in exact integer/Fraction arithmetic.
    """
    if ip.degree(poly) < 1:
        return []
    import sympy

    x = sympy.Symbol("x")
    expr = sympy.Poly(list(reversed(poly)), x)
    _, factors = expr.factor_list()
    out = []
    for fac, mult in factors:
        coeffs = [int(c) for c in reversed(fac.all_coeffs())]
        out.append(ip.monic_sign(coeffs))
    return out


def points_of_irreducible(factor: list) -> List[CirclePoint]:
    """Real points cut out by one irreducible integer polynomial."""
    if ip.degree(factor) == 1:
        return [FinitePoint(Fraction(-factor[0], factor[1]))]
    form = BinForm.from_affine(ip.degree(factor), factor)
    pts: List[CirclePoint] = []
    for loc in ip.isolate_real_roots(factor):
        assert loc.exact is None, "irreducible of degree >= 2 has no rational root"
        pts.append(AlgebraicPoint(form, loc.lo, loc.hi))
    return pts


# ---------------------------------------------------------------------------
# sign and vanishing order at a point


def sign_at(g: BinForm, c: CirclePoint) -> int:
    """Exact sign of the form g at the point c (0 when g vanishes there)."""
    if g.is_zero:
        return 0
    if isinstance(c, FinitePoint):
        val = g.evaluate(c.value)
        return (val > 0) - (val < 0)
    if isinstance(c, InfinityPoint):
        val = g.value_at_infinity()
        return (val > 0) - (val < 0)
    assert isinstance(c, AlgebraicPoint)
    common = form_gcd(g, c.defining).affine_int()
    if ip.degree(common) >= 1 and ip.count_real_roots(common, c.lo, c.hi) >= 1:
        return 0
    # g has no root at c; shrink until it has none in the whole interval,
    # then the sign is constant there
    ga = g.affine_int()
    chain = ip.sturm_chain(ga) if ip.degree(ga) >= 1 else None
    pt = c
    while chain is not None and ip.sturm_count(chain, pt.lo, pt.hi) > 0:
        pt = pt.refined()
    mid = Fraction(pt.lo + pt.hi, 2)
    return ip.eval_sign(ga, mid)


def valuation_at(g: BinForm, c: CirclePoint) -> int:
    """Multiplicity of c as a root of g (0 when g(c) != 0); g nonzero."""
    if g.is_zero:
        raise ValueError("zero form")
    if isinstance(c, InfinityPoint):
        return g.v_order_at_infinity()
    if isinstance(c, FinitePoint):
        ga = g.affine_int()
        r = c.value
        lin = [-r.numerator, r.denominator]
        return ip.multiplicity_of_factor(ga, lin)
    assert isinstance(c, AlgebraicPoint)
    for comp, mult in ip.yun_decomposition(g.affine_int()):
        common = ip.gcd(comp, c.defining.affine_int())
        if ip.degree(common) >= 1 and ip.count_real_roots(common, c.lo, c.hi) >= 1:
            return mult
    return 0


# ---------------------------------------------------------------------------
# rational samples inside circle arcs


def simplest_between(a: Fraction, b: Fraction) -> Fraction:
    """The smallest-denominator rational strictly inside the open (a, b).

    Among integers the candidate closest to zero is chosen, which makes
    the pick deterministic.
    """
    if not a < b:
        raise ValueError("empty interval")
    lo_int = _floor(a) + 1
    hi_int = _ceil(b) - 1
    if lo_int <= hi_int:
        # at least one integer strictly inside
        return Fraction(min(max(lo_int, 0), hi_int))
    n = _floor(a)
    if a == n:
        # interval (n, b) with no integer inside: take n + 1/m, m minimal
        m = _floor(1 / (b - n)) + 1
        return n + Fraction(1, m)
    # both endpoints in [n, n+1); recurse on the inverted fractional parts
    inner = simplest_between(1 / (b - n), 1 / (a - n))
    return n + 1 / inner


def _floor(x: Fraction) -> int:
    return x.numerator // x.denominator


def _ceil(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def sample_between(left: CirclePoint, right: CirclePoint, wraps: bool = False) -> FinitePoint:
    """A rational point strictly inside the arc from left to right.

    `wraps` marks the arc that runs from the last point through infinity
    back to the first; there (and whenever one endpoint is infinity) an
    integer beyond the finite data is chosen, otherwise the smallest-
    denominator rational strictly between the two roots.
    """
    if isinstance(left, InfinityPoint) and isinstance(right, InfinityPoint):
        raise ValueError("degenerate arc")
    if isinstance(left, InfinityPoint):
        lo, _ = _bounds(right)
        return FinitePoint(Fraction(_ceil(lo) - 1))
    if isinstance(right, InfinityPoint) or wraps:
        _, hi = _bounds(left)
        return FinitePoint(Fraction(_floor(hi) + 1))
    lpt, rpt = left, right
    while True:
        _, lhi = _bounds(lpt)
        rlo, _ = _bounds(rpt)
        if lhi < rlo:
            return FinitePoint(simplest_between(lhi, rlo))
        refined = False
        if isinstance(lpt, AlgebraicPoint):
            lpt, refined = lpt.refined(), True
        if isinstance(rpt, AlgebraicPoint):
            rpt, refined = rpt.refined(), True
        if not refined:
            raise ValueError("arc endpoints are not in increasing order")
