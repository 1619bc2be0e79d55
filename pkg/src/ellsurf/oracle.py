"""First-principles computation of (h0, h1, chi) of the real locus.

The base circle is sliced at every real zero of the discriminant (the
cuts) and at one rational sample inside every arc.  At a sample the
fiber is a smooth real cubic whose real roots are isolated exactly: one
root gives a single circle through the section point at infinity (the
"branch"), three roots give that branch plus a compact oval over the two
lower roots.  At a nodal cut the fiber either keeps one circle with an
extra isolated point (the oval family collapses) or degenerates to a
wedge of two circles (the oval meets the branch); which one is decided
from the double root of the degenerate cubic, not from any convention
used by the main pipeline: at a rational cut the double root x0 and the
simple root b = -2 x0 are computed and compared exactly, and at an
irrational cut the sign of x0 = -3q / 2p decides (p < 0 at a node is
asserted, never assumed).

The pieces assemble into a cell complex: every fiber circle is a vertex
plus a loop edge, an isolated point a bare vertex, a wedge a vertex with
two loops; every tube between adjacent slices contributes one connecting
edge and one face per matched fiber component.  Matching across a tube
is by role (oval to oval, branch to branch), which is exact because root
branches cannot cross without the discriminant vanishing, and the role
split survives the chart swap at infinity since the transition rescales
the cubic roots by a positive factor.  Then h0 comes from union-find
over the 1-skeleton, chi = V - E + F, and h1 = 2 h0 - chi.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import _intpoly as ip
from .roots import (
    INFINITY,
    AlgebraicPoint,
    CirclePoint,
    FinitePoint,
    InfinityPoint,
    circle_sort_key_refine,
    points_equal,
    sample_between,
    sign_at,
)
from .topology import NotRealGeneric, betti
from .weierstrass import WeierstrassTriple, classify_fibers


class OracleDisagreement(AssertionError):
    """The main pipeline and the oracle computed different topology."""


@dataclass(frozen=True)
class FiberSlice:
    """Fiber data over one slice point.

    kind is 'sample' for smooth fibers (comps lists roles 'oval'/'branch')
    or 'cut' for nodal ones (comps lists 'cap'+'circle' or 'wedge').
    """

    point: CirclePoint
    kind: str
    comps: Tuple[str, ...]
    pattern: str = ""  # 'collapse' or 'join' for cuts


@dataclass(frozen=True)
class OracleResult:
    h0: int
    h1: int
    chi: int
    vertices: int
    edges: int
    faces: int
    slices: Tuple[FiberSlice, ...]

    def triple(self) -> Tuple[int, int, int]:
        return (self.h0, self.h1, self.chi)


class _UnionFind:
    def __init__(self):
        self.parent: Dict = {}

    def add(self, x) -> None:
        self.parent.setdefault(x, x)

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb

    def count(self) -> int:
        return sum(1 for x in self.parent if self.find(x) == x)


def _fiber_cubic_at(t: WeierstrassTriple, pt: CirclePoint) -> list:
    """Integer model of x^3 + p x + q over the point (chart 2 at infinity)."""
    if isinstance(pt, InfinityPoint):
        pval = t.p.value_at_infinity()
        qval = t.q.value_at_infinity()
    else:
        assert isinstance(pt, FinitePoint)
        pval = t.p.evaluate(pt.value)
        qval = t.q.evaluate(pt.value)
    return ip.from_fractions([qval, pval, Fraction(0), Fraction(1)])


def _sample_slice(t: WeierstrassTriple, pt: CirclePoint) -> FiberSlice:
    cubic = _fiber_cubic_at(t, pt)
    roots = ip.isolate_real_roots(cubic)
    if len(roots) == 3:
        return FiberSlice(pt, "sample", ("oval", "branch"))
    if len(roots) == 1:
        return FiberSlice(pt, "sample", ("branch",))
    raise AssertionError(
        f"smooth real cubic with {len(roots)} real roots at {pt}; "
        "the slice point must avoid the discriminant zeros"
    )


def _cut_slice(t: WeierstrassTriple, pt: CirclePoint) -> FiberSlice:
    """Nodal fiber: decide collapse/join from the double-root geometry."""
    if isinstance(pt, AlgebraicPoint):
        s_p = sign_at(t.p, pt)
        s_q = sign_at(t.q, pt)
        if s_p != -1:
            raise AssertionError("p must be negative at a nodal fiber")
        if s_q == 0:
            raise AssertionError("q cannot vanish at a nodal fiber")
        # x0 = -3q/2p has the sign of q (p < 0); the simple root is -2 x0,
        # so the double root sits below the simple root iff x0 < 0
        pattern = "collapse" if s_q < 0 else "join"
    else:
        cubic = _fiber_cubic_at(t, pt)
        dbl = ip.gcd(cubic, ip.derivative(cubic))
        if ip.degree(dbl) != 1:
            raise AssertionError(f"fiber at {pt} is not nodal")
        x0 = Fraction(-dbl[0], dbl[1])
        lin = [-x0.numerator, x0.denominator]
        rest = ip.try_div_exact(ip.try_div_exact(cubic, lin), lin)
        assert rest is not None and ip.degree(rest) == 1
        beta = Fraction(-rest[0], rest[1])
        if x0 == beta:
            raise AssertionError(f"cusp at {pt}: triple root")
        pattern = "collapse" if x0 < beta else "join"
    comps = ("cap", "circle") if pattern == "collapse" else ("wedge",)
    return FiberSlice(pt, "cut", comps, pattern)


_LOOPS = {"oval": 1, "branch": 1, "circle": 1, "cap": 0, "wedge": 2}


def oracle_topology(
    t: WeierstrassTriple, extra_samples: Sequence[Fraction] = ()
) -> OracleResult:
    """(h0, h1, chi) of the real locus from the glued slice complex.

    extra_samples inserts more rational slice points (they must not be
    zeros of the discriminant); the output must not depend on them.
    """
    reports, _ = classify_fibers(t)
    real = [r for r in reports if r.is_real]
    offenders = [r for r in real if r.v_delta != 1]
    if offenders:
        raise NotRealGeneric(offenders)

    cuts = circle_sort_key_refine([r.location for r in real])
    cut_slices = [_cut_slice(t, c) for c in cuts]

    sample_pts: List[CirclePoint] = []
    if cuts:
        n = len(cuts)
        for i in range(n):
            wraps = i == n - 1
            sample_pts.append(sample_between(cuts[i], cuts[(i + 1) % n], wraps=wraps))
    else:
        sample_pts = [FinitePoint(Fraction(0)), INFINITY]
    for x in extra_samples:
        cand = FinitePoint(Fraction(x))
        if any(points_equal(cand, s) for s in sample_pts):
            continue
        if any(points_equal(cand, c) for c in cuts):
            raise ValueError(f"extra sample {x} is a discriminant zero")
        sample_pts.append(cand)

    slices_by_point: List[FiberSlice] = cut_slices + [
        _sample_slice(t, s) for s in sample_pts
    ]
    ordered_points = circle_sort_key_refine([s.point for s in slices_by_point])
    # circle_sort_key_refine may refine algebraic points; re-associate by equality
    slices: List[Optional[FiberSlice]] = [None] * len(ordered_points)
    for s in slices_by_point:
        for i, p in enumerate(ordered_points):
            if slices[i] is None and points_equal(s.point, p):
                slices[i] = s
                break
    assert all(s is not None for s in slices)

    uf = _UnionFind()
    V = E = F = 0
    for i, s in enumerate(slices):
        for j, comp in enumerate(s.comps):
            uf.add((i, j))
            V += 1
            E += _LOOPS[comp]

    n = len(slices)
    for i in range(n):
        a = slices[i]
        b = slices[(i + 1) % n]
        if a.kind == "cut" and b.kind == "cut":
            raise AssertionError("two adjacent cuts: an arc lost its sample")
        for (ca, cb) in _tube_matches(a, b):
            uf.union((i, ca), ((i + 1) % n, cb))
            E += 1
            F += 1

    chi = V - E + F
    h0 = uf.count()
    h1 = 2 * h0 - chi
    assert h1 >= 0 and h1 % 2 == 0, "mod-2 Betti numbers of a closed surface"
    collapses = sum(1 for s in slices if s.kind == "cut" and s.pattern == "collapse")
    joins = sum(1 for s in slices if s.kind == "cut" and s.pattern == "join")
    assert chi == collapses - joins, "cell count disagrees with nodal patterns"
    return OracleResult(h0, h1, chi, V, E, F, tuple(slices))


def _tube_matches(a: FiberSlice, b: FiberSlice) -> List[Tuple[int, int]]:
    """Index pairs of fiber components glued across the tube from a to b."""
    if a.kind == "sample" and b.kind == "sample":
        if len(a.comps) != len(b.comps):
            raise AssertionError(
                "circle count changed over an arc without a discriminant zero"
            )
        return [(i, i) for i in range(len(a.comps))]
    if a.kind == "cut":
        rev = _tube_matches(b, a)
        return [(j, i) for (i, j) in rev]
    # a is the sample, b the cut
    assert b.kind == "cut"
    if b.pattern == "join":
        return [(i, 0) for i in range(len(a.comps))]
    # collapse: cap = comps[0], circle = comps[1]
    if len(a.comps) == 2:
        return [(0, 0), (1, 1)]
    return [(0, 1)]


@dataclass(frozen=True)
class Agreement:
    h0: int
    h1: int
    chi: int
    oracle: OracleResult


def compare(t: WeierstrassTriple) -> Agreement:
    """Assert the arc-formula topology equals the oracle topology exactly."""
    report = betti(t)
    result = oracle_topology(t)
    mine = (report.h0, report.h1, report.chi_top)
    if mine != result.triple():
        trace = "; ".join(
            f"{s.kind}@{s.point}:{','.join(s.comps)}{':' + s.pattern if s.pattern else ''}"
            for s in result.slices
        )
        raise OracleDisagreement(
            f"pipeline (h0, h1, chi) = {mine} but oracle computed {result.triple()}\n"
            f"slices: {trace}"
        )
    return Agreement(*mine, oracle=result)
