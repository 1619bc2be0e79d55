"""Weierstrass data for elliptic surfaces over P^1 and fiber classification.

A surface is given by a positive integer k together with forms p of
degree 4k and q of degree 6k, defining y^2 z = x^3 + p x z^2 + q z^3
fiberwise.  Admissible data must have a nonzero discriminant
Delta = 4 p^3 + 27 q^2 and must be minimal: no point of P^1 over the
complex numbers at which p vanishes to order >= 4 and q to order >= 6.

Singular fibers are classified by the standard short-Weierstrass
valuation table into Kodaira types; the sum of their Euler numbers must
come out to 12k exactly, which is asserted on every classification.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from . import _intpoly as ip
from .binform import BinForm, form_gcd
from .roots import INFINITY, CirclePoint, irreducible_factors, points_of_irreducible


class WeierstrassError(ValueError):
    """Invalid Weierstrass data."""


class DeltaIdenticallyZero(WeierstrassError):
    def __init__(self):
        super().__init__("discriminant 4p^3 + 27q^2 vanishes identically")


class NonMinimal(WeierstrassError):
    """Some point carries p-order >= 4 and q-order >= 6.

    The witness is a circle point when the offending point is real
    (rational or infinity), otherwise the offending irreducible factor.
    """

    def __init__(self, witness: Union[CirclePoint, BinForm]):
        self.witness = witness
        super().__init__(f"non-minimal Weierstrass data at {witness}")


@dataclass(frozen=True)
class WeierstrassTriple:
    """Validated Weierstrass data (k, p, q); build via validate()."""

    k: int
    p: BinForm
    q: BinForm


def validate(k: int, p: BinForm, q: BinForm) -> WeierstrassTriple:
    """Check degrees, nonzero discriminant and minimality; return the triple.

    Minimality is decided without factoring over extensions: a common
    root of order (>=4, >=6) of (p, q) anywhere on the complex projective
    line is exactly a common factor of p with its derivatives to order 3
    and q with its derivatives to order 5, taken in both affine charts.
    """
    if k < 1:
        raise WeierstrassError("k must be a positive integer")
    if p.degree != 4 * k:
        raise WeierstrassError(f"p must have container degree {4 * k}, got {p.degree}")
    if q.degree != 6 * k:
        raise WeierstrassError(f"q must have container degree {6 * k}, got {q.degree}")
    delta = 4 * p ** 3 + 27 * q ** 2
    if delta.is_zero:
        raise DeltaIdenticallyZero()
    witness = _nonminimal_witness(p, q)
    if witness is not None:
        raise NonMinimal(witness)
    return WeierstrassTriple(k, p, q)


def _derivative_chain(f: BinForm, order: int) -> List[BinForm]:
    """f and its pure u- and v-derivatives up to the given order."""
    out = [f]
    cur = f
    for _ in range(order):
        cur = cur.u_derivative()
        if cur.is_zero:
            break
        out.append(cur)
    cur = f
    for _ in range(order):
        cur = cur.v_derivative()
        if cur.is_zero:
            break
        out.append(cur)
    return out


def _nonminimal_witness(p: BinForm, q: BinForm):
    """A witness of the minimality failure, or None when (p, q) is minimal.

    A point has p-order >= 4 and q-order >= 6 iff it is a common root of
    the chains of pure partial derivatives (orders 0..3 of p and 0..5 of
    q, in both charts); an identically zero form imposes no constraint.
    """
    if p.is_zero:
        chain = _derivative_chain(q, 5)
    elif q.is_zero:
        chain = _derivative_chain(p, 3)
    else:
        chain = _derivative_chain(p, 3) + _derivative_chain(q, 5)
    g: Optional[BinForm] = None
    for f in chain:
        if f.is_zero:
            continue
        g = f if g is None else form_gcd(g, f)
        if g.degree == 0:
            return None
    assert g is not None and g.degree >= 1
    if g.v_order_at_infinity() >= 1:
        return INFINITY
    ga = g.affine_int()
    factor = irreducible_factors(ga)[0]
    pts = points_of_irreducible(factor)
    if pts:
        return pts[0]
    return BinForm.from_affine(ip.degree(factor), factor)


def discriminant(t: WeierstrassTriple) -> BinForm:
    """4 p^3 + 27 q^2, a form of degree 12k."""
    return 4 * t.p ** 3 + 27 * t.q ** 2


@dataclass(frozen=True)
class JInvariant:
    """Both j conventions, each reduced by the gcd of the two forms.

    `ratio` is (4p^3 : 27q^2); `standard` is (6912 p^3 : Delta), i.e.
    1728 * 4p^3 over 4p^3 + 27q^2.  `ratio_degenerate` flags q == 0,
    where the first convention has a vanishing denominator.
    """

    ratio_num: BinForm
    ratio_den: BinForm
    standard_num: BinForm
    standard_den: BinForm
    ratio_degenerate: bool


def j_invariant(t: WeierstrassTriple) -> JInvariant:
    num = 4 * t.p ** 3
    den = 27 * t.q ** 2
    std_num = 1728 * num
    std_den = discriminant(t)
    return JInvariant(
        *_reduce_pair(num, den),
        *_reduce_pair(std_num, std_den),
        ratio_degenerate=t.q.is_zero,
    )


def _reduce_pair(num: BinForm, den: BinForm) -> Tuple[BinForm, BinForm]:
    if num.is_zero or den.is_zero:
        return num, den
    g = form_gcd(num, den)
    qn = ip.try_div_exact(num.affine_int(), g.affine_int())
    qd = ip.try_div_exact(den.affine_int(), g.affine_int())
    assert qn is not None and qd is not None
    shared = ip.int_gcd(ip.content(qn), ip.content(qd))
    if shared > 1:
        qn = [c // shared for c in qn]
        qd = [c // shared for c in qd]
    return (
        BinForm.from_affine(num.degree - g.degree, qn),
        BinForm.from_affine(den.degree - g.degree, qd),
    )


def rescale(t: WeierstrassTriple, lam: Fraction) -> WeierstrassTriple:
    """(p, q) -> (lam^4 p, lam^6 q); an isomorphic presentation."""
    lam = Fraction(lam)
    if lam == 0:
        raise WeierstrassError("rescaling factor must be nonzero")
    return WeierstrassTriple(t.k, t.p * lam ** 4, t.q * lam ** 6)


def normalize(t: WeierstrassTriple) -> WeierstrassTriple:
    """Canonical representative of the positive rescaling orbit.

    Coefficients become integers and no prime ro has ro^2 dividing the
    content of p together with ro^3 dividing the content of q.  Scaling
    factors are positive, so the sign of q is never absorbed: (p, -q)
    and (p, q) normalize to distinct triples.
    """
    if t.p.is_zero:
        cq, _ = t.q.content_and_primitive()
        mu = _largest_nth_power_divisor(cq, 3)
    elif t.q.is_zero:
        cp, _ = t.p.content_and_primitive()
        mu = _largest_nth_power_divisor(cp, 2)
    else:
        cp, _ = t.p.content_and_primitive()
        cq, _ = t.q.content_and_primitive()
        mu = Fraction(1)
        for prime in _primes_of(cp) | _primes_of(cq):
            e = min(_valuation(cp, prime) // 2, _valuation(cq, prime) // 3)
            mu *= Fraction(prime) ** e
    return WeierstrassTriple(t.k, t.p * (1 / mu ** 2), t.q * (1 / mu ** 3))


def _primes_of(x: Fraction) -> set:
    import sympy

    return set(sympy.factorint(x.numerator).keys()) | set(
        sympy.factorint(x.denominator).keys()
    )


def _valuation(x: Fraction, prime: int) -> int:
    v = 0
    n = x.numerator
    while n % prime == 0:
        n //= prime
        v += 1
    d = x.denominator
    while d % prime == 0:
        d //= prime
        v -= 1
    return v


def _largest_nth_power_divisor(x: Fraction, n: int) -> Fraction:
    mu = Fraction(1)
    for prime in _primes_of(x):
        mu *= Fraction(prime) ** (_valuation(x, prime) // n)
    return mu


# ---------------------------------------------------------------------------
# Kodaira classification


@dataclass(frozen=True)
class KodairaType:
    """Kodaira symbol: kind in {I, II, III, IV, I*, IV*, III*, II*}.

    n is meaningful for kind I (n >= 1) and I* (n >= 0).
    """

    kind: str
    n: int = 0

    _EULER = {"II": 2, "III": 3, "IV": 4, "IV*": 8, "III*": 9, "II*": 10}

    @property
    def euler_number(self) -> int:
        if self.kind == "I":
            return self.n
        if self.kind == "I*":
            return self.n + 6
        return self._EULER[self.kind]

    @property
    def symbol(self) -> str:
        if self.kind == "I":
            return f"I{self.n}"
        if self.kind == "I*":
            return f"I{self.n}*"
        return self.kind

    def __str__(self) -> str:
        return self.symbol


def kodaira_from_valuations(v_p: Optional[int], v_q: Optional[int], v_delta: int) -> KodairaType:
    """Standard short-Weierstrass table; None encodes an identically zero form.

    Assumes minimality at the point (min(3 v_p, 2 v_q) < 12), which holds
    for every validated triple.
    """
    INF = 10 ** 9
    vp = INF if v_p is None else v_p
    vq = INF if v_q is None else v_q
    if v_delta < 1:
        raise ValueError("not a singular fiber")
    if vp == 0:
        assert vq == 0, "v_q must vanish when v_p does at a discriminant zero"
        return KodairaType("I", v_delta)
    if vq == 1:
        assert v_delta == 2
        return KodairaType("II")
    if vp == 1 and vq >= 2:
        assert v_delta == 3
        return KodairaType("III")
    if vp >= 2 and vq == 2:
        assert v_delta == 4
        return KodairaType("IV")
    if vp == 2 and vq > 3:
        assert v_delta == 6
        return KodairaType("I*", 0)
    if vp >= 3 and vq == 3:
        assert v_delta == 6
        return KodairaType("I*", 0)
    if vp == 2 and vq == 3:
        assert v_delta >= 6
        return KodairaType("I*", v_delta - 6)
    if vp >= 3 and vq == 4:
        assert v_delta == 8
        return KodairaType("IV*")
    if vp == 3 and vq >= 5:
        assert v_delta == 9
        return KodairaType("III*")
    if vp >= 4 and vq == 5:
        assert v_delta == 10
        return KodairaType("II*")
    raise ValueError(f"valuations (v_p={v_p}, v_q={v_q}, v_delta={v_delta}) violate minimality")


@dataclass(frozen=True)
class ConjugatePairTag:
    """Non-real fibers grouped by the irreducible factor cutting them out."""

    factor: BinForm
    pairs: int

    def __str__(self) -> str:
        return f"{self.pairs} conjugate pair(s) on {self.factor}"


@dataclass(frozen=True)
class FiberReport:
    location: Union[CirclePoint, ConjugatePairTag]
    v_p: Optional[int]
    v_q: Optional[int]
    v_delta: int
    kodaira: KodairaType
    is_real: bool

    @property
    def multiplicity_weight(self) -> int:
        """Number of complex points this report stands for."""
        if isinstance(self.location, ConjugatePairTag):
            return 2 * self.location.pairs
        return 1


@dataclass(frozen=True)
class SurfaceInvariants:
    k: int
    chi_top: int
    h11: int
    b2: int

    @staticmethod
    def for_k(k: int) -> "SurfaceInvariants":
        return SurfaceInvariants(k=k, chi_top=12 * k, h11=10 * k, b2=12 * k - 2)


def classify_fibers(t: WeierstrassTriple) -> Tuple[List[FiberReport], SurfaceInvariants]:
    """One report per singular fiber; conjugate pairs share a report.

    Valuations are taken per irreducible factor of the discriminant (all
    roots of one factor have identical orders in p, q and Delta), so no
    arithmetic over extensions is ever needed.  The Euler numbers are
    summed and checked against 12k.
    """
    delta = discriminant(t)
    da = delta.affine_int()
    pa = None if t.p.is_zero else t.p.affine_int()
    qa = None if t.q.is_zero else t.q.affine_int()
    reports: List[FiberReport] = []

    for factor in irreducible_factors(ip.squarefree_part(da)):
        v_delta = ip.multiplicity_of_factor(da, factor)
        v_p = None if pa is None else ip.multiplicity_of_factor(pa, factor)
        v_q = None if qa is None else ip.multiplicity_of_factor(qa, factor)
        kod = kodaira_from_valuations(v_p, v_q, v_delta)
        real_pts = points_of_irreducible(factor)
        for pt in real_pts:
            reports.append(FiberReport(pt, v_p, v_q, v_delta, kod, is_real=True))
        pairs = (ip.degree(factor) - len(real_pts)) // 2
        if pairs:
            tag = ConjugatePairTag(BinForm.from_affine(ip.degree(factor), factor), pairs)
            reports.append(FiberReport(tag, v_p, v_q, v_delta, kod, is_real=False))

    v_delta_inf = delta.v_order_at_infinity()
    if v_delta_inf >= 1:
        v_p_inf = None if t.p.is_zero else t.p.v_order_at_infinity()
        v_q_inf = None if t.q.is_zero else t.q.v_order_at_infinity()
        kod = kodaira_from_valuations(v_p_inf, v_q_inf, v_delta_inf)
        reports.append(
            FiberReport(INFINITY, v_p_inf, v_q_inf, v_delta_inf, kod, is_real=True)
        )

    total_euler = sum(r.kodaira.euler_number * r.multiplicity_weight for r in reports)
    if total_euler != 12 * t.k:
        raise AssertionError(
            f"Euler numbers sum to {total_euler}, expected {12 * t.k}: "
            "fiber classification is inconsistent"
        )
    return reports, SurfaceInvariants.for_k(t.k)


def real_singular_points(reports: List[FiberReport]) -> List[FiberReport]:
    return [r for r in reports if r.is_real]


def is_real_generic(reports: List[FiberReport]) -> bool:
    """Every real singular fiber nodal (simple real zero of Delta)."""
    return all(r.v_delta == 1 for r in reports if r.is_real)
