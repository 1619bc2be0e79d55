"""Dense univariate polynomial arithmetic over Z and Q.

A polynomial is a list of coefficients in ascending order of degree,
with no trailing zeros; the zero polynomial is the empty list.  Integer
lists are the working representation: every routine that takes rational
input clears denominators first, since only signs, root locations and
exact divisibility matter here.

This module is the exact kernel underneath the binary-form layer: gcd
and squarefree decomposition, Sturm chains with exact rational
endpoints, and bisection-based real root isolation.  No floating point
anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd
from typing import Optional, Sequence

IntPoly = list  # list[int], ascending, stripped


def strip(coeffs: Sequence[int]) -> IntPoly:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return c


def degree(f: IntPoly) -> int:
    """Degree of f, with the zero polynomial mapped to -1."""
    return len(f) - 1


def is_zero(f: IntPoly) -> bool:
    return not f


def add(f: IntPoly, g: IntPoly) -> IntPoly:
    n = max(len(f), len(g))
    out = [0] * n
    for i, c in enumerate(f):
        out[i] += c
    for i, c in enumerate(g):
        out[i] += c
    return strip(out)


def neg(f: IntPoly) -> IntPoly:
    return [-c for c in f]


def sub(f: IntPoly, g: IntPoly) -> IntPoly:
    return add(f, neg(g))


def mul(f: IntPoly, g: IntPoly) -> IntPoly:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            out[i + j] += a * b
    return strip(out)


def scale(f: IntPoly, c: int) -> IntPoly:
    if c == 0:
        return []
    return [a * c for a in f]


def derivative(f: IntPoly) -> IntPoly:
    return strip([i * f[i] for i in range(1, len(f))])


def content(f: IntPoly) -> int:
    """Positive gcd of the coefficients (0 for the zero polynomial)."""
    g = 0
    for c in f:
        g = int_gcd(g, c)
    return g


def primitive(f: IntPoly) -> IntPoly:
    """Divide out the content, keeping the sign of the leading coefficient."""
    c = content(f)
    if c <= 1:
        return list(f)
    return [a // c for a in f]


def monic_sign(f: IntPoly) -> IntPoly:
    """Primitive part normalized to positive leading coefficient."""
    g = primitive(f)
    if g and g[-1] < 0:
        g = neg(g)
    return g


def from_fractions(coeffs: Sequence[Fraction]) -> IntPoly:
    """Clear denominators by the positive lcm; signs are preserved."""
    c = [Fraction(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    if not c:
        return []
    den = 1
    for x in c:
        den = den * x.denominator // int_gcd(den, x.denominator)
    return strip([int(x * den) for x in c])


def eval_frac(f: IntPoly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(f):
        acc = acc * x + c
    return acc


def eval_int_sign(f: IntPoly, num: int, den: int) -> int:
    """Sign of f(num/den) with den > 0, computed in integers.

    Uses den^deg(f) * f(num/den) = sum_i c_i num^i den^(d-i), Horner-style
    with one factor of den folded in per step.
    """
    if not f:
        return 0
    total = f[-1]
    dp = 1
    for c in reversed(f[:-1]):
        dp *= den
        total = total * num + c * dp
    return (total > 0) - (total < 0)


def eval_sign(f: IntPoly, x: Fraction) -> int:
    return eval_int_sign(f, x.numerator, x.denominator)


def divmod_frac(f: Sequence[Fraction], g: Sequence[Fraction]):
    """Quotient and remainder over Q; g must be nonzero."""
    r = [Fraction(c) for c in f]
    while r and r[-1] == 0:
        r.pop()
    gg = [Fraction(c) for c in g]
    while gg and gg[-1] == 0:
        gg.pop()
    if not gg:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(0, len(r) - len(gg) + 1)
    while r and len(r) >= len(gg):
        k = len(r) - len(gg)
        coef = r[-1] / gg[-1]
        q[k] = coef
        for i, c in enumerate(gg):
            r[k + i] -= coef * c
        while r and r[-1] == 0:
            r.pop()
    return q, r


def try_div_exact(f: IntPoly, g: IntPoly) -> Optional[IntPoly]:
    """f // g when g divides f exactly over Q, else None."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    if not f:
        return []
    q, r = divmod_frac([Fraction(c) for c in f], [Fraction(c) for c in g])
    if r:
        return None
    return from_fractions(q)


def gcd(f: IntPoly, g: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient."""
    a, b = monic_sign(f), monic_sign(g)
    while b:
        _, r = divmod_frac([Fraction(c) for c in a], [Fraction(c) for c in b])
        a, b = b, monic_sign(from_fractions(r))
    return a


def squarefree_part(f: IntPoly) -> IntPoly:
    """Product of the distinct irreducible factors, primitive, lc > 0."""
    if not f:
        raise ValueError("zero polynomial")
    if len(f) == 1:
        return [1]
    g = gcd(f, derivative(f))
    q = try_div_exact(monic_sign(f), g)
    assert q is not None
    return monic_sign(q)


def yun_decomposition(f: IntPoly) -> list:
    """Squarefree decomposition [(g_i, i)]: f = c * prod g_i^i, g_i squarefree.

    Yun's algorithm, characteristic 0.  Only components with positive
    degree are returned.
    """
    if not f:
        raise ValueError("zero polynomial")
    f = monic_sign(f)
    if len(f) == 1:
        return []
    fp = derivative(f)
    a = gcd(f, fp)
    b = try_div_exact(f, a)
    c = try_div_exact(fp, a)
    assert b is not None and c is not None
    d = sub(c, derivative(b))
    out = []
    i = 1
    while degree(b) > 0:
        a = gcd(b, d)
        if degree(a) > 0:
            out.append((monic_sign(a), i))
        b2 = try_div_exact(b, a)
        c2 = try_div_exact(d, a)
        assert b2 is not None and c2 is not None
        b = b2
        d = sub(c2, derivative(b))
        i += 1
    return out


def multiplicity_of_factor(f: IntPoly, factor: IntPoly) -> int:
    """Largest m with factor^m dividing f (f nonzero, deg factor >= 1)."""
    m = 0
    cur = list(f)
    while True:
        nxt = try_div_exact(cur, factor)
        if nxt is None:
            return m
        cur = nxt
        m += 1


# ---------------------------------------------------------------------------
# Sturm chains and real root isolation


def sturm_chain(f: IntPoly) -> list:
    """Sturm chain of the squarefree part of f, as primitive integer polys.

    Each remainder is negated and rescaled by a positive rational only,
    so the sign structure of the textbook chain is preserved exactly.
    """
    f0 = squarefree_part(f)
    chain = [f0, primitive(derivative(f0))]
    if not chain[-1]:
        chain.pop()
        return chain
    while True:
        _, r = divmod_frac(
            [Fraction(c) for c in chain[-2]], [Fraction(c) for c in chain[-1]]
        )
        ri = from_fractions(r)
        if not ri:
            break
        chain.append(primitive(neg(ri)))
    return chain


def _sign_variations(signs: Sequence[int]) -> int:
    prev = 0
    changes = 0
    for s in signs:
        if s == 0:
            continue
        if prev != 0 and s != prev:
            changes += 1
        prev = s
    return changes


def _variations_at(chain: Sequence[IntPoly], x: Optional[Fraction], at_pos_inf: bool) -> int:
    signs = []
    for p in chain:
        if x is not None:
            signs.append(eval_sign(p, x))
        elif not p:
            signs.append(0)
        elif at_pos_inf:
            signs.append(1 if p[-1] > 0 else -1)
        else:
            s = 1 if p[-1] > 0 else -1
            if (len(p) - 1) % 2 == 1:
                s = -s
            signs.append(s)
    return _sign_variations(signs)


def sturm_count(chain: Sequence[IntPoly], lo: Optional[Fraction], hi: Optional[Fraction]) -> int:
    """Distinct real roots of the chain's base polynomial in (lo, hi].

    lo=None means -infinity, hi=None means +infinity.  The chain comes
    from sturm_chain (squarefree base), so roots are counted without
    multiplicity.
    """
    va = _variations_at(chain, lo, at_pos_inf=False)
    vb = _variations_at(chain, hi, at_pos_inf=True)
    return va - vb


def count_real_roots(f: IntPoly, lo: Optional[Fraction] = None, hi: Optional[Fraction] = None) -> int:
    if degree(f) <= 0:
        return 0
    return sturm_count(sturm_chain(f), lo, hi)


def cauchy_bound(f: IntPoly) -> Fraction:
    """B such that every real root of f lies in (-B, B)."""
    if degree(f) < 1:
        return Fraction(1)
    lead = abs(f[-1])
    m = max(abs(c) for c in f[:-1]) if len(f) > 1 else 0
    return Fraction(m, lead) + 1


@dataclass(frozen=True)
class RootLoc:
    """One real root: either exact rational, or irrational in (lo, hi).

    For irrational roots the base polynomial changes sign over (lo, hi)
    and has no other root there; lo and hi are never roots.
    """

    lo: Fraction
    hi: Fraction
    exact: Optional[Fraction] = None

    @property
    def is_exact(self) -> bool:
        return self.exact is not None

    def upper(self) -> Fraction:
        return self.exact if self.exact is not None else self.hi

    def lower(self) -> Fraction:
        return self.exact if self.exact is not None else self.lo


def isolate_real_roots(f: IntPoly) -> list:
    """All distinct real roots of f as a sorted list of RootLoc.

    f must be nonzero; multiplicities are ignored (the squarefree part
    is isolated).  Rational roots hit during bisection are reported
    exactly; irrational roots get open isolating intervals with rational
    endpoints that are themselves non-roots.
    """
    if not f:
        raise ValueError("zero polynomial")
    s = squarefree_part(f)
    if degree(s) <= 0:
        return []
    b = cauchy_bound(s)
    chain = sturm_chain(s)
    out: list = []
    _bisect(s, chain, -b, b, sturm_count(chain, -b, b), out)
    out.sort(key=lambda r: r.lower())
    return out


def _bisect(s: IntPoly, chain, lo: Fraction, hi: Fraction, count: int, out: list) -> None:
    if count == 0:
        return
    if count == 1:
        out.append(RootLoc(lo, hi))
        return
    mid = (lo + hi) / 2
    if eval_sign(s, mid) == 0:
        # rational root: record it, divide it out, recurse on the quotient
        out.append(RootLoc(mid, mid, exact=mid))
        q = try_div_exact(s, [-mid.numerator, mid.denominator])
        assert q is not None
        chain_q = sturm_chain(q)
        _bisect(q, chain_q, lo, mid, sturm_count(chain_q, lo, mid), out)
        _bisect(q, chain_q, mid, hi, sturm_count(chain_q, mid, hi), out)
        return
    left = sturm_count(chain, lo, mid)
    _bisect(s, chain, lo, mid, left, out)
    _bisect(s, chain, mid, hi, count - left, out)


def refine_interval(s: IntPoly, lo: Fraction, hi: Fraction) -> tuple:
    """One bisection step on an isolating interval of squarefree s.

    The interval must contain exactly one root of s, with non-root
    endpoints; both properties are preserved.
    """
    mid = (lo + hi) / 2
    sm = eval_sign(s, mid)
    if sm == 0:
        # the unique root is exactly mid; shrink symmetrically around it
        w = (hi - lo) / 4
        return (mid - w, mid + w)
    if eval_sign(s, lo) * sm < 0:
        return (lo, mid)
    return (mid, hi)
