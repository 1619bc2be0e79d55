"""Homogeneous binary forms with exact rational coefficients.

A form of degree d in (u, v) is stored as d+1 coefficients, entry i
being the coefficient of u^i v^(d-i).  The degree is part of the data:
a form may have vanishing top or bottom entries, which is how roots at
infinity (1:0) and at 0 are encoded.  Working affine data is obtained
by dehomogenizing at v=1 (which keeps every finite root) together with
the order of vanishing at infinity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Tuple, Union

from . import _intpoly as ip

Rational = Fraction

Scalar = Union[int, Fraction]


class FormDegreeError(ValueError):
    """Raised when an operation mixes forms of incompatible degrees."""


@dataclass(frozen=True)
class BinForm:
    """Binary form of fixed degree with Fraction coefficients."""

    degree: int
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError("degree must be non-negative")
        if len(self.coeffs) != self.degree + 1:
            raise ValueError(
                f"degree {self.degree} form needs {self.degree + 1} coefficients, "
                f"got {len(self.coeffs)}"
            )

    # -- constructors ------------------------------------------------------

    @staticmethod
    def make(degree: int, coeffs: Iterable[Scalar]) -> "BinForm":
        return BinForm(degree, tuple(Fraction(c) for c in coeffs))

    @staticmethod
    def zero(degree: int) -> "BinForm":
        return BinForm(degree, tuple([Fraction(0)] * (degree + 1)))

    @staticmethod
    def from_affine(degree: int, affine: Sequence[Scalar]) -> "BinForm":
        """Homogenize an affine polynomial in u to the given degree."""
        a = [Fraction(c) for c in affine]
        if len(a) > degree + 1:
            raise FormDegreeError("affine degree exceeds container degree")
        a += [Fraction(0)] * (degree + 1 - len(a))
        return BinForm(degree, tuple(a))

    @staticmethod
    def monomial(degree: int, i: int, c: Scalar = 1) -> "BinForm":
        """c * u^i v^(degree - i)."""
        coeffs = [Fraction(0)] * (degree + 1)
        coeffs[i] = Fraction(c)
        return BinForm(degree, tuple(coeffs))

    @staticmethod
    def from_linear_roots(roots: Sequence[Scalar], lead: Scalar = 1) -> "BinForm":
        """lead * prod (u - r v) over the given rational roots."""
        form = BinForm.make(0, [lead])
        for r in roots:
            form = form * BinForm.make(1, [-Fraction(r), 1])
        return form

    # -- basic queries ------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def affine(self) -> list:
        """Coefficients of f(u, 1), ascending, stripped."""
        a = list(self.coeffs)
        while a and a[-1] == 0:
            a.pop()
        return a

    def affine_int(self) -> list:
        """Primitive integer version of f(u, 1); signs preserved."""
        return ip.from_fractions(self.coeffs)

    def v_order_at_infinity(self) -> int:
        """Multiplicity of (1:0) as a root, i.e. degree minus affine degree."""
        if self.is_zero:
            raise ValueError("zero form has no well-defined vanishing order")
        return self.degree - (len(self.affine()) - 1)

    def evaluate(self, u: Scalar, v: Scalar = 1) -> Fraction:
        u = Fraction(u)
        v = Fraction(v)
        total = Fraction(0)
        for i, c in enumerate(self.coeffs):
            if c:
                total += c * u ** i * v ** (self.degree - i)
        return total

    def value_at_infinity(self) -> Fraction:
        """f(1, 0), the chart-2 value at the point at infinity."""
        return self.coeffs[self.degree]

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "BinForm") -> "BinForm":
        if not isinstance(other, BinForm):
            return NotImplemented
        if self.degree != other.degree:
            raise FormDegreeError(
                f"cannot add forms of degrees {self.degree} and {other.degree}"
            )
        return BinForm(
            self.degree, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "BinForm") -> "BinForm":
        return self + (-other)

    def __neg__(self) -> "BinForm":
        return BinForm(self.degree, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, BinForm):
            d = self.degree + other.degree
            out = [Fraction(0)] * (d + 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return BinForm(d, tuple(out))
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return BinForm(self.degree, tuple(a * c for a in self.coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BinForm":
        if n < 0:
            raise ValueError("negative power of a form")
        result = BinForm.make(0, [1])
        base = self
        k = n
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def u_derivative(self) -> "BinForm":
        if self.degree == 0:
            return BinForm.zero(0)
        return BinForm(
            self.degree - 1,
            tuple(self.coeffs[i + 1] * (i + 1) for i in range(self.degree)),
        )

    def v_derivative(self) -> "BinForm":
        if self.degree == 0:
            return BinForm.zero(0)
        return BinForm(
            self.degree - 1,
            tuple(self.coeffs[i] * (self.degree - i) for i in range(self.degree)),
        )

    def reversed_chart(self) -> "BinForm":
        """The same form read in the chart swapping u and v."""
        return BinForm(self.degree, tuple(reversed(self.coeffs)))

    # -- normalization -------------------------------------------------------

    def content_and_primitive(self) -> Tuple[Fraction, "BinForm"]:
        """Write f = c * g with c > 0 rational and g primitive integral.

        g keeps the sign of f.  Raises on the zero form.
        """
        if self.is_zero:
            raise ValueError("zero form has no content")
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // ip.int_gcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for c in ints:
            g = ip.int_gcd(g, c)
        prim = BinForm(self.degree, tuple(Fraction(c, g) for c in ints))
        return Fraction(g, den), prim

    def primitive(self) -> "BinForm":
        return self.content_and_primitive()[1]

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = []
            if i:
                mono.append("u" if i == 1 else f"u^{i}")
            j = self.degree - i
            if j:
                mono.append("v" if j == 1 else f"v^{j}")
            body = "*".join(mono)
            if not body:
                terms.append(str(c))
            elif c == 1:
                terms.append(body)
            elif c == -1:
                terms.append(f"-{body}")
            else:
                terms.append(f"{c}*{body}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


# ---------------------------------------------------------------------------
# gcd / squarefree structure, with the point at infinity treated as an
# ordinary root via its v-multiplicity.


def form_gcd(f: BinForm, g: BinForm) -> BinForm:
    """Primitive gcd as a form; (1:0) contributes min of the two v-orders."""
    if f.is_zero and g.is_zero:
        raise ValueError("gcd of two zero forms")
    if f.is_zero:
        return g.primitive()
    if g.is_zero:
        return f.primitive()
    ga = ip.gcd(f.affine_int(), g.affine_int())
    m = min(f.v_order_at_infinity(), g.v_order_at_infinity())
    return BinForm.from_affine(ip.degree(ga) + m, ga)


def squarefree_part(f: BinForm) -> BinForm:
    """Form with the same roots as f (including infinity), all simple."""
    if f.is_zero:
        raise ValueError("zero form")
    sa = ip.squarefree_part(f.affine_int())
    m = 1 if f.v_order_at_infinity() >= 1 else 0
    return BinForm.from_affine(ip.degree(sa) + m, sa)


def gcd_with_derivative_and_squarefree(f: BinForm) -> Tuple[BinForm, BinForm]:
    """Split f into (repeated part, squarefree part), up to a scalar.

    The repeated part is f divided by its squarefree part; the product
    of the two equals f up to a positive rational.
    """
    sq = squarefree_part(f)
    fa = f.affine_int()
    qa = ip.try_div_exact(fa, sq.affine_int())
    assert qa is not None, "squarefree part must divide the form"
    m = f.v_order_at_infinity() - sq.v_order_at_infinity()
    rep = BinForm.from_affine(ip.degree(qa) + m, qa)
    return rep, sq


def squarefree_decomposition(f: BinForm):
    """Yield (component, multiplicity) pairs covering every root of f.

    Components are squarefree forms; the point at infinity appears as
    its own degree-1 component (the form v) when f vanishes there.
    """
    if f.is_zero:
        raise ValueError("zero form")
    out = []
    for comp, m in ip.yun_decomposition(f.affine_int()):
        out.append((BinForm.from_affine(ip.degree(comp), comp), m))
    vo = f.v_order_at_infinity()
    if vo >= 1:
        out.append((BinForm.make(1, [1, 0]), vo))  # the form v
    return out


def divides_exactly(f: BinForm, g: BinForm) -> bool:
    """True when g divides f as forms (affine part and infinity order)."""
    if g.is_zero:
        raise ZeroDivisionError("division by the zero form")
    if f.is_zero:
        return True
    if g.v_order_at_infinity() > f.v_order_at_infinity():
        return False
    return ip.try_div_exact(f.affine_int(), g.affine_int()) is not None


def factor_multiplicity(f: BinForm, factor: BinForm) -> int:
    """Largest m with factor^m dividing f; f nonzero, factor non-constant."""
    if f.is_zero:
        raise ValueError("zero form")
    fa = f.affine_int()
    ka = factor.affine_int()
    vo_factor = factor.v_order_at_infinity()
    if ip.degree(ka) == 0:
        # pure power of v
        if vo_factor == 0:
            raise ValueError("constant factor")
        return f.v_order_at_infinity() // vo_factor
    m_aff = ip.multiplicity_of_factor(fa, ka)
    if vo_factor == 0:
        return m_aff
    return min(m_aff, f.v_order_at_infinity() // vo_factor)
