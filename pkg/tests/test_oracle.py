"""The cell-complex oracle and its agreement with the arc formulas.

These tests are what license the two derived sign conventions (two
circles iff the discriminant is negative; connected nodal locus iff q is
positive): the oracle never uses them, so exact agreement on a varied
corpus validates both.
"""

import random
from fractions import Fraction

import pytest

from ellsurf import (
    BinForm,
    NotRealGeneric,
    compare,
    oracle_topology,
    twist,
    validate,
)
from ellsurf.fuzz import random_valid_triple

from conftest import U, V


class TestKnownSurfaces:
    def test_w1(self, w1):
        res = oracle_topology(w1)
        assert res.triple() == (1, 2, 0)

    def test_twist_w1(self, w1):
        assert oracle_topology(twist(w1)).triple() == (1, 2, 0)

    def test_single_klein_bundle(self):
        t = validate(1, BinForm.zero(4), V ** 6 + U ** 6)
        assert oracle_topology(t).triple() == (1, 2, 0)

    def test_two_component_bundle(self):
        w = U * U + V * V
        t = validate(1, -(w ** 2), Fraction(1, 3) * w ** 3)
        assert oracle_topology(t).triple() == (2, 4, 0)

    def test_two_circle_arc_wrapping_through_infinity(self):
        # p = -3u^4, q = u^6 + v^6: nodal fibers at +-1 only, with the
        # two-circle arc running from 1 through infinity back to -1, so the
        # oval/branch split must survive the chart swap
        t = validate(1, -3 * U ** 4, U ** 6 + V ** 6)
        from ellsurf import arc_decomposition, betti

        dec = arc_decomposition(t)
        assert len(dec.points) == 2
        wrap_arc = dec.arcs[-1]
        assert wrap_arc.component_count == 2
        assert dec.arc_minus == 1 and dec.arc_plus == 0
        rep = betti(t)
        assert (rep.h0, rep.h1, rep.chi_top) == (1, 4, -2)
        assert rep.components == ("V4",)
        assert oracle_topology(t).triple() == (1, 4, -2)

    def test_euler_count_is_cellular(self, w1):
        res = oracle_topology(w1)
        assert res.chi == res.vertices - res.edges + res.faces

    def test_not_real_generic_refused(self):
        t = validate(1, BinForm.monomial(4, 2), BinForm.monomial(6, 3))
        with pytest.raises(NotRealGeneric):
            oracle_topology(t)


class TestRefinementInvariance:
    def test_extra_samples_do_not_change_w1(self, w1):
        base = oracle_topology(w1).triple()
        extra = [Fraction(1, 7), Fraction(-9, 2), Fraction(99), Fraction(5, 2)]
        assert oracle_topology(w1, extra_samples=extra).triple() == base

    def test_extra_samples_on_bundle(self):
        t = validate(1, BinForm.zero(4), V ** 6 + U ** 6)
        base = oracle_topology(t).triple()
        refined = oracle_topology(
            t, extra_samples=[Fraction(n, 3) for n in range(-6, 7)]
        ).triple()
        assert refined == base

    def test_extra_sample_at_cut_rejected(self, w1):
        with pytest.raises(ValueError):
            oracle_topology(w1, extra_samples=[Fraction(1)])


class TestAgreement:
    def test_w1_and_twist(self, w1):
        compare(w1)
        compare(twist(w1))

    def test_chi_equals_nodal_count_fuzzed(self):
        rng = random.Random(41)
        seen = 0
        while seen < 12:
            t = random_valid_triple(rng, 1, height=6)
            try:
                dec_chi = None
                from ellsurf import arc_decomposition

                dec = arc_decomposition(t)
                dec_chi = dec.n_plus - dec.n_minus
            except NotRealGeneric:
                continue
            res = oracle_topology(t)
            assert res.chi == dec_chi
            assert res.h1 % 2 == 0
            seen += 1

    def test_twist_negates_oracle_chi_fuzzed(self):
        rng = random.Random(42)
        seen = 0
        while seen < 8:
            t = random_valid_triple(rng, 1, height=6)
            try:
                a = oracle_topology(t)
                b = oracle_topology(twist(t))
            except NotRealGeneric:
                continue
            assert b.chi == -a.chi
            seen += 1

    def test_full_agreement_fuzzed_k1_k2(self):
        rng = random.Random(43)
        for k in (1, 2):
            seen = 0
            while seen < 6:
                t = random_valid_triple(rng, k, height=5)
                try:
                    compare(t)
                except NotRealGeneric:
                    continue
                seen += 1

    def test_agreement_with_nodal_fiber_at_infinity(self):
        # leading coefficients (-3, 2) cancel the top of 4p^3 + 27q^2, so the
        # discriminant drops degree and infinity becomes a singular point
        from ellsurf import INFINITY, classify_fibers, validate
        from ellsurf.weierstrass import WeierstrassError

        rng = random.Random(44)
        seen = 0
        while seen < 4:
            p = BinForm.make(4, [rng.randint(-4, 4) for _ in range(4)] + [-3])
            q = BinForm.make(6, [rng.randint(-4, 4) for _ in range(6)] + [2])
            try:
                t = validate(1, p, q)
            except WeierstrassError:
                continue
            reports, _ = classify_fibers(t)
            inf_nodal = any(
                str(r.location) == "inf" and r.kodaira.symbol == "I1" for r in reports
            )
            if not inf_nodal:
                continue
            try:
                compare(t)
            except NotRealGeneric:
                continue
            seen += 1
