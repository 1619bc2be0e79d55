"""Twist, I0* step, iteration and the extremal search."""

import random
from fractions import Fraction

import pytest

from ellsurf import (
    AlgebraicPoint,
    BinForm,
    FinitePoint,
    InvalidI0StarParams,
    SearchBudget,
    betti,
    classify_fibers,
    discriminant,
    i0star_transform,
    iterate_i0star,
    make_params,
    normalize,
    search_extremal,
    twist,
    verify_i0star,
)
from ellsurf.fuzz import random_valid_triple
from ellsurf.oracle import compare
from ellsurf.topology import I1_MINUS, I1_PLUS, arc_decomposition



class TestTwist:
    def test_involution_after_normalize(self, w1):
        assert normalize(twist(twist(w1))) == normalize(w1)

    def test_preserves_discriminant(self, w1):
        assert discriminant(twist(w1)) == discriminant(w1)

    def test_preserves_complex_fiber_data(self, w1):
        def key(t):
            reports, _ = classify_fibers(t)
            return sorted(
                (r.kodaira.symbol, r.v_delta, r.multiplicity_weight) for r in reports
            )

        assert key(twist(w1)) == key(w1)

    def test_w1_types_fully_swapped(self, w1):
        dec = arc_decomposition(twist(w1))
        rational = [ty for pt, ty in zip(dec.points, dec.types) if isinstance(pt, FinitePoint)]
        algebraic = [ty for pt, ty in zip(dec.points, dec.types) if isinstance(pt, AlgebraicPoint)]
        assert all(ty == I1_PLUS for ty in rational)  # were I1- before the twist
        assert all(ty == I1_MINUS for ty in algebraic)

    def test_type_multiset_swapped_on_fuzzed(self):
        from ellsurf import NotRealGeneric

        rng = random.Random(13)
        seen = 0
        while seen < 10:
            t = random_valid_triple(rng, 1, height=6)
            try:
                dec = arc_decomposition(t)
                dec2 = arc_decomposition(twist(t))
            except NotRealGeneric:
                continue
            assert (dec2.n_plus, dec2.n_minus) == (dec.n_minus, dec.n_plus)
            seen += 1


class TestI0StarParams:
    def test_equal_centers_rejected(self, w1):
        with pytest.raises(InvalidI0StarParams):
            make_params(w1, 1, 1)

    def test_center_on_discriminant_zero_rejected(self, w1):
        with pytest.raises(InvalidI0StarParams):
            make_params(w1, 1, 7)  # u = 1 is a nodal fiber of w1

    def test_swapped_order_normalized(self, w1):
        params = make_params(w1, 5, 4)
        assert params.a == 4 and params.b == 5


class TestI0StarTransform:
    def test_discriminant_relation_and_k(self, w1):
        params = make_params(w1, 4, 5)
        y = i0star_transform(w1, params)
        assert y.k == 2
        r = BinForm.from_linear_roots([4, 5])
        assert discriminant(y) == r ** 6 * discriminant(w1)

    def test_j_preserved(self, w1):
        from ellsurf import j_invariant

        params = make_params(w1, 4, 5)
        y = i0star_transform(w1, params)
        jx, jy = j_invariant(w1), j_invariant(y)
        # the reduced 4p^3 : 27q^2 ratios coincide
        assert jx.ratio_num * jy.ratio_den == jy.ratio_num * jx.ratio_den

    def test_verify_no_flips_outside(self, w1):
        params = make_params(w1, 4, 5)
        y = i0star_transform(w1, params)
        ver = verify_i0star(w1, params, y)
        assert ver.ok, ver.failures()

    def test_verify_exact_flip_set(self, w1):
        # centers (0, 5/2): flips exactly the four nodal points in (0, 5/2),
        # namely r4 in (0,1), u = 1, u = 2 and r5 in (2, 5/2)
        from ellsurf import real_type_of_nodal

        params = make_params(w1, 0, Fraction(5, 2))
        y = i0star_transform(w1, params)
        ver = verify_i0star(w1, params, y)
        assert ver.ok, ver.failures()
        dec_x = arc_decomposition(w1)
        flipped = []
        for pt, ty in zip(dec_x.points, dec_x.types):
            if real_type_of_nodal(y, pt) != ty:
                flipped.append(pt)
        assert len(flipped) == 4
        values = sorted(pt.value for pt in flipped if isinstance(pt, FinitePoint))
        assert values == [1, 2]
        irrational = [pt for pt in flipped if isinstance(pt, AlgebraicPoint)]
        assert len(irrational) == 2
        # r4 lies in (0, 1), r5 in (2, 5/2)
        mids = sorted((pt.lo + pt.hi) / 2 for pt in irrational)
        assert 0 < mids[0] < 1 and 2 < mids[1] < Fraction(5, 2)

    def test_sum_euler_grows_by_12(self, w1):
        params = make_params(w1, 4, 5)
        y = i0star_transform(w1, params)
        _, inv_x = classify_fibers(w1)
        _, inv_y = classify_fibers(y)
        assert inv_y.chi_top == inv_x.chi_top + 12

    def test_fuzzed_verification(self):
        rng = random.Random(9)
        done = 0
        while done < 6:
            t = random_valid_triple(rng, 1, height=5)
            pairs = [(Fraction(17), Fraction(19)), (Fraction(-23), Fraction(29, 2))]
            for a, b in pairs:
                try:
                    params = make_params(t, a, b)
                except InvalidI0StarParams:
                    continue
                y = i0star_transform(t, params)
                ver = verify_i0star(t, params, y)
                assert ver.ok, ver.failures()
                done += 1
                break


class TestIterate:
    def test_empty_is_identity(self, w1):
        assert iterate_i0star(w1, []) == w1

    def test_two_steps(self, w1):
        y = iterate_i0star(w1, [(4, 5), (6, 7)])
        assert y.k == 3
        reports, _ = classify_fibers(y)
        istars = [r for r in reports if r.kodaira.symbol == "I0*"]
        assert len(istars) == 4


class TestSearch:
    def test_bound_rejected_immediately(self):
        res = search_extremal(1, 6, SearchBudget())
        assert not res.found and "bound" in res.reason

    @pytest.mark.parametrize("target", [1, 2, 3, 4, 5])
    def test_k1_targets(self, target):
        res = search_extremal(1, target, SearchBudget(max_candidates=128, rng_seed=0))
        assert res.found, res.reason
        rep = betti(res.triple)
        assert rep.h0 == target
        compare(res.triple)  # oracle agreement

    def test_twist_of_extremal_attains_betti_equality(self):
        res = search_extremal(1, 5, SearchBudget(max_candidates=128, rng_seed=0))
        assert res.found
        rep = betti(twist(res.triple))
        assert rep.h1 == 10  # h^{1,1} = 10k at k = 1
        compare(twist(res.triple))

    def test_deterministic(self):
        a = search_extremal(1, 3, SearchBudget(max_candidates=64, rng_seed=5))
        b = search_extremal(1, 3, SearchBudget(max_candidates=64, rng_seed=5))
        assert a.triple == b.triple and a.candidates_tried == b.candidates_tried

    def test_k2_target(self):
        res = search_extremal(2, 7, SearchBudget(max_candidates=128, rng_seed=0))
        assert res.found, res.reason
        assert betti(res.triple).h0 == 7

    @pytest.mark.parametrize("k,target", [(2, 9), (3, 13)])
    def test_higher_k_with_sign_windows(self, k, target):
        # 4k + 1 components needs every h-root pair plus k dip windows
        res = search_extremal(k, target, SearchBudget(max_candidates=64, rng_seed=0))
        assert res.found, res.reason
        assert betti(res.triple).h0 == target

    def test_unreachable_target_reports_reason(self):
        res = search_extremal(2, 10, SearchBudget(max_candidates=64, rng_seed=0))
        assert not res.found
        assert "windows" in res.reason
