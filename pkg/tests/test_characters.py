"""Character generators, highest weights, bracket coefficients."""

from fractions import Fraction

import pytest

from parachar import characters as ch
from parachar import qseries as qs

from oracles import double_poch_inv_table

F = Fraction

# sl(2) parafermion coset character, frozen from the factor-by-factor
# product oracle (tests/oracles.py)
PARA_SL2 = [1, 0, 1, 2, 4, 6, 11, 16, 27, 40, 63, 92, 141]


def coeffs(series, n):
    return [series.coeff(e) for e in range(n)]


class TestCentralCharge:
    def test_p2(self):
        assert ch.central_charge_p(2) == -10

    def test_p1(self):
        assert ch.central_charge_p(1) == 2

    def test_level_minus_five_halves(self):
        assert ch.central_charge_k(F(-5, 2)) == -10

    def test_pole(self):
        with pytest.raises(ValueError):
            ch.central_charge_k(-3)

    def test_p_must_be_positive(self):
        with pytest.raises(ValueError):
            ch.central_charge_p(0)

    def test_consistency_p_vs_k(self):
        # kappa = k + 3 = 1/p links the two parametrizations
        for p in range(1, 6):
            k = F(1, p) - 3
            assert ch.central_charge_k(k) == ch.central_charge_p(p)


class TestBracketCoefficients:
    def test_central_at_c_minus_ten(self):
        bc = ch.w23_bracket_coeffs(-10, 3, -3)
        assert bc.central == F(35, 18)
        assert bc.lambda_coeff == 2
        assert bc.l_coeff == F(-259, 60)

    def test_diagonal_modes_vanish(self):
        for c in (-10, 1, F(-22, 5)):
            for m in (-2, 0, 5):
                bc = ch.w23_bracket_coeffs(c, m, m)
                assert bc.lambda_coeff == 0
                assert bc.l_coeff == 0

    def test_degenerate_charge(self):
        # 22 + 5c = 0 kills the central and L terms
        bc = ch.w23_bracket_coeffs(F(-22, 5), 3, 1)
        assert bc.central == 0
        assert bc.l_coeff == 0
        assert bc.lambda_coeff == F(2, 3)


class TestHighestWeights:
    def test_vacuum(self):
        assert ch.highest_weight(2, 0, 0) == (0, 0, 2)

    def test_one_one(self):
        hw = ch.highest_weight(2, 1, 1)
        assert hw.h == 4 and hw.beta == 0

    def test_three_zero(self):
        hw = ch.highest_weight_p2(3, 0)
        assert hw.h == 9 and hw.beta == F(405, 8)

    def test_general_p_equals_closed_p2_form(self):
        for m in range(21):
            for n in range(21):
                assert ch.highest_weight(2, m, n)[:2] == ch.highest_weight_p2(m, n)[:2]

    def test_beta_antisymmetric_h_symmetric(self):
        for p in range(1, 6):
            for m in range(11):
                for n in range(11):
                    a = ch.highest_weight(p, m, n)
                    b = ch.highest_weight(p, n, m)
                    assert a.h == b.h
                    assert a.beta == -b.beta

    def test_h_in_thirds_integer_on_root_lattice(self):
        for m in range(11):
            for n in range(11):
                h = ch.highest_weight_p2(m, n).h
                assert (3 * h).denominator == 1
                if (m - n) % 3 == 0:
                    assert h.denominator == 1

    def test_diagonal_values(self):
        # h_(m,m) = 2m(m+1), beta = 0
        for m in range(10):
            hw = ch.highest_weight_p2(m, m)
            assert hw.h == 2 * m * (m + 1) and hw.beta == 0

    def test_p_must_be_positive(self):
        with pytest.raises(ValueError):
            ch.highest_weight(0, 1, 1)


class TestW23ModuleCharacters:
    def test_vacuum_product(self):
        assert coeffs(ch.ch_w23_product(0, 0, 6), 6) == [1, 0, 1, 2, 3, 4]

    def test_one_one_product(self):
        assert coeffs(ch.ch_w23_product(1, 1, 7), 7) == [0, 0, 0, 0, 1, 2, 3]

    def test_symmetric_in_m_n(self):
        assert ch.ch_w23_product(2, 1, 30) == ch.ch_w23_product(1, 2, 30)
        assert ch.ch_w23_weylsum(3, 1, 30) == ch.ch_w23_weylsum(1, 3, 30)

    def test_weylsum_equals_product_on_grid(self):
        for m in range(9):
            for n in range(9):
                assert ch.ch_w23_weylsum(m, n, 25) == ch.ch_w23_product(m, n, 25)

    def test_leading_exponent_is_h(self):
        # order past h(8,8) = 144 so every grid module is visible
        for m in range(9):
            for n in range(9):
                f = ch.ch_w23_weylsum(m, n, 150)
                assert f.min_exponent() == ch.highest_weight_p2(m, n).h

    def test_product_leading_exponent_grid_ten(self):
        # order past h(10,10) = 220
        for m in range(11):
            for n in range(11):
                f = ch.ch_w23_product(m, n, 230)
                assert f.min_exponent() == ch.highest_weight_p2(m, n).h

    def test_fractional_leading_exponent(self):
        f = ch.ch_w23_product(1, 0, 10)
        assert f.min_exponent() == F(5, 3)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            ch.ch_w23_product(-1, 0, 10)
        with pytest.raises(ValueError):
            ch.ch_w23_weylsum(0, -2, 10)


class TestParafermionSl2:
    @pytest.mark.parametrize(
        "gen",
        [
            ch.ch_para_sl2_ct,
            ch.ch_para_sl2_theta,
            ch.ch_para_sl2_tripleprod,
            ch.ch_para_sl2_qhyp,
            ch.ch_para_sl2_w23sum,
        ],
    )
    def test_frozen_values(self, gen):
        assert coeffs(gen(13), 13) == PARA_SL2

    def test_no_weight_one_state(self):
        for gen in (
            ch.ch_para_sl2_ct,
            ch.ch_para_sl2_theta,
            ch.ch_para_sl2_tripleprod,
            ch.ch_para_sl2_qhyp,
        ):
            assert gen(30).coeff(1) == 0
            assert gen(30).coeff(0) == 1

    def test_four_way_agreement_deep(self):
        base = ch.ch_para_sl2_theta(50)
        assert ch.ch_para_sl2_ct(50) == base
        assert ch.ch_para_sl2_tripleprod(50) == base
        assert ch.ch_para_sl2_qhyp(50) == base


class TestParafermionSl2Modules:
    def test_s0_degenerates(self):
        assert ch.ch_para_sl2_mod_theta(0, 30) == ch.ch_para_sl2_theta(30)
        assert ch.ch_para_sl2_mod_ct(0, 30) == ch.ch_para_sl2_ct(30)

    def test_s1_values(self):
        assert coeffs(ch.ch_para_sl2_mod_theta(1, 7), 7) == [0, 0, 0, 0, 1, 2, 3]
        assert coeffs(ch.ch_para_sl2_mod_ct(1, 7), 7) == [0, 0, 0, 0, 1, 2, 3]

    def test_leading_exponent(self):
        for s in range(5):
            f = ch.ch_para_sl2_mod_theta(s, 70)
            assert f.min_exponent() == 2 * s * (s + 1)

    def test_ct_equals_theta(self):
        for s in range(7):
            assert ch.ch_para_sl2_mod_ct(s, 35) == ch.ch_para_sl2_mod_theta(s, 35)

    def test_diverges_from_module_char_at_q9(self):
        # ch[(1,1)] and the charge-2 module character agree through q^8 only
        a = ch.ch_w23_product(1, 1, 12)
        b = ch.ch_para_sl2_mod_theta(1, 12)
        assert a.truncate(9) == b.truncate(9)
        assert a.coeff(9) == 16 and b.coeff(9) == 18


class TestFPolyAndGs:
    def test_f11(self):
        # head exponent 2 - 2 = 0, series (1-q)^2 (1-q^2)
        f = ch.f_poly(1, 1, 10)
        assert f == qs.QSeries({0: 1, 1: -2, 3: 2, 4: -1}, 10)

    def test_f_symmetric(self):
        for m, n in [(1, 4), (2, 5), (3, 3), (2, 8)]:
            assert ch.f_poly(m, n, 40) == ch.f_poly(n, m, 40)

    def test_f_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            ch.f_poly(0, 1, 10)

    def test_g0_is_theta_difference(self):
        expected = qs.false_theta(0, 40) - qs.false_theta(-1, 40)
        assert ch.g_s(0, 40) == expected

    def test_g0_low_order(self):
        assert ch.g_s(0, 7) == qs.QSeries({0: 1, 1: -2, 3: 2, 6: -2}, 7)

    def test_gs_equals_module_char_numerator(self):
        p = qs.pochhammer_q(None, 30)
        psq = p * p
        for s in range(5):
            assert ch.g_s(s, 30) == psq * ch.ch_para_sl2_mod_theta(s, 30)

    def test_min_sum_identity(self):
        # sum min(m,n) F_(m,n) over the congruent grid = sum_s G_s
        order = 40
        lhs = qs.zero(order)
        m = 1
        while 4 * (m * m + m + 1) - 6 * (m + 1) < order * 6:
            n = ((m - 1) % 3) + 1
            while 4 * (m * m + n * n + m * n) - 6 * (m + n) < order * 6:
                lhs = lhs + min(m, n) * ch.f_poly(m, n, order)
                n += 3
            m += 1
        rhs = qs.zero(order)
        s = 0
        while 12 * s * (s + 1) < order * 6:
            rhs = rhs + ch.g_s(s, order)
            s += 1
        assert lhs == rhs


class TestParafermionSl3:
    W0 = [1, 0, 1, 2, 5, 8, 14, 22, 37, 58, 92, 140, 217]

    @pytest.mark.parametrize(
        "gen", [ch.ch_para_sl3_minsum, ch.ch_para_sl3_signed, ch.ch_para_sl3_branch]
    )
    def test_frozen_values(self, gen):
        assert coeffs(gen(13), 13) == self.W0

    def test_three_way_agreement_deep(self):
        base = ch.ch_para_sl3_minsum(50)
        assert ch.ch_para_sl3_signed(50) == base
        assert ch.ch_para_sl3_branch(50) == base

    def test_difference_from_sl2_coset_is_charge_two_branch(self):
        diff = ch.ch_para_sl3_minsum(30) - ch.ch_para_sl2_theta(30)
        start = diff.truncate(12)
        assert start == ch.ch_para_sl2_mod_theta(1, 30).truncate(12)


class TestOctuplet:
    def test_low_orders(self):
        assert coeffs(ch.ch_octuplet(5), 5) == [1, 0, 1, 2, 11]

    def test_q3_has_only_vacuum_module(self):
        assert ch.ch_octuplet(13).coeff(3) == 2

    def test_octuplet_jump_at_q4(self):
        # dim V(1,1) = 8 copies of the (1,1) module arrive at weight 4
        vac = ch.ch_w23_product(0, 0, 6)
        assert ch.ch_octuplet(6).coeff(4) - vac.coeff(4) == 8

    def test_majorizes_minsum(self):
        oct_ = ch.ch_octuplet(25)
        w0 = ch.ch_para_sl3_minsum(25)
        assert all(oct_.coeff(e) >= w0.coeff(e) for e in range(25))


class TestNonnegativity:
    @pytest.mark.parametrize(
        "series",
        [
            lambda: ch.ch_para_sl2_ct(45),
            lambda: ch.ch_para_sl2_theta(45),
            lambda: ch.ch_para_sl2_tripleprod(45),
            lambda: ch.ch_para_sl2_qhyp(45),
            lambda: ch.ch_para_sl2_w23sum(45),
            lambda: ch.ch_para_sl2_mod_theta(3, 45),
            lambda: ch.ch_para_sl2_mod_ct(2, 45),
            lambda: ch.ch_para_sl3_minsum(45),
            lambda: ch.ch_para_sl3_signed(45),
            lambda: ch.ch_para_sl3_branch(45),
            lambda: ch.ch_octuplet(45),
            lambda: ch.ch_w23_product(2, 1, 45),
            lambda: ch.ch_w23_weylsum(4, 4, 45),
        ],
    )
    def test_graded_dimensions_nonnegative(self, series):
        assert all(c >= 0 for _, c in series().terms())


class TestTruncationConsistency:
    @pytest.mark.parametrize(
        "gen",
        [
            lambda N: ch.ch_w23_product(2, 1, N),
            lambda N: ch.ch_w23_weylsum(2, 1, N),
            lambda N: ch.ch_para_sl2_ct(N),
            lambda N: ch.ch_para_sl2_theta(N),
            lambda N: ch.ch_para_sl2_tripleprod(N),
            lambda N: ch.ch_para_sl2_qhyp(N),
            lambda N: ch.ch_para_sl2_w23sum(N),
            lambda N: ch.ch_para_sl2_mod_ct(2, N),
            lambda N: ch.ch_para_sl2_mod_theta(2, N),
            lambda N: ch.f_poly(2, 2, N),
            lambda N: ch.g_s(1, N),
            lambda N: ch.ch_para_sl3_minsum(N),
            lambda N: ch.ch_para_sl3_signed(N),
            lambda N: ch.ch_para_sl3_branch(N),
            lambda N: ch.ch_octuplet(N),
        ],
    )
    @pytest.mark.parametrize("pair", [(30, 13), (21, 20), (17, 1)])
    def test_truncate_commutes_with_generation(self, gen, pair):
        big, small = pair
        assert gen(big).truncate(small) == gen(small)


class TestAgainstBruteForceTable:
    def test_ct_form_equals_oracle_slices(self):
        table = double_poch_inv_table(11)
        got = ch.ch_para_sl2_ct(11)
        assert {int(e): c for e, c in got.terms()} == {
            e: c for (x, e), c in table.items() if x == 0
        }
