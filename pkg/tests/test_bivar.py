"""Two-variable series: Euler expansions, extraction, affine characters."""

from fractions import Fraction

import pytest

from parachar import bivar as bv
from parachar import qseries as qs
from parachar.bivar import BivarSeries
from parachar.qseries import QSeries

from oracles import double_poch_inv_table, single_poch_inv_table

F = Fraction


def table_of(series: BivarSeries) -> dict:
    out = {}
    for m in series.x_support():
        for e, c in series.coeff_x(m).terms():
            out[(m, int(e))] = c
    return out


class TestEulerExpansion:
    def test_order_three_slices(self):
        e = bv.euler_inv_pochhammer(1, 3)
        assert e.x_support() == [0, 1, 2]
        assert e.coeff_x(0).terms() == [(F(0), 1)]
        assert e.coeff_x(1).terms() == [(F(1), 1), (F(2), 1)]
        assert e.coeff_x(2).terms() == [(F(2), 1)]

    def test_matches_product_oracle(self):
        got = table_of(bv.euler_inv_pochhammer(1, 9))
        assert got == single_poch_inv_table(9)

    def test_mirror_symmetry(self):
        plus = bv.euler_inv_pochhammer(1, 8)
        minus = bv.euler_inv_pochhammer(-1, 8)
        assert {(-m, e): c for (m, e), c in table_of(plus).items()} == table_of(minus)

    def test_x_sign_validated(self):
        with pytest.raises(ValueError):
            bv.euler_inv_pochhammer(2, 5)


class TestDoubleProduct:
    def test_constant_term_low_orders(self):
        ct = bv.double_pochhammer_inv(6).constant_term()
        assert [ct.coeff(e) for e in range(6)] == [1, 0, 1, 2, 4, 6]

    def test_matches_brute_force_table(self):
        got = table_of(bv.double_pochhammer_inv(8))
        assert got == double_poch_inv_table(8)

    def test_x_symmetry(self):
        prod = bv.double_pochhammer_inv(10)
        for m in range(10):
            assert prod.coeff_x(m) == prod.coeff_x(-m)

    def test_x_support_bounded_by_q_order(self):
        prod = bv.double_pochhammer_inv(7)
        assert all(abs(m) < 7 for m in prod.x_support())


class TestBivarOps:
    def test_mul_by_identity(self):
        f = bv.euler_inv_pochhammer(1, 6)
        assert f * bv.bivar_one(6) == f

    def test_mul_by_x_poly_two_terms(self):
        f = bv.bivar_one(5).mul_x_poly({1: 1, -1: 1})
        assert f.x_support() == [-1, 1]
        assert f.coeff_x(1) == qs.one(5)

    def test_constant_term_of_pure_x_poly(self):
        f = bv.bivar_one(5).mul_x_poly({1: 1, -1: 1})
        assert f.constant_term().is_zero()

    def test_constant_term_of_one(self):
        assert bv.bivar_one(5).constant_term() == qs.one(5)

    def test_coeff_x_missing_slice_is_zero_series(self):
        f = bv.bivar_one(5)
        g = f.coeff_x(3)
        assert g.is_zero() and g.order == 5

    def test_add_and_neg(self):
        f = bv.euler_inv_pochhammer(1, 6)
        assert (f - f).is_zero()
        assert f + (-f) == f - f

    def test_constructor_normalizes_orders(self):
        f = BivarSeries({0: qs.one(9)}, 5)
        assert f.q_order == 5
        with pytest.raises(ValueError):
            BivarSeries({0: qs.one(3)}, 5)

    def test_truncate(self):
        f = bv.euler_inv_pochhammer(1, 9)
        assert f.truncate(4) == bv.euler_inv_pochhammer(1, 4)


class TestWeightPoly:
    def test_s_zero(self):
        assert bv.sl2_weight_poly(0) == {0: 1}

    def test_s_one(self):
        assert bv.sl2_weight_poly(1) == {-1: 1, 0: 1, 1: 1}

    def test_length(self):
        assert len(bv.sl2_weight_poly(5)) == 11

    def test_coefficient_extraction_identity(self):
        # Coeff_{x^m} sum_s str(s) q^(2s(s+1)) = sum_{s>=|m|} q^(2s(s+1))
        order = 30
        acc = BivarSeries({}, order)
        s = 0
        while 2 * s * (s + 1) < order:
            term = bv.bivar_one(order).mul_x_poly(bv.sl2_weight_poly(s))
            acc = acc + term * qs.make_monomial(2 * s * (s + 1), 1, order)
            s += 1
        for m in range(-4, 5):
            expected = QSeries(
                {
                    2 * s * (s + 1): 1
                    for s in range(abs(m), 10)
                    if 2 * s * (s + 1) < order
                },
                order,
            )
            assert acc.coeff_x(m) == expected


class TestAffineChar:
    def test_s0_constant_term(self):
        ct = bv.affine_sl2_char(0, 6).constant_term()
        assert [ct.coeff(e) for e in range(6)] == [1, 0, 1, 2, 4, 6]

    def test_s1_constant_term(self):
        ct = bv.affine_sl2_char(1, 6).constant_term()
        assert [ct.coeff(e) for e in range(6)] == [0, 0, 0, 0, 1, 2]

    def test_x_symmetry(self):
        f = bv.affine_sl2_char(1, 9)
        for m in range(9):
            assert f.coeff_x(m) == f.coeff_x(-m)

    def test_leading_exponent(self):
        for s in range(4):
            ct = bv.affine_sl2_char(s, 40).constant_term()
            assert ct.min_exponent() == 2 * s * (s + 1)


class TestInvertUnit:
    def test_inverts_finite_product(self):
        p = bv.pochhammer_bivar(1, 8)
        inv = bv.invert_unit(p)
        assert p * inv == bv.bivar_one(8)

    def test_equals_euler_expansion(self):
        inv = bv.invert_unit(bv.pochhammer_bivar(1, 10))
        assert inv == bv.euler_inv_pochhammer(1, 10)

    def test_requires_x_support_from_zero(self):
        shifted = bv.bivar_one(5).mul_x_poly({1: 1})
        with pytest.raises(ValueError):
            bv.invert_unit(shifted)

    def test_requires_positive_q_valuation_off_diagonal(self):
        bad = BivarSeries({0: qs.one(5), 1: qs.one(5)}, 5)
        with pytest.raises(ValueError):
            bv.invert_unit(bad)


class TestTruncationConsistency:
    @pytest.mark.parametrize(
        "gen",
        [
            lambda N: bv.euler_inv_pochhammer(1, N),
            lambda N: bv.euler_inv_pochhammer(-1, N),
            lambda N: bv.double_pochhammer_inv(N),
            lambda N: bv.affine_sl2_char(2, N),
            lambda N: bv.pochhammer_bivar(1, N),
        ],
    )
    def test_truncate_commutes_with_generation(self, gen):
        assert gen(14).truncate(6) == gen(6)
