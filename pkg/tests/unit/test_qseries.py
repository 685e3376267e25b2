from fractions import Fraction

import numpy as np
import pytest
from sympy import divisor_sigma

from src.exact import Cyclotomic, GroupElem, Mat, NotInvertibleError, hnf_cosets
from src.qseries import (
    QSeries,
    delta,
    e2,
    e4,
    e6,
    eta4,
    g2_star,
    mu_series,
    mu_series_quotient,
    serre_x,
    slash_upper,
    sturm_order,
    theta,
)

ORDER = 30


def test_geometric_series_inverse():
    one_minus_q = QSeries({0: 1, 1: -1})
    geometric = QSeries.from_coefficients([1] * 20)
    product = one_minus_q * geometric
    assert product == QSeries.constant(1)
    assert product.truncation == 20


def test_multiplicative_identity():
    f = e4(ORDER)
    assert f * QSeries.constant(1) == f


def test_invert_eta4():
    f = eta4(ORDER)
    inv = f.invert()
    assert inv.valuation() == Fraction(-1, 6)
    product = inv * f
    assert product == QSeries.constant(1)
    assert product.truncation == ORDER


def test_invert_rejects_zero_series():
    with pytest.raises(NotInvertibleError):
        QSeries.zero(truncation=5).invert()


def test_theta_termwise():
    assert theta(QSeries.constant(7)).is_zero()
    assert theta(QSeries.monomial(1, Fraction(1, 6))) == QSeries.monomial(Fraction(1, 6), Fraction(1, 6))
    t = theta(e4(5))
    assert t.coefficient(1) == 240
    assert t.coefficient(2) == 2 * 2160


def test_classical_coefficients():
    assert eta4(ORDER).coefficient(Fraction(1, 6)) == 1
    assert eta4(ORDER).coefficient(Fraction(7, 6)) == -4
    f = e4(ORDER)
    for n in range(1, 10):
        assert f.coefficient(n) == 240 * int(divisor_sigma(n, 3))
    assert f.coefficient(2) == 2160
    d = delta(ORDER)
    assert d.coefficient(1) == 1 and d.coefficient(2) == -24 and d.coefficient(3) == 252


def test_g2_star_is_e2_over_six():
    g = g2_star(ORDER)
    assert g.constant_term() == Fraction(1, 6)
    assert g == e2(ORDER).scale(Fraction(1, 6))
    assert g.coefficient(1) == -4


def test_eta4_sixth_power_is_delta():
    assert eta4(ORDER) ** 6 == delta(ORDER)


def test_theta_is_derivation():
    rng = np.random.default_rng(5)
    for _ in range(10):
        f = QSeries.from_coefficients([int(v) for v in rng.integers(-5, 6, size=12)])
        g = QSeries.from_coefficients([int(v) for v in rng.integers(-5, 6, size=12)], offset=Fraction(1, 3))
        assert theta(f * g) == theta(f) * g + f * theta(g)


def test_serre_x_classical_identities():
    assert serre_x(eta4(ORDER), 2).is_zero()
    assert serre_x(QSeries.constant(1), 0).is_zero()
    assert serre_x(e4(ORDER), 4) == e6(ORDER).scale(Fraction(-1, 3))
    assert serre_x(e6(ORDER), 6) == (e4(ORDER) * e4(ORDER)).scale(Fraction(-1, 2))
    assert serre_x(delta(ORDER), 12).is_zero()


def test_serre_x_leibniz_on_weights():
    f2 = mu_series(Mat(2, 0, 0, 1), ORDER)
    g2 = eta4(ORDER)
    f4 = e4(ORDER)
    assert serre_x(f2 * g2, 4) == serre_x(f2, 2) * g2 + f2 * serre_x(g2, 2)
    assert serre_x(f2 * f4, 6) == serre_x(f2, 2) * f4 + f2 * serre_x(f4, 4)


def test_omega4_identity_exact_through_order_60():
    g = g2_star(60)
    lhs = theta(g) - (g * g).scale(Fraction(1, 2))
    assert lhs == e4(60).scale(Fraction(-1, 72))
    assert lhs.truncation == 60


def test_slash_upper_examples():
    f = eta4(ORDER)
    assert slash_upper(f, 2, GroupElem.identity()) == f
    assert slash_upper(f, 2, Mat(1, 3, 0, 1)) == -f
    doubled = slash_upper(f, 2, Mat(2, 0, 0, 1))
    assert doubled.valuation() == Fraction(1, 3)
    assert doubled.leading_coefficient() == 2


def test_slash_upper_ignores_scalar_and_sign():
    f = e4(ORDER)
    m = Mat(2, 1, 0, 3)
    assert slash_upper(f, 4, GroupElem.of(m, scalar=5)) == slash_upper(f, 4, m)
    assert slash_upper(f, 4, GroupElem.of(-m)) == slash_upper(f, 4, m)


def test_slash_upper_rejects_bad_input():
    with pytest.raises(ValueError):
        slash_upper(e4(ORDER), 3, Mat(2, 0, 0, 1))
    with pytest.raises(ValueError):
        slash_upper(e4(ORDER), 4, Mat(1, 0, 1, 1))


def test_slash_is_multiplicative_in_weight():
    for m in [Mat(2, 1, 0, 3), Mat(1, 1, 0, 2), Mat(3, 0, 0, 1)]:
        lhs = slash_upper(e4(ORDER) * eta4(ORDER), 6, m)
        rhs = slash_upper(e4(ORDER), 4, m) * slash_upper(eta4(ORDER), 2, m)
        assert lhs == rhs


def test_mu_series_vanishes_on_sl2z():
    for m in [Mat(1, 1, 0, 1), Mat(0, -1, 1, 0), Mat(2, 1, 1, 1)]:
        assert mu_series(m, ORDER).is_zero()


def test_mu_series_constant_terms():
    assert mu_series(Mat(2, 0, 0, 1), ORDER).constant_term() == Fraction(1, 6)
    assert mu_series(Mat(1, 0, 0, 2), ORDER).constant_term() == Fraction(-1, 12)


def test_mu_series_cocycle_on_upper_triangular():
    mats = [Mat(2, 0, 0, 1), Mat(1, 1, 0, 2), Mat(1, 0, 0, 3), Mat(2, 1, 0, 1)]
    for g1 in mats:
        for g2 in mats:
            g12 = GroupElem.of(g1) * GroupElem.of(g2)
            lhs = mu_series(g12, ORDER)
            rhs = slash_upper(mu_series(g1, 2 * ORDER), 2, g2) + mu_series(g2, ORDER)
            assert lhs == rhs


def test_mu_series_matches_log_derivative_quotient():
    for m in hnf_cosets(2) + hnf_cosets(3):
        assert mu_series(m, 12) == mu_series_quotient(m, 12)


@pytest.mark.parametrize("k,level,expected", [(4, 1, 1), (4, 6, 4), (12, 1, 1), (2, 2, 1)])
def test_sturm_order(k, level, expected):
    assert sturm_order(k, level) == expected


def test_cyclotomic_coefficients_appear_after_slash():
    f = slash_upper(e4(ORDER), 4, Mat(1, 1, 0, 4))
    assert f.coefficient(Fraction(1, 4)) == Cyclotomic.zeta(4) * 15
    g = slash_upper(e4(ORDER), 4, Mat(1, 1, 0, 2))
    assert g.coefficient(Fraction(1, 2)) == -60
