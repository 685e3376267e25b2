from fractions import Fraction

import pytest

from src.exact import GroupElem, Mat
from src.hecke import (
    FormValue,
    HeckeElem,
    act_on_form,
    apply_delta,
    apply_x,
    apply_y,
    convolve,
    epsilon,
    from_double_coset,
    hecke_T,
    is_cuspidal_at_infinity,
    j_embed,
    sigma_z,
    value_equal,
)

ORDER = 8
BETA2 = Mat(2, 0, 0, 1)
E4, E6, DELTA = FormValue.form("E4"), FormValue.form("E6"), FormValue.form("Delta")


def _cusp_element():
    """Delta(2z) spread over the double coset of diag(2, 1)."""
    return from_double_coset(2, DELTA.slash(BETA2))


def test_identity_acts_trivially():
    assert act_on_form(HeckeElem.identity(), E4) == E4
    assert hecke_T(1) == HeckeElem.identity()


def test_products_on_trivial_coset():
    product = convolve(HeckeElem.from_form(E4), HeckeElem.from_form(E6))
    assert product == HeckeElem.from_form(E4 * E6)


def test_crossed_product_rule():
    alpha, beta = Mat(2, 0, 0, 1), Mat(1, 1, 0, 2)
    product = HeckeElem.single(alpha, E4) * HeckeElem.single(beta, E6)
    assert product == HeckeElem.single(beta @ alpha, E4 * E6.slash(alpha))


def test_hecke_operators_multiply():
    t6 = hecke_T(6)
    assert len(t6) == 12
    assert hecke_T(2) * hecke_T(3) == t6
    assert hecke_T(3) * hecke_T(2) == t6


def test_t2_eigenvalues():
    assert value_equal(act_on_form(hecke_T(2), E4), E4.scale(Fraction(9, 2)), ORDER)
    assert value_equal(act_on_form(hecke_T(2), DELTA), DELTA.scale(Fraction(-3, 4)), ORDER)


def test_epsilon_inverts_j():
    h = {GroupElem.of(BETA2): 3, GroupElem.identity(): Fraction(1, 2)}
    assert epsilon(j_embed(h)) == h
    assert epsilon(HeckeElem.from_form(E4)) == {}


def test_from_double_coset_of_level_one_forms():
    assert from_double_coset(1, E4) == HeckeElem.from_form(E4)
    element = from_double_coset(2, E4)
    assert len(element) == 3
    assert all(value == E4 for _, value in element.items())


def test_from_double_coset_constant_is_primitive_hecke_operator():
    assert from_double_coset(2, FormValue.constant(1)) == hecke_T(2)
    scalar_part = HeckeElem.single(GroupElem.of(Mat.identity(), 2), 1)
    assert from_double_coset(4, FormValue.constant(1)) + scalar_part == hecke_T(4)


def test_from_double_coset_is_covariant():
    element = _cusp_element()
    gamma = Mat(1, 1, 0, 1)
    for key, value in element.items():
        moved = element.value_at(key.mat @ gamma)
        assert moved == value.slash(gamma)


def test_sigma_z():
    t2 = hecke_T(2)
    assert sigma_z(0, t2) == t2
    assert sigma_z(1, t2) == t2.scale(2)
    assert sigma_z(1, hecke_T(2) * hecke_T(3)) == sigma_z(1, hecke_T(2)) * sigma_z(1, hecke_T(3))
    with pytest.raises(ValueError):
        sigma_z(Fraction(1, 2), t2)


def test_sigma_z_sees_the_scalar():
    element = HeckeElem.single(GroupElem.of(Mat.identity(), 2), E4)
    assert sigma_z(1, element).value_at(GroupElem.of(Mat.identity(), 2)) == E4.scale(4)


def test_associativity_on_covariant_elements():
    pool = [hecke_T(2), _cusp_element(), HeckeElem.from_form(E4), from_double_coset(3, E6)]
    for a, b, c in [(pool[0], pool[1], pool[2]), (pool[1], pool[3], pool[0]), (pool[2], pool[0], pool[3])]:
        assert ((a * b) * c).equals(a * (b * c), ORDER)


def test_cuspidal_elements_form_an_ideal_stable_under_h1():
    cusp = _cusp_element()
    assert is_cuspidal_at_infinity(cusp)
    assert not is_cuspidal_at_infinity(hecke_T(2))
    assert is_cuspidal_at_infinity(cusp * hecke_T(2))
    assert is_cuspidal_at_infinity(HeckeElem.from_form(E4) * cusp)
    for op in (apply_x, apply_y, lambda F: apply_delta(1, F)):
        assert is_cuspidal_at_infinity(op(cusp))
