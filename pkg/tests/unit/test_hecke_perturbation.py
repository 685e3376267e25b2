from fractions import Fraction

import pytest

from src.exact import Mat
from src.hecke import (
    FormValue,
    HeckeElem,
    from_double_coset,
    hopf_act,
    perturb,
    value_equal,
)
from src.hopf import H1Elem, counit, delta2_prime, monomials_up_to

ORDER = 6
BETA2 = Mat(2, 0, 0, 1)
X, Y, D1, D2 = H1Elem.X(), H1Elem.Y(), H1Elem.delta(1), H1Elem.delta(2)


@pytest.fixture(scope="module")
def sample():
    return perturb(FormValue.form("eta4"), Fraction(2, 3), FormValue.mu(BETA2))


def _elements():
    return [HeckeElem.single(BETA2, FormValue.form("E4")), from_double_coset(2, FormValue.constant(1))]


def test_trivial_perturbation_is_the_unit():
    trivial = perturb(FormValue.zero(), 0, FormValue.zero())
    assert trivial.u(H1Elem.one()) == FormValue.constant(1)
    for h in (X, Y, D1, X * D1):
        assert trivial.u(h).is_zero()
    for a in _elements():
        for h in (X, Y, D1):
            assert trivial.act(h, a) == hopf_act(h, a)


def test_low_degree_values(sample):
    m = sample.m
    assert sample.u(X) == sample.t
    assert sample.u(Y) == FormValue.constant(Fraction(2, 3))
    assert sample.u(D1) == m
    assert sample.u(D2) == m.serre_x() + m * m
    assert sample.u(delta2_prime()) == m.serre_x() + (m * m).scale(Fraction(1, 2))


def test_weight_two_inputs_required():
    with pytest.raises(ValueError):
        perturb(FormValue.form("E4"), 1, FormValue.zero())
    mixed = FormValue.mu(Mat(2, 0, 0, 1)) + FormValue.form("E4")
    with pytest.raises(ValueError, match="weight-2"):
        perturb(FormValue.zero(), 1, mixed)


def test_u_is_a_convolution_cocycle(sample):
    monomials = monomials_up_to(2, 1)
    for h in monomials:
        for k in monomials:
            defect = sample.cocycle_defect(H1Elem.of(h), H1Elem.of(k))
            assert value_equal(defect, FormValue.zero(), ORDER), (h.render(), k.render())


@pytest.mark.slow
def test_u_is_a_convolution_cocycle_in_degree_three(sample):
    monomials = monomials_up_to(3, 1)
    for h in monomials:
        for k in monomials:
            if h.degree + k.degree > 3:
                continue
            defect = sample.cocycle_defect(H1Elem.of(h), H1Elem.of(k))
            assert value_equal(defect, FormValue.zero(), ORDER)


def test_inverse_closed_form_matches_recursion(sample):
    for mono in monomials_up_to(2, 1):
        h = H1Elem.of(mono)
        assert sample.u_inv(h) == sample.u_inv_generic(h), mono.render()


def test_u_times_inverse_is_the_counit(sample):
    for mono in monomials_up_to(3, 1):
        h = H1Elem.of(mono)
        product = sample.convolution(sample.u_monomial, sample.u_inv_generic_monomial, h)
        assert product == FormValue.constant(counit(h))


def test_closed_form_generators(sample):
    for a in _elements():
        assert sample.act(X, a).equals(sample.x_tilde(a), ORDER)
        assert sample.act(D1, a).equals(sample.delta1_tilde(a), ORDER)
        assert sample.act(Y, a) == sample.y_tilde(a)


def test_perturbed_schwarzian_is_inner(sample):
    a = HeckeElem.single(BETA2, FormValue.form("E4"))
    assert sample.act(delta2_prime(), a).equals(sample.delta2p_tilde(a), ORDER)
