from fractions import Fraction

import numpy as np
import pytest

from src.exact import GroupElem, Mat
from src.hecke import (
    FormValue,
    HeckeElem,
    apply_delta,
    apply_x,
    apply_y,
    convolve,
    from_double_coset,
    gv_pair,
    hecke_T,
    hopf_act,
    inner_bracket,
    omega4,
    projection_P,
    rc1_bracket,
    schwarzian_sigma,
    value_equal,
)
from src.hopf import H1Elem, delta2_prime, monomials_up_to, twisted_antipode
from src.qseries import e4, e6, g2_star, theta

ORDER = 6
BETA2 = Mat(2, 0, 0, 1)
E4, E6 = FormValue.form("E4"), FormValue.form("E6")
X, Y, D1 = H1Elem.X(), H1Elem.Y(), H1Elem.delta(1)


def _pool():
    return [
        HeckeElem.from_form(E4),
        HeckeElem.single(BETA2, E4),
        HeckeElem.single(Mat(1, 1, 0, 2), FormValue.form("eta4")),
        HeckeElem.single(Mat(1, 0, 0, 3), FormValue.mu(BETA2)),
        from_double_coset(2, FormValue.constant(1)),
    ]


def _pairs(count, seed):
    rng = np.random.default_rng(seed)
    pool = _pool()
    for _ in range(count):
        yield pool[int(rng.integers(len(pool)))], pool[int(rng.integers(len(pool)))]


def test_generators_on_simple_elements():
    assert apply_delta(1, HeckeElem.from_form(E4)).is_zero()
    moved = apply_delta(1, HeckeElem.single(BETA2, 1))
    assert moved == HeckeElem.single(BETA2, FormValue.mu(BETA2))
    assert moved.value_at(BETA2).qexpand(ORDER).constant_term() == Fraction(1, 6)
    assert apply_y(HeckeElem.from_form(E4)) == HeckeElem.from_form(E4.scale(2))


def test_leibniz_rules():
    for a, b in _pairs(12, seed=11):
        ab = a * b
        assert apply_y(ab) == apply_y(a) * b + a * apply_y(b)
        assert apply_delta(1, ab).equals(apply_delta(1, a) * b + a * apply_delta(1, b), ORDER)
        expected = apply_x(a) * b + a * apply_x(b) + apply_delta(1, a) * apply_y(b)
        assert apply_x(ab).equals(expected, ORDER)


def test_higher_deltas_are_commutators():
    for F in _pool():
        for n in (1, 2):
            bracket = apply_x(apply_delta(n, F)) - apply_delta(n, apply_x(F))
            assert bracket == apply_delta(n + 1, F)


def test_action_is_a_representation():
    monomials = monomials_up_to(2, 1)
    F = HeckeElem.single(BETA2, E4)
    for h in monomials[:6]:
        for k in monomials[:6]:
            u, v = H1Elem.of(h), H1Elem.of(k)
            assert hopf_act(u * v, F).equals(hopf_act(u, hopf_act(v, F)), ORDER)


def test_schwarzian_cocycle():
    assert schwarzian_sigma(Mat.identity()).is_zero()
    assert schwarzian_sigma(Mat(1, 1, 0, 1)).is_zero()
    sigma = schwarzian_sigma(BETA2)
    assert sigma.weight == 4
    assert value_equal(sigma, omega4().slash(BETA2) - omega4(), ORDER)


def test_omega4():
    series = omega4().qexpand(ORDER)
    assert series.constant_term() == Fraction(-1, 72)
    g = g2_star(ORDER + 1)
    assert series == (theta(g) - g * g * Fraction(1, 2)).truncate(ORDER)


def test_delta2_prime_is_inner():
    a = HeckeElem.single(BETA2, E4)
    lhs = hopf_act(delta2_prime(), a)
    w = HeckeElem.from_form(omega4())
    assert lhs.equals(convolve(a, w) - convolve(w, a), ORDER)
    assert lhs.equals(-inner_bracket(omega4(), a), ORDER)


def test_rc1_on_level_one_forms():
    f = HeckeElem.from_form(E4)
    assert rc1_bracket(f, f).is_zero()
    bracket = rc1_bracket(f, HeckeElem.from_form(E6)).value_at(GroupElem.identity())
    s4, s6 = e4(ORDER + 1), e6(ORDER + 1)
    classical = s4 * theta(s6) * 4 - theta(s4) * s6 * 6
    assert bracket.qexpand(ORDER) == (classical * Fraction(-1, 2)).truncate(ORDER)


def test_rc1_is_a_hochschild_cocycle():
    cusp = from_double_coset(2, FormValue.form("Delta").slash(BETA2))
    pool = [HeckeElem.from_form(E4), hecke_T(2), cusp, from_double_coset(3, E6)]
    for a1, a2, a3 in [(pool[0], pool[1], pool[2]), (pool[2], pool[3], pool[1])]:
        total = (
            a1 * rc1_bracket(a2, a3)
            - rc1_bracket(a1 * a2, a3)
            + rc1_bracket(a1, a2 * a3)
            - rc1_bracket(a1, a2) * a3
        )
        assert total.equals(HeckeElem.zero(), ORDER)


def test_projection_and_gv_pairing():
    assert projection_P(HeckeElem.from_form(E4)).is_zero()
    gamma = GroupElem.of(BETA2)
    pairing = gv_pair(HeckeElem.single(gamma.inverse(), 1), HeckeElem.single(gamma, 1))
    assert pairing == -FormValue.mu(Mat(1, 0, 0, 2))


@pytest.mark.parametrize("h", [X, Y, D1, X * Y, Y * D1, D1 * D1])
def test_projection_covariance(h):
    gamma = GroupElem.of(BETA2)
    a, b = HeckeElem.single(gamma.inverse(), 1), HeckeElem.single(gamma, FormValue.constant(3))
    lhs = projection_P(hopf_act(h, a) * b)
    rhs = projection_P(a * hopf_act(twisted_antipode(h), b))
    assert value_equal(lhs, rhs, ORDER)
