import cmath
from fractions import Fraction
from math import pi

import numpy as np
import pytest

from src.analytic import (
    GAMMA1,
    GAMMA2,
    area_cocycle,
    big_Z,
    c_cocycle,
    character_chi,
    e4_value,
    eta4_value,
    eval_q,
    half_period_constant,
    lattice_generators,
    m1_residual,
    period_L,
    schwarzian_numeric,
    tau_cocycle,
    theta_numeric,
)
from src.eisenstein import euler_rho
from src.exact import Cyclotomic, DivergenceError, Mat, NotQComputable, eta4_character
from src.qseries import QSeries, delta, e4, eta4, omega4_series

S = Mat(0, -1, 1, 0)
T = Mat(1, 1, 0, 1)
E4_AT_I = 1.4557628922687093


def _random_sl2(rng, count, max_entry=3):
    mats = []
    while len(mats) < count:
        a, b, c, d = (int(v) for v in rng.integers(-max_entry, max_entry + 1, size=4))
        if a * d - b * c == 1:
            mats.append(Mat(a, b, c, d))
    return mats


def test_eval_q_basics():
    assert eval_q(QSeries.constant(1), 1j) == 1
    assert abs(eval_q(e4(30), 1j) - E4_AT_I) < 1e-12
    assert abs(e4_value(1j) - E4_AT_I) < 1e-12
    assert abs(eval_q(eta4(40), 1j) ** 6 - eval_q(delta(40), 1j)) < 1e-10


def test_eval_q_truncation_tail():
    z = 0.3 + 0.8j
    assert abs(eval_q(e4(30), z) - eval_q(e4(60), z)) < 1e-12
    assert abs(eval_q(eta4(30), z) - eta4_value(z)) < 1e-12


def test_evaluation_outside_upper_half_plane_rejected():
    with pytest.raises(DivergenceError):
        eval_q(e4(10), 0.5 + 0j)
    with pytest.raises(DivergenceError):
        big_Z(-1j)


def test_Z_at_the_cusp_is_its_leading_term():
    leading = np.exp(-2 * np.pi * 40 / 6)
    assert big_Z(40j) == pytest.approx(leading, rel=1e-9)
    assert abs(big_Z(80j)) < abs(big_Z(40j))


def test_character_values():
    assert character_chi(T) == Cyclotomic.exp2pi(Fraction(1, 6))
    assert character_chi(S) == -1
    assert character_chi(GAMMA1) == 1
    assert character_chi(GAMMA2) == 1


@pytest.mark.parametrize("g", [T, S, Mat(1, 0, 1, 1), Mat(2, 1, 5, 3), Mat(3, 2, 4, 3)])
def test_character_matches_exact_multiplier(g):
    assert character_chi(g) == eta4_character(g)


def test_half_period():
    assert abs(half_period_constant() - 1.402182) < 1e-5


def test_lattice_is_equilateral():
    l1, l2 = lattice_generators()
    assert abs(abs(l1) - abs(l2)) < 1e-9
    assert abs(l1 / l2 - cmath.exp(2j * pi / 6)) < 1e-6
    assert abs(cmath.phase(l1) - 2 * pi / 3) < 1e-6


def test_period_is_a_homomorphism_with_hexagonal_range():
    l1, l2 = lattice_generators()
    quotient = period_L(GAMMA1 @ GAMMA2.adj())
    assert abs(quotient - (l1 - l2)) < 1e-8
    assert abs(quotient - l1 * cmath.exp(2j * pi / 6)) < 1e-8


@pytest.mark.parametrize("g", [S, T, GAMMA1, Mat(1, 2, 1, 3), Mat(2, -1, 1, 0)])
def test_period_independent_of_base_point(g):
    assert abs(period_L(g) - period_L(g, 0.3 + 1.2j)) < 1e-8


@pytest.mark.parametrize("z", [1j, 0.3 + 0.9j, -0.4 + 1.1j, 0.1 + 1.5j, 0.5 + 0.87j])
def test_numeric_schwarzian(z):
    assert abs(schwarzian_numeric(z) - eval_q(omega4_series(30), z)) < 1e-4


def test_area_cocycle_basics():
    assert area_cocycle(Mat.identity(), S) == 0
    rng = np.random.default_rng(2)
    for g1, g2 in zip(_random_sl2(rng, 10), _random_sl2(rng, 10)):
        assert abs(area_cocycle(g1, g2)) < 0.5


def test_area_cocycle_identity():
    rng = np.random.default_rng(4)
    for _ in range(20):
        g1, g2, g3 = _random_sl2(rng, 3)
        defect = (
            area_cocycle(g2, g3)
            - area_cocycle(g1 @ g2, g3)
            + area_cocycle(g1, g2 @ g3)
            - area_cocycle(g1, g2)
        )
        assert abs(defect) < 1e-9


def test_tau_trivial_on_identity():
    assert abs(tau_cocycle(Mat.identity(), GAMMA1)) < 1e-12


def test_c_cocycle_is_integral():
    rng = np.random.default_rng(6)
    for g1, g2 in zip(_random_sl2(rng, 100), _random_sl2(rng, 100)):
        assert c_cocycle(g1, g2) in (-1, 0, 1)


@pytest.mark.parametrize("g1, g2", [(S, T), (GAMMA1, S), (Mat(1, 1, 1, 2), Mat(2, 1, 1, 1))])
def test_tau_area_and_coboundary(g1, g2):
    assert abs(m1_residual(g1, g2, 2j)) < 1e-6


@pytest.mark.slow
def test_tau_area_and_coboundary_random_pairs():
    rng = np.random.default_rng(8)
    for g1, g2 in zip(_random_sl2(rng, 10, 2), _random_sl2(rng, 10, 2)):
        assert abs(m1_residual(g1, g2, 2j)) < 1e-6


def test_theta_matches_rho():
    value = theta_numeric(Mat(1, 0, 0, 2), T)
    assert abs(value.real + 1 / 12) < 1e-6
    assert abs(theta_numeric(S, T)) < 1e-9
    pairs = [
        (Mat(2, 0, 0, 1), Mat(1, 1, 0, 2)),
        (Mat(1, 1, 0, 3), Mat(2, 1, 0, 1)),
        (Mat(3, 0, 0, 1), Mat(1, 2, 0, 3)),
        (Mat(1, 0, 0, 2), Mat(1, 3, 0, 2)),
    ]
    for g1, g2 in pairs:
        rho = euler_rho(g1, g2)
        assert abs(theta_numeric(g1, g2).real - float(rho)) < 1e-6


def test_theta_needs_upper_triangular_second_argument():
    with pytest.raises(NotQComputable):
        theta_numeric(Mat(2, 0, 0, 1), S)
