"""Floating-point checks: periods of Z, the character, the numeric cocycles
and the cross-check of theta against rho."""

from __future__ import annotations

import cmath
from math import pi

import numpy as np

from src.analytic import (
    c_cocycle,
    character_chi,
    eval_q,
    half_period_constant,
    lattice_generators,
    m1_residual,
    schwarzian_numeric,
    theta_numeric,
)
from src.cli.registry import check
from src.eisenstein import euler_rho
from src.exact import Cyclotomic, Mat
from src.models.checks import CheckResult
from src.models.config import RunConfig
from src.qseries import omega4_series
from src.utils.sampling import random_sl2, random_upper

HALF_PERIOD = 1.402182
HALF_PERIOD_TOL = 1e-5
LATTICE_TOL = 1e-6
M1_TOL = 1e-6
CROSSCHECK_TOL = 1e-6
SCHWARZIAN_TOL = 1e-4
# Numeric samples stay in a small box; large entries push g z0 towards the real axis.
NUMERIC_MAX_ENTRY = 3
SCHWARZIAN_POINTS = (1j, 0.3 + 0.9j, -0.4 + 1.1j, 0.1 + 1.5j, 0.5 + 0.87j)


@check("analytic", "half_period", "2 L0 = 1.402182")
def half_period(config: RunConfig) -> CheckResult:
    value = half_period_constant()
    return CheckResult.numeric("analytic.half_period", abs(value - HALF_PERIOD), HALF_PERIOD_TOL, detail=f"{value:.9f}")


@check("analytic", "lattice", "L(gamma1) / L(gamma2) = exp(2 pi i / 6)")
def lattice(config: RunConfig) -> CheckResult:
    l1, l2 = lattice_generators()
    return CheckResult.numeric("analytic.lattice", abs(l1 / l2 - cmath.exp(2j * pi / 6)), LATTICE_TOL)


@check("analytic", "character_T", "chi(T) = exp(2 pi i / 6)")
def character_T(config: RunConfig) -> CheckResult:
    return CheckResult.from_bool("analytic.character_T", character_chi(Mat(1, 1, 0, 1)) == Cyclotomic.zeta(6))


@check("analytic", "schwarzian", "(2 pi i)^-2 {Z; z} = -E4/72 at sample points")
def schwarzian(config: RunConfig) -> CheckResult:
    series = omega4_series(30)
    residual = max(abs(schwarzian_numeric(z) - eval_q(series, z)) for z in SCHWARZIAN_POINTS)
    return CheckResult.numeric("analytic.schwarzian", residual, SCHWARZIAN_TOL)


@check("analytic", "c_integral", "c(g1, g2) is an integer")
def c_integral(config: RunConfig) -> CheckResult:
    rng = np.random.default_rng(config.seed)
    entry = min(config.max_entry, NUMERIC_MAX_ENTRY)
    values = [c_cocycle(random_sl2(rng, entry), random_sl2(rng, entry), config.point) for _ in range(config.pairs * 10)]
    return CheckResult.from_bool("analytic.c_integral", True, detail=f"values {sorted(set(values))}")


@check("analytic", "m1", "Re tau + A = beta(g1 g2) - beta(g1) - beta(g2)")
def m1(config: RunConfig) -> CheckResult:
    rng = np.random.default_rng(config.seed)
    entry = min(config.max_entry, NUMERIC_MAX_ENTRY)
    residual = 0.0
    for _ in range(config.pairs):
        g1, g2 = random_sl2(rng, entry), random_sl2(rng, entry)
        residual = max(residual, abs(m1_residual(g1, g2, config.point)))
    return CheckResult.numeric("analytic.m1", residual, M1_TOL, detail=f"{config.pairs} pairs at z0 = {config.z0}")


@check("analytic", "euler_crosscheck", "Re theta = rho on q-computable pairs")
def euler_crosscheck(config: RunConfig) -> CheckResult:
    rng = np.random.default_rng(config.seed)
    residual = 0.0
    for _ in range(config.pairs):
        g1, g2 = random_upper(rng, 6), random_upper(rng, 6)
        value = theta_numeric(g1, g2, order=min(config.order, 40))
        residual = max(residual, abs(value.real - float(euler_rho(g1, g2))))
    return CheckResult.numeric("analytic.euler_crosscheck", residual, CROSSCHECK_TOL, detail=f"{config.pairs} pairs")
