"""Curve identities, one registered check per identity."""

from __future__ import annotations

from functools import lru_cache

from src.cli.registry import check
from src.curve import (
    CurveData,
    check_involution,
    check_mu_formula,
    check_ode,
    check_projective_structure,
    check_schwarzian,
    check_second_structure,
    check_weierstrass,
    verify_ratfrac,
)
from src.models.checks import CheckResult
from src.models.config import RunConfig


@lru_cache(maxsize=4)
def _curve(order: int) -> CurveData:
    return CurveData.build(order)


@check("curve", "weierstrass", "y^2 = x^3 + 1")
def weierstrass(config: RunConfig) -> CheckResult:
    return check_weierstrass(_curve(config.order))


@check("curve", "ode", "(dx/dZ)^2 = 4(x^3 + 1)")
def ode(config: RunConfig) -> CheckResult:
    return check_ode(_curve(config.order))


@check("curve", "mu_formula", "x eta^8 = mu (Gamma0(6), weight 4)")
def mu_formula(config: RunConfig) -> CheckResult:
    return check_mu_formula(_curve(config.order))


@check("curve", "ratfrac", "E4/eta^8 = R(x)")
def ratfrac(config: RunConfig) -> CheckResult:
    return verify_ratfrac(_curve(config.order))


@check("curve", "involution", "x|alpha = x, y|alpha = -y")
def involution(config: RunConfig) -> CheckResult:
    return check_involution(_curve(config.order))


@check("curve", "projective_structure", "varpi = R(x)/(8(x^3+1)) dx^2 pulls back to E4/72 dz^2")
def projective_structure(config: RunConfig) -> CheckResult:
    return check_projective_structure(_curve(config.order))


@check("curve", "second_structure", "varpi' = x dx^2 / (8 (x^3 - 1728))")
def second_structure(config: RunConfig) -> CheckResult:
    return check_second_structure(config.order)


@check("curve", "schwarzian", "(2 pi i)^-2 {Z; z} = -E4/72 = -R(x) eta^8 / 72")
def schwarzian(config: RunConfig) -> CheckResult:
    return check_schwarzian(_curve(config.order))
