"""The curve y^2 = x^3 + 1 parametrized by q-series, and its exact identities."""

from src.curve.identities import (
    S_NEW,
    check_involution,
    check_mu_formula,
    check_ode,
    check_projective_structure,
    check_schwarzian,
    check_second_structure,
    check_weierstrass,
    cube_root_j,
    mu_formula_series,
    projective_pullback,
    ratfrac_sides,
    run_curve_checks,
    schwarzian_routes,
    verify_ratfrac,
)
from src.curve.weierstrass import X_OFFSET, CurveData, dZ_op, solve_x

__all__ = [
    "CurveData",
    "X_OFFSET",
    "dZ_op",
    "solve_x",
    "S_NEW",
    "check_involution",
    "check_mu_formula",
    "check_ode",
    "check_projective_structure",
    "check_schwarzian",
    "check_second_structure",
    "cube_root_j",
    "check_weierstrass",
    "mu_formula_series",
    "projective_pullback",
    "ratfrac_sides",
    "run_curve_checks",
    "schwarzian_routes",
    "verify_ratfrac",
]
