"""Double-precision bridge: series evaluation on H, periods of Z and numeric cocycles."""

from src.analytic.cocycles import (
    DEFAULT_Z0,
    area_cocycle,
    beta,
    c_cocycle,
    coboundary_beta,
    log_psi,
    m1_residual,
    omega0,
    tau_cocycle,
    theta_numeric,
)
from src.analytic.evaluation import (
    big_Z,
    e4_value,
    eta4_value,
    eval_q,
    g2_star_value,
    log_delta,
    log_j2,
    mobius,
)
from src.analytic.geodesics import Geodesic, adaptive_quad, line_integral, orientation, signed_area
from src.analytic.periods import (
    GAMMA1,
    GAMMA2,
    character_chi,
    character_value,
    half_period_constant,
    lattice_generators,
    period_L,
    schwarzian_numeric,
)

__all__ = [
    "DEFAULT_Z0",
    "area_cocycle",
    "beta",
    "c_cocycle",
    "coboundary_beta",
    "log_psi",
    "m1_residual",
    "omega0",
    "tau_cocycle",
    "theta_numeric",
    "big_Z",
    "e4_value",
    "eta4_value",
    "eval_q",
    "g2_star_value",
    "log_delta",
    "log_j2",
    "mobius",
    "Geodesic",
    "adaptive_quad",
    "line_integral",
    "orientation",
    "signed_area",
    "GAMMA1",
    "GAMMA2",
    "character_chi",
    "character_value",
    "half_period_constant",
    "lattice_generators",
    "period_L",
    "schwarzian_numeric",
]
