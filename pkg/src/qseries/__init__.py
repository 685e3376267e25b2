"""Truncated q-expansions, the classical level-one series and their operators."""

from src.qseries.classical import CLASSICAL, delta, euler_product, e2, e4, e6, eta4, g2_star, omega4_series
from src.qseries.operators import (
    mu_series,
    mu_series_quotient,
    serre_x,
    slash_upper,
    sturm_order,
    theta,
)
from src.qseries.series import QSeries, set_max_exp_denominator

__all__ = [
    "CLASSICAL",
    "QSeries",
    "delta",
    "euler_product",
    "e2",
    "e4",
    "e6",
    "eta4",
    "g2_star",
    "omega4_series",
    "mu_series",
    "mu_series_quotient",
    "serre_x",
    "slash_upper",
    "sturm_order",
    "theta",
    "set_max_exp_denominator",
]
