"""The classical level-one series: eta^4, Delta, E2, E4, E6 and g2* = E2/6.

All expansions use the arithmetic normalization (q = exp(2 pi i z), powers of
2 pi dropped) so every coefficient is rational. Results are cached per order.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from sympy import divisor_sigma

from src.qseries.series import QSeries, theta
from src.utils.logger import get_logger

logger = get_logger(__name__)


def euler_product(power: int, n_terms: int) -> list[int]:
    """Integer coefficients of prod_{n>=1} (1 - q^n)^power modulo q^n_terms."""
    coeffs = [0] * n_terms
    coeffs[0] = 1
    for n in range(1, n_terms):
        for _ in range(power):
            for i in range(n_terms - 1, n - 1, -1):
                coeffs[i] -= coeffs[i - n]
    return coeffs


def _eisenstein(constant: int, factor: int, power: int, order: int, weight: int, tag: str) -> QSeries:
    coeffs = [constant] + [factor * int(divisor_sigma(n, power)) for n in range(1, order)]
    return QSeries.from_coefficients(coeffs, weight=weight, level_tag=tag)


@lru_cache(maxsize=None)
def eta4(order: int) -> QSeries:
    """q^(1/6) prod (1 - q^n)^4, known below q^(order + 1/6); weight 2."""
    logger.debug("expanding eta^4 to order %d", order)
    return QSeries.from_coefficients(
        euler_product(4, order), offset=Fraction(1, 6), weight=2, level_tag="eta4"
    )


@lru_cache(maxsize=None)
def delta(order: int) -> QSeries:
    """Delta = eta^24 = q prod (1 - q^n)^24, known below q^order; weight 12."""
    coeffs = [0] + euler_product(24, max(order - 1, 0))
    return QSeries.from_coefficients(coeffs, weight=12, level_tag="delta")


@lru_cache(maxsize=None)
def e2(order: int) -> QSeries:
    return _eisenstein(1, -24, 1, order, 2, "e2")


@lru_cache(maxsize=None)
def e4(order: int) -> QSeries:
    return _eisenstein(1, 240, 3, order, 4, "e4")


@lru_cache(maxsize=None)
def e6(order: int) -> QSeries:
    return _eisenstein(1, -504, 5, order, 6, "e6")


@lru_cache(maxsize=None)
def g2_star(order: int) -> QSeries:
    """theta(log eta^4) = theta(eta^4) / eta^4, which is E2 / 6; weight 2."""
    f = eta4(order)
    return (theta(f) * f.invert()).replace(weight=2, level_tag="g2*")


@lru_cache(maxsize=None)
def omega4_series(order: int) -> QSeries:
    """-E4 / 72."""
    return e4(order).scale(Fraction(-1, 72)).replace(level_tag="omega4")


CLASSICAL = {
    "eta4": eta4,
    "delta": delta,
    "e2": e2,
    "e4": e4,
    "e6": e6,
    "g2_star": g2_star,
    "omega4": omega4_series,
}


__all__ = ["euler_product", "eta4", "delta", "e2", "e4", "e6", "g2_star", "omega4_series", "CLASSICAL"]
