"""Operators on q-series: slash by upper-triangular matrices, the Serre-type
derivation X, the cocycle mu_g and the Sturm-type precision bound."""

from __future__ import annotations

from fractions import Fraction
from math import ceil, prod

from sympy import primefactors

from settings import MODHECKE_ORDER
from src.exact.cyclotomic import Cyclotomic
from src.exact.matrices import GroupElem, Mat, hnf_reduce
from src.qseries.classical import eta4, g2_star
from src.qseries.series import QSeries, theta
from src.utils.logger import get_logger

logger = get_logger(__name__)


def _as_group_elem(g) -> GroupElem:
    return g if isinstance(g, GroupElem) else GroupElem.of(g)


def slash_upper(f: QSeries, k: int, g) -> QSeries:
    """f |_k g for g = scalar * [[a, b], [0, d]].

    Each term c q^r becomes det^(k/2) d^(-k) c exp(2 pi i r b / d) q^(r a / d).
    The scalar part of g acts trivially.

    Raises:
        ValueError: for odd weights or a matrix that is not upper triangular.
    """
    if k % 2:
        raise ValueError(f"slash is only implemented for even weights, got {k}")
    m = _as_group_elem(g).mat
    if not m.is_upper():
        raise ValueError(f"slash_upper needs an upper-triangular matrix, got {m}")
    if m.a < 0:
        m = -m
    a, b, d = m.a, m.b, m.d
    factor = Fraction(m.det()) ** (k // 2) / Fraction(d) ** k
    terms = {}
    for r, c in f.terms.items():
        coeff = c * factor
        if b:
            coeff = coeff * Cyclotomic.exp2pi(r * b / d)
        terms[r * a / d] = coeff
    trunc = None if f.truncation is None else f.truncation * a / d
    return QSeries(terms, trunc, f.weight, f.level_tag)


def serre_x(f: QSeries, k) -> QSeries:
    """X(f) = theta(f) - (k/2) g2* f, of weight k + 2."""
    k = Fraction(k)
    result = theta(f)
    if k:
        v = f.valuation()
        if f.truncation is None:
            order = MODHECKE_ORDER
        else:
            order = max(1, ceil(f.truncation - (v if v is not None else 0)) + 1)
        result = result - (g2_star(order) * f).scale(k / 2)
    return result.replace(weight=k + 2)


def _required_order(order: int, mat: Mat) -> int:
    """g2*-order whose slash by [[a, b], [0, d]] is known below q^order."""
    return max(1, ceil(Fraction(order * mat.d, mat.a)))


def mu_series(g, order: int | None = None) -> QSeries:
    """mu_g = theta log(eta^4 |_2 g / eta^4) as a q-series, weight 2.

    Writing g = gamma0 * beta with gamma0 in SL2(Z) and beta upper
    triangular, mu_g = mu_beta = g2* |_2 beta - g2*.
    """
    order = order or MODHECKE_ORDER
    _, beta = hnf_reduce(_as_group_elem(g))
    if beta.mat == Mat.identity():
        return QSeries.zero(truncation=order, weight=2)
    slashed = slash_upper(g2_star(_required_order(order, beta.mat)), 2, beta)
    return (slashed - g2_star(order)).truncate(order).replace(weight=2, level_tag=f"mu{beta.mat}")


def mu_series_quotient(g, order: int | None = None) -> QSeries:
    """theta(psi) / psi with psi = (eta^4 |_2 beta) / eta^4; agrees with :func:`mu_series`."""
    order = order or MODHECKE_ORDER
    _, beta = hnf_reduce(_as_group_elem(g))
    base_order = max(order + 1, _required_order(order + 1, beta.mat)) + 1
    psi = slash_upper(eta4(base_order), 2, beta) * eta4(base_order).invert()
    return (theta(psi) * psi.invert()).truncate(order).replace(weight=2)


def sturm_order(k, level: int) -> int:
    """ceil(k * [Gamma(1) : Gamma0(level)] / 12)."""
    if level < 1:
        raise ValueError("level must be positive")
    index = level * prod((Fraction(1) + Fraction(1, p) for p in primefactors(level)), start=Fraction(1))
    return ceil(Fraction(k) * index / 12)


__all__ = [
    "theta",
    "slash_upper",
    "serre_x",
    "mu_series",
    "mu_series_quotient",
    "sturm_order",
]
