"""Weierstrass coordinates of the curve y^2 = x^3 + 1 as q-series.

With dZ = (1/6) eta^4 dq/q, the coordinate x is the unique solution of
(dx/dZ)^2 = 4 (x^3 + 1) of the form x = q^(-1/3) (1 + sum a_n q^n), and
2y = dx/dZ.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from src.exact.errors import RecursionInconsistency
from src.qseries.classical import eta4, euler_product
from src.qseries.series import QSeries, theta
from src.utils.logger import get_logger

logger = get_logger(__name__)

X_OFFSET = Fraction(-1, 3)


def _coefficients(order: int) -> list[Fraction]:
    """a_0 = 1, a_1, ..., a_order of u = q^(1/3) x.

    Substituting x = q^(-1/3) u and eta^8 = q^(1/3) P turns the equation into
    (3 theta(u) - u)^2 = (u^3 + q) P. The coefficient of q^n is linear in a_n
    with factor -(6n + 1), so each a_n is determined by the earlier ones.
    """
    P = euler_product(8, order + 1)
    a = [Fraction(1)] + [Fraction(0)] * order
    u2 = [Fraction(1)] + [Fraction(0)] * order
    cubic = [Fraction(1)] + [Fraction(0)] * order  # coefficients of u^3 + q

    def lhs(n: int) -> Fraction:
        return sum(((3 * i - 1) * a[i] * (3 * (n - i) - 1) * a[n - i] for i in range(n + 1)), Fraction(0))

    def rhs(n: int) -> Fraction:
        return sum((cubic[i] * P[n - i] for i in range(n + 1)), Fraction(0))

    def fill(n: int) -> None:
        u2[n] = sum((a[i] * a[n - i] for i in range(n + 1)), Fraction(0))
        cubic[n] = sum((u2[i] * a[n - i] for i in range(n + 1)), Fraction(0)) + (1 if n == 1 else 0)

    for n in range(1, order + 1):
        fill(n)
        a[n] = (lhs(n) - rhs(n)) / (6 * n + 1)
        fill(n)
        if lhs(n) != rhs(n):
            raise RecursionInconsistency(f"coefficient a_{n} does not solve the equation")
    return a


@lru_cache(maxsize=None)
def solve_x(order: int) -> QSeries:
    """x as a q-series with exponents -1/3 + n for n <= order.

    Raises:
        ValueError: if ``order`` < 5.
    """
    if order < 5:
        raise ValueError(f"order must be at least 5, got {order}")
    logger.debug("solving the Weierstrass equation through a_%d", order)
    return QSeries.from_coefficients(_coefficients(order), offset=X_OFFSET, weight=0, level_tag="x")


def dZ_op(f: QSeries, order: int) -> QSeries:
    """d/dZ = (6 / eta^4) theta."""
    return (theta(f) * eta4(order + 1).invert()).scale(6).replace(weight=f.weight)


@dataclass(frozen=True, eq=False)
class CurveData:
    """The coordinates x, y at a working order.

    Attributes:
        order: Number of coefficients solved for beyond the leading one.
        x: q^(-1/3) (1 + ...).
        y: dZ_op(x) / 2, leading term -q^(-1/2).
    """

    order: int
    x: QSeries
    y: QSeries

    @classmethod
    def build(cls, order: int) -> "CurveData":
        x = solve_x(order)
        return cls(order, x, dZ_op(x, order).scale(Fraction(1, 2)))

    def dZ(self, f: QSeries) -> QSeries:
        return dZ_op(f, self.order)


__all__ = ["CurveData", "solve_x", "dZ_op", "X_OFFSET"]
