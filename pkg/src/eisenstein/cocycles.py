"""Cocycles with values in the Eisenstein module and the rational Euler cocycle.

mu_g = 2 (phi0 | g - phi0) is the symbolic shadow of the weight-2 cocycle
g -> theta log(eta^4 | g / eta^4); it vanishes on SL2(Z). The rational
2-cocycle rho is assembled from constant terms and generalized Dedekind
sums of mu, and satisfies

    rho(g2, g3) - rho(g1 g2, g3) + rho(g1, g2 g3) - rho(g1, g2) = 0.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Callable

from src.eisenstein.classes import PHI0, EisClass, a0_class, slash_class
from src.exact.bernoulli import b1
from src.exact.matrices import GroupElem, Mat
from src.utils.logger import get_logger

logger = get_logger(__name__)


def _as_group_elem(g) -> GroupElem:
    if isinstance(g, GroupElem):
        return g
    return GroupElem.of(g)


@lru_cache(maxsize=4096)
def _mu_for_mat(m: Mat) -> EisClass:
    return (slash_class(PHI0, m) - PHI0).scale(2)


def mu_symbolic(g) -> EisClass:
    """mu_g = 2 (phi0 | g - phi0), computed on the primitive matrix of g."""
    return _mu_for_mat(_as_group_elem(g).mat)


def transverse_E(g) -> EisClass:
    """E(g) = mu_g | g^(-1), equal to -mu_(g^(-1))."""
    elem = _as_group_elem(g)
    return slash_class(mu_symbolic(elem), elem.inverse())


def dedekind_symbol(c: EisClass, m: int, n: int) -> Fraction:
    """Generalized Dedekind sum S_c(m/n), linear in c.

    For a symbol phi_x it is sum_{j<n} B1((x1 + j)/n) B1(m (x1 + j)/n + x2).

    Raises:
        ValueError: unless n > 0 and gcd(m, n) = 1.
    """
    if n <= 0 or gcd(m, n) != 1:
        raise ValueError(f"Dedekind symbol needs n > 0 and gcd(m, n) = 1, got m={m}, n={n}")
    total = Fraction(0)
    for x, v in c.terms:
        s = Fraction(0)
        for j in range(n):
            t = (x.x1 + j) / n
            s += b1(t) * b1(m * t + x.x2)
        total += v * s
    return total


def mu_constant_term(g) -> Fraction:
    """a0(mu_g) = sum of B2(y1) over y * adj(g) = 0, minus 1/6."""
    return a0_class(mu_symbolic(g))


def _mat(g) -> Mat:
    if isinstance(g, Mat):
        return g
    if isinstance(g, GroupElem):
        return g.mat
    return Mat.from_rows(g)


def euler_rho(g1, g2) -> Fraction:
    """The rational Euler 2-cocycle rho(g1, g2) for integral g1, g2 of positive determinant.

    Only mu_(g1) enters, so rho vanishes when g1 lies in SL2(Z). A second
    argument with c < 0 is replaced by its negative, which is the same
    element of PGL2.

    Raises:
        ValueError: if either determinant is not positive.
    """
    m1, m2 = _mat(g1), _mat(g2)
    if m1.det() <= 0 or m2.det() <= 0:
        raise ValueError(f"euler_rho needs positive determinants, got {m1} and {m2}")
    if m2.c < 0:
        m2 = -m2
    mu = mu_symbolic(m1)
    if not mu.terms:
        return Fraction(0)
    a, b, c, d = m2.a, m2.b, m2.c, m2.d
    if c == 0:
        return Fraction(b, d) * a0_class(mu)
    k = gcd(a, c)
    return (
        Fraction(a, c) * a0_class(mu)
        + Fraction(d, c) * a0_class(slash_class(mu, m2))
        - dedekind_symbol(mu, a // k, c // k)
    )


def cocycle_defect(rho: Callable[[Mat, Mat], Fraction], g1: Mat, g2: Mat, g3: Mat) -> Fraction:
    """Inhomogeneous coboundary of a 2-cochain with trivial coefficients."""
    return rho(g2, g3) - rho(g1 @ g2, g3) + rho(g1, g2 @ g3) - rho(g1, g2)


__all__ = [
    "mu_symbolic",
    "transverse_E",
    "dedekind_symbol",
    "mu_constant_term",
    "euler_rho",
    "cocycle_defect",
]
