"""Classical Dedekind sums and the character of eta^4 on SL2(Z)."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from src.exact.bernoulli import b1
from src.exact.cyclotomic import Cyclotomic
from src.exact.matrices import Mat


@lru_cache(maxsize=None)
def dedekind_sum(h: int, k: int) -> Fraction:
    """s(h, k) = sum over j mod k of ((j/k)) * ((h j / k)), for k > 0."""
    if k <= 0:
        raise ValueError("dedekind_sum needs a positive modulus")
    return sum((b1(Fraction(j, k)) * b1(Fraction(h * j, k)) for j in range(1, k)), Fraction(0))


def eta4_exponent(gamma: Mat) -> Fraction:
    """Rational r in [0, 1) with chi(gamma) = exp(2 pi i r).

    chi is the character with eta^4 |_2 gamma = chi(gamma) eta^4; it sends
    T to exp(2 pi i / 6) and S to -1, and factors through Z/6.
    """
    if gamma.det() != 1:
        raise ValueError(f"{gamma} is not in SL2(Z)")
    a, b, c, d = gamma.a, gamma.b, gamma.c, gamma.d
    if c < 0 or (c == 0 and d < 0):
        a, b, c, d = -a, -b, -c, -d
    if c == 0:
        r = Fraction(a * b, 6)
    else:
        r = Fraction(1, 2) + Fraction(a + d, 6 * c) - 2 * dedekind_sum(d, c)
    r -= r.numerator // r.denominator
    if 6 % r.denominator:
        raise ArithmeticError(f"eta^4 multiplier exponent {r} for {gamma} is not a sixth")
    return r


def eta4_character(gamma: Mat) -> Cyclotomic:
    """chi(gamma) as an exact sixth root of unity."""
    return Cyclotomic.exp2pi(eta4_exponent(gamma))


__all__ = ["dedekind_sum", "eta4_exponent", "eta4_character"]
