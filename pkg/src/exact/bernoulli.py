"""Periodized Bernoulli functions B1 and B2 on rationals."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from sympy import Poly, Symbol
from sympy.polys.appellseqs import bernoulli_poly

from src.exact.rational import as_rational, frac_part, from_sympy

_X = Symbol("x")


@lru_cache(maxsize=None)
def _bernoulli_coeffs(k: int) -> tuple[Fraction, ...]:
    """Coefficients of the k-th Bernoulli polynomial, highest degree first."""
    poly = Poly(bernoulli_poly(k, _X), _X)
    return tuple(from_sympy(c) for c in poly.all_coeffs())


def bernoulli_periodized(k: int, x) -> Fraction:
    """Return B_k(x - floor(x)) for k in {1, 2}.

    The sawtooth convention is used for k = 1: the value at integers is 0,
    the average of the one-sided limits.

    Raises:
        ValueError: if ``k`` is not 1 or 2.
    """
    if k not in (1, 2):
        raise ValueError(f"only B1 and B2 are supported, got k={k}")
    t = frac_part(as_rational(x))
    if k == 1 and t == 0:
        return Fraction(0)
    acc = Fraction(0)
    for c in _bernoulli_coeffs(k):
        acc = acc * t + c
    return acc


def b1(x) -> Fraction:
    """Sawtooth ((x)): B1 of the fractional part, 0 at integers."""
    return bernoulli_periodized(1, x)


def b2(x) -> Fraction:
    return bernoulli_periodized(2, x)


__all__ = ["bernoulli_periodized", "b1", "b2"]
