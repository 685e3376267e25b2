"""Seeded random sampling of integer matrices and Eisenstein classes.

Matrices are grown as products of elementary factors so determinants stay
small while entries explore the whole box ``|entry| <= max_entry``.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from src.eisenstein.classes import EisClass
from src.exact.matrices import Mat, TorsionPoint, hnf_cosets

_MAX_FACTORS = 6
_MAX_TRIES = 1000


def _elementary(rng: np.random.Generator, max_entry: int) -> Mat:
    k = int(rng.integers(1, max_entry + 1)) * (1 if rng.integers(2) else -1)
    kind = int(rng.integers(3))
    if kind == 0:
        return Mat(1, k, 0, 1)
    if kind == 1:
        return Mat(1, 0, k, 1)
    return Mat(0, -1, 1, 0)


def _bounded(m: Mat, max_entry: int) -> bool:
    return max(abs(m.a), abs(m.b), abs(m.c), abs(m.d)) <= max_entry


def random_sl2(rng: np.random.Generator, max_entry: int) -> Mat:
    """A product of elementary SL2(Z) matrices with entries bounded by max_entry."""
    for _ in range(_MAX_TRIES):
        m = Mat.identity()
        for _ in range(int(rng.integers(1, _MAX_FACTORS + 1))):
            nxt = m @ _elementary(rng, max_entry)
            if not _bounded(nxt, max_entry):
                break
            m = nxt
        if m != Mat.identity():
            return m
    return Mat(0, -1, 1, 0)


def random_gl2_plus(rng: np.random.Generator, max_entry: int) -> Mat:
    """gamma * diag(p, 1) * gamma' with p <= 6, rejected until every entry is <= max_entry."""
    for _ in range(_MAX_TRIES):
        p = int(rng.integers(1, min(max_entry, 6) + 1))
        m = random_sl2(rng, max_entry) @ Mat(p, 0, 0, 1) @ random_sl2(rng, max_entry)
        if _bounded(m, max_entry):
            return m
    return Mat(1, 0, 0, 1)


def random_upper(rng: np.random.Generator, max_det: int) -> Mat:
    """A Hermite representative [[a, b], [0, d]] with ad <= max_det."""
    n = int(rng.integers(1, max_det + 1))
    reps = hnf_cosets(n)
    return reps[int(rng.integers(len(reps)))]


def random_eis_class(rng: np.random.Generator, max_level: int = 4, size: int = 3) -> EisClass:
    """A combination of ``size`` symbols with small integer coefficients and level <= max_level."""
    coeffs: dict[TorsionPoint, int] = {}
    for _ in range(size):
        level = int(rng.integers(1, max_level + 1))
        x = TorsionPoint(Fraction(int(rng.integers(level)), level), Fraction(int(rng.integers(level)), level))
        coeffs[x] = coeffs.get(x, 0) + int(rng.integers(-3, 4))
    return EisClass.from_coeffs(coeffs)


__all__ = ["random_sl2", "random_gl2_plus", "random_upper", "random_eis_class"]
