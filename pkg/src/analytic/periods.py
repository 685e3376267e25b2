"""The character chi of Gamma(1), the periods L of Z and the numeric Schwarzian.

dZ | gamma = chi(gamma) dZ, so Z(gamma z) = chi(gamma) Z(z) + L(gamma) with L
constant in z. On the commutator subgroup chi = 1 and L is a homomorphism
onto the equilateral lattice generated by L(gamma1), L(gamma2).
"""

from __future__ import annotations

from cmath import exp, phase
from math import pi

import numpy as np

from src.analytic.evaluation import big_Z, eta4_value, mobius
from src.exact.cyclotomic import Cyclotomic
from src.exact.errors import BranchError
from src.exact.matrices import Mat
from src.utils.logger import get_logger

logger = get_logger(__name__)

GAMMA1 = Mat(2, 1, 1, 1)
GAMMA2 = Mat(1, 1, 1, 2)
ROOT_TOL = 1e-6


def _check_sl2(g: Mat) -> None:
    if g.det() != 1:
        raise ValueError(f"{g} is not in SL2(Z)")


def sample_point(g: Mat) -> complex:
    """A point z with Im z = Im(g z), so both sit at the same height."""
    if g.c == 0:
        return 1j
    return complex(-g.d / g.c, 1 / abs(g.c))


def character_value(g: Mat, z: complex | None = None) -> complex:
    """eta^4(g z) (cz + d)^-2 / eta^4(z)."""
    _check_sl2(g)
    z = sample_point(g) if z is None else complex(z)
    return eta4_value(complex(mobius(g, z))) / ((g.c * z + g.d) ** 2 * eta4_value(z))


def character_chi(g: Mat) -> Cyclotomic:
    """chi(g) rounded to the nearest 12th root of unity.

    Raises:
        BranchError: if the numeric value is farther than 1e-6 from every 12th root.
    """
    value = character_value(g)
    k = round(phase(value) / (2 * pi / 12)) % 12
    residual = abs(value - exp(2j * pi * k / 12))
    if residual > ROOT_TOL:
        raise BranchError(f"chi({g}) = {value} is not a 12th root of unity (residual {residual:.2e})")
    return Cyclotomic.zeta(12, k)


def period_L(g: Mat, z: complex | None = None) -> complex:
    """L(g) = Z(g z) - chi(g) Z(z), independent of z."""
    z = sample_point(g) if z is None else complex(z)
    chi = character_chi(g).to_complex()
    return complex(big_Z(complex(mobius(g, z))) - chi * big_Z(z))


def half_period_constant() -> float:
    """2 L0, where L(gamma1) = L0 exp(2 pi i / 3)."""
    return 2 * abs(period_L(GAMMA1))


def lattice_generators() -> tuple[complex, complex]:
    return period_L(GAMMA1), period_L(GAMMA2)


def schwarzian_numeric(z: complex, h: float = 1e-3) -> complex:
    """(2 pi i)^-2 {Z; z} from five-point central differences of Z."""
    offsets = np.array([-2, -1, 0, 1, 2]) * h
    f = big_Z(complex(z) + offsets)
    d1 = (f[0] - 8 * f[1] + 8 * f[3] - f[4]) / (12 * h)
    d2 = (-f[0] + 16 * f[1] - 30 * f[2] + 16 * f[3] - f[4]) / (12 * h**2)
    d3 = (-f[0] + 2 * f[1] - 2 * f[3] + f[4]) / (2 * h**3)
    schwarzian = d3 / d1 - 1.5 * (d2 / d1) ** 2
    return complex(schwarzian / (2j * pi) ** 2)


__all__ = [
    "GAMMA1",
    "GAMMA2",
    "sample_point",
    "character_value",
    "character_chi",
    "period_L",
    "half_period_constant",
    "lattice_generators",
    "schwarzian_numeric",
]
