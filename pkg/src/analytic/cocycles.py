"""Numeric 2-cocycles on GL2+: the area cocycle, tau, the integer cocycle c,
the coboundary relating them, and the q-series evaluation of theta.

For g1, g2 and a base point z0:

    A(g1, g2)   = signed area of (z0, g1 z0, g1 g2 z0) / (2 pi)
    tau(g1, g2) = (log psi(g2 z0) - log psi(z0)) / (12 pi i),  psi = Delta|g1 / Delta
    beta(g)     = integral of w0 = Re(g2*(z) dz) - dx / (2 pi y) along [z0, g z0]

and Re tau + A = beta(g1 g2) - beta(g1) - beta(g2).
"""

from __future__ import annotations

from math import log, pi

import numpy as np

from settings import MODHECKE_ORDER
from src.analytic.evaluation import TWO_PI_I, g2_star_value, log_delta, log_j2, mobius
from src.analytic.geodesics import line_integral, signed_area
from src.exact.errors import BranchError, NotQComputable
from src.exact.matrices import Mat
from src.qseries.operators import mu_series, slash_upper
from src.qseries.series import QSeries
from src.utils.logger import get_logger

logger = get_logger(__name__)

DEFAULT_Z0 = 2j
INTEGRALITY_TOL = 1e-6


def _positive(m: Mat) -> Mat:
    if m.det() <= 0:
        raise ValueError(f"matrix {m} must have positive determinant")
    return m


def area_cocycle(g1: Mat, g2: Mat, z0: complex = DEFAULT_Z0) -> float:
    p1 = complex(mobius(_positive(g1), z0))
    p2 = complex(mobius(g1 @ _positive(g2), z0))
    return signed_area(z0, p1, p2) / (2 * pi)


def log_psi(g: Mat, z):
    """log(Delta|g / Delta)(z), continuous in z."""
    return 6 * log(g.det()) + log_delta(mobius(g, z)) - 6 * log_j2(g, z) - log_delta(z)


def tau_cocycle(g1: Mat, g2: Mat, z0: complex = DEFAULT_Z0) -> complex:
    _positive(g1)
    w = complex(mobius(_positive(g2), z0))
    return complex((log_psi(g1, w) - log_psi(g1, z0)) / (6 * TWO_PI_I))


def c_cocycle(g1: Mat, g2: Mat, z0: complex = DEFAULT_Z0) -> int:
    """(log j^2(g1 g2, z0) - log j^2(g1, g2 z0) - log j^2(g2, z0)) / (2 pi i), an integer.

    Raises:
        BranchError: if the value is not an integer to within 1e-6.
    """
    w = complex(mobius(g2, z0))
    value = (log_j2(g1 @ g2, z0) - log_j2(g1, w) - log_j2(g2, z0)) / TWO_PI_I
    nearest = round(value.real)
    residual = abs(value - nearest)
    if residual > INTEGRALITY_TOL:
        raise BranchError(f"c({g1}, {g2}) = {value} is not integral")
    return int(nearest)


def omega0(z: np.ndarray, dz: np.ndarray) -> np.ndarray:
    return np.real(g2_star_value(z) * dz) - np.real(dz) / (2 * pi * np.imag(z))


def beta(g: Mat, z0: complex = DEFAULT_Z0) -> float:
    return line_integral(omega0, z0, complex(mobius(g, z0)))


def coboundary_beta(g1: Mat, g2: Mat, z0: complex = DEFAULT_Z0) -> float:
    return beta(g1 @ g2, z0) - beta(g1, z0) - beta(g2, z0)


def m1_residual(g1: Mat, g2: Mat, z0: complex = DEFAULT_Z0) -> float:
    """Re tau + A - (beta(g1 g2) - beta(g1) - beta(g2)); zero up to quadrature error."""
    return tau_cocycle(g1, g2, z0).real + area_cocycle(g1, g2, z0) - coboundary_beta(g1, g2, z0)


def _primitive_value(f: QSeries, z: complex, keep_constant: bool) -> complex:
    """Termwise antiderivative in z: a0 z + sum c_r q^r / (2 pi i r)."""
    acc = 0j
    for r, c in f.terms.items():
        coeff = c.to_complex()
        if r == 0:
            if keep_constant:
                acc += coeff * z
            continue
        acc += coeff * np.exp(TWO_PI_I * float(r) * z) / (TWO_PI_I * float(r))
    return complex(acc)


def theta_numeric(g1: Mat, g2: Mat, z0: complex = DEFAULT_Z0, order: int | None = None) -> complex:
    """int_{z0}^{g2 z0} mu - z0 a0(mu|g2 - mu) + int_{z0}^{i oo} (cuspidal part of mu|g2 - mu).

    Raises:
        NotQComputable: if g2 is not upper triangular.
    """
    _positive(g1)
    if not _positive(g2).is_upper():
        raise NotQComputable(f"{g2} is not upper triangular; mu|g2 has no q-expansion here")
    order = order or MODHECKE_ORDER
    mu = mu_series(g1, order)
    if mu.is_zero():
        return 0j
    moved = slash_upper(mu, 2, g2)
    diff = moved - mu
    a0 = float(diff.constant_term().rational_value())
    w = complex(mobius(g2, z0))
    first = _primitive_value(mu, w, True) - _primitive_value(mu, z0, True)
    tail = -_primitive_value(diff, z0, False)
    return first - z0 * a0 + tail


__all__ = [
    "DEFAULT_Z0",
    "area_cocycle",
    "log_psi",
    "tau_cocycle",
    "c_cocycle",
    "omega0",
    "beta",
    "coboundary_beta",
    "m1_residual",
    "theta_numeric",
]
