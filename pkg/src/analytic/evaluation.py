"""Floating-point evaluation of q-series and of the classical functions on H.

Every evaluator accepts a complex scalar or a numpy array of points and
truncates its q-expansion where the geometric tail drops below double
precision.
"""

from __future__ import annotations

from functools import lru_cache
from math import ceil, log, pi
from typing import Optional

import numpy as np

from src.exact.errors import DivergenceError
from src.exact.matrices import Mat
from src.qseries.classical import euler_product
from src.qseries.series import QSeries
from src.utils.logger import get_logger

logger = get_logger(__name__)

TAIL_EPS = 1e-18
TWO_PI_I = 2j * pi


def _min_imag(z) -> float:
    im = float(np.min(np.imag(z)))
    if not im > 0:
        raise DivergenceError(f"point outside the upper half-plane (Im z = {im})")
    return im


def terms_needed(z, eps: float = TAIL_EPS) -> int:
    """Number of q-powers after which |q|^n < eps at every point of z."""
    return ceil(-log(eps) / (2 * pi * _min_imag(z))) + 2


def q_of(z):
    return np.exp(TWO_PI_I * np.asarray(z, dtype=complex))


def mobius(m: Mat, z):
    z = np.asarray(z, dtype=complex)
    return (m.a * z + m.b) / (m.c * z + m.d)


def eval_q(f: QSeries, z, order: Optional[float] = None):
    """sum c q^r over the known terms (and r < order when given).

    Raises:
        DivergenceError: if Im z <= 0.
    """
    _min_imag(z)
    z = np.asarray(z, dtype=complex)
    acc = np.zeros_like(z)
    for r, c in f.terms.items():
        if order is not None and r >= order:
            break
        acc = acc + c.to_complex() * np.exp(TWO_PI_I * float(r) * z)
    return acc if acc.shape else complex(acc)


@lru_cache(maxsize=32)
def _eta4_coeffs(n_terms: int) -> np.ndarray:
    return np.array(euler_product(4, n_terms), dtype=float)


def _powers(q, n_terms: int) -> np.ndarray:
    """q^1 .. q^n_terms along a trailing axis."""
    n = np.arange(1, n_terms + 1)
    return np.power.outer(np.asarray(q), n)


def eta4_value(z):
    """q^(1/6) prod (1 - q^n)^4."""
    n_terms = terms_needed(z)
    z = np.asarray(z, dtype=complex)
    coeffs = _eta4_coeffs(n_terms)
    expo = np.arange(n_terms) + 1.0 / 6.0
    vals = np.exp(TWO_PI_I * np.multiply.outer(z, expo)) @ coeffs
    return vals if np.ndim(vals) else complex(vals)


def big_Z(z):
    """Z(z) = (2 pi i / 6) int_{i oo}^z eta^4 = (1/6) sum c_n q^(n+1/6) / (n + 1/6)."""
    n_terms = terms_needed(z)
    z = np.asarray(z, dtype=complex)
    expo = np.arange(n_terms) + 1.0 / 6.0
    coeffs = _eta4_coeffs(n_terms) / expo / 6.0
    vals = np.exp(TWO_PI_I * np.multiply.outer(z, expo)) @ coeffs
    return vals if np.ndim(vals) else complex(vals)


def _lambert(z, power: int):
    """sum n^power q^n / (1 - q^n)."""
    n_terms = terms_needed(z)
    qn = _powers(q_of(z), n_terms)
    n = np.arange(1, n_terms + 1, dtype=float)
    return np.sum(n**power * qn / (1 - qn), axis=-1)


def g2_star_value(z):
    """E2 / 6."""
    vals = (1 - 24 * _lambert(z, 1)) / 6
    return vals if np.ndim(vals) else complex(vals)


def e4_value(z):
    vals = 1 + 240 * _lambert(z, 3)
    return vals if np.ndim(vals) else complex(vals)


def log_delta(z):
    """2 pi i z + 24 sum log(1 - q^n): a branch of log Delta continuous on all of H."""
    n_terms = terms_needed(z)
    z = np.asarray(z, dtype=complex)
    qn = _powers(q_of(z), n_terms)
    vals = TWO_PI_I * z + 24 * np.sum(np.log(1 - qn), axis=-1)
    return vals if np.ndim(vals) else complex(vals)


def log_j2(m: Mat, z):
    """log (cz + d)^2 with the argument taken in [0, 2 pi)."""
    w = (m.c * np.asarray(z, dtype=complex) + m.d) ** 2
    arg = np.mod(np.angle(w), 2 * pi)
    vals = np.log(np.abs(w)) + 1j * arg
    return vals if np.ndim(vals) else complex(vals)


__all__ = [
    "TWO_PI_I",
    "terms_needed",
    "q_of",
    "mobius",
    "eval_q",
    "eta4_value",
    "big_Z",
    "g2_star_value",
    "e4_value",
    "log_delta",
    "log_j2",
]
