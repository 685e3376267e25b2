"""Geodesic segments in the upper half-plane, line integrals along them,
and signed areas of geodesic triangles."""

from __future__ import annotations

from dataclasses import dataclass
from math import log, pi, tan
from typing import Callable

import numpy as np

from settings import MODHECKE_QUAD_TOL
from src.exact.errors import DivergenceError
from src.utils.logger import get_logger

logger = get_logger(__name__)

_NODES, _WEIGHTS = np.polynomial.legendre.leggauss(16)
_MAX_DEPTH = 40
_SAME_POINT = 1e-13


@dataclass(frozen=True)
class Geodesic:
    """Hyperbolic segment from p to q, parametrized proportionally to arclength on [0, 1].

    Attributes:
        p, q: Endpoints in H.
        center: Center on the real axis of the supporting circle, None when vertical.
        radius: Radius of the supporting circle.
    """

    p: complex
    q: complex
    center: float | None
    radius: float

    @classmethod
    def between(cls, p: complex, q: complex) -> "Geodesic":
        p, q = complex(p), complex(q)
        if p.imag <= 0 or q.imag <= 0:
            raise DivergenceError("geodesic endpoints must lie in the upper half-plane")
        dx = p.real - q.real
        if abs(dx) <= 1e-14 * max(1.0, abs(p), abs(q)):
            return cls(p, q, None, 0.0)
        center = (abs(p) ** 2 - abs(q) ** 2) / (2 * dx)
        return cls(p, q, center, abs(p - center))

    def _u(self, z: complex) -> float:
        phi = np.angle(z - self.center)
        return log(tan(phi / 2))

    def point_and_velocity(self, t: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        if self.center is None:
            lp, lq = log(self.p.imag), log(self.q.imag)
            y = np.exp(lp + t * (lq - lp))
            return self.p.real + 1j * y, 1j * y * (lq - lp)
        up, uq = self._u(self.p), self._u(self.q)
        phi = 2 * np.arctan(np.exp(up + t * (uq - up)))
        dphi = np.sin(phi) * (uq - up)
        e = np.exp(1j * phi)
        return self.center + self.radius * e, 1j * self.radius * e * dphi

    def tangent_at_start(self) -> complex:
        _, v = self.point_and_velocity(np.array([0.0]))
        return complex(v[0])


def _gauss(f: Callable[[np.ndarray], np.ndarray], a: float, b: float) -> float:
    half = (b - a) / 2
    t = a + half * (_NODES + 1)
    return float(half * np.dot(_WEIGHTS, f(t)))


def adaptive_quad(f: Callable[[np.ndarray], np.ndarray], a: float, b: float, tol: float = MODHECKE_QUAD_TOL) -> float:
    """Adaptive Gauss-Legendre quadrature of a vectorized real function."""

    def recurse(lo: float, hi: float, whole: float, eps: float, depth: int) -> float:
        mid = (lo + hi) / 2
        left, right = _gauss(f, lo, mid), _gauss(f, mid, hi)
        if abs(left + right - whole) <= eps or depth >= _MAX_DEPTH:
            if depth >= _MAX_DEPTH:
                logger.warning("quadrature reached depth %d on [%g, %g]", depth, lo, hi)
            return left + right
        return recurse(lo, mid, left, eps / 2, depth + 1) + recurse(mid, hi, right, eps / 2, depth + 1)

    return recurse(a, b, _gauss(f, a, b), tol, 0)


def line_integral(form: Callable[[np.ndarray, np.ndarray], np.ndarray], p: complex, q: complex, tol: float = MODHECKE_QUAD_TOL) -> float:
    """Integral of a real 1-form, given as form(z, dz/dt), along the geodesic from p to q."""
    if abs(complex(p) - complex(q)) < _SAME_POINT:
        return 0.0
    path = Geodesic.between(p, q)

    def integrand(t: np.ndarray) -> np.ndarray:
        z, dz = path.point_and_velocity(t)
        return form(z, dz)

    return adaptive_quad(integrand, 0.0, 1.0, tol)


def _to_klein(z: complex) -> complex:
    w = (z - 1j) / (z + 1j)
    return 2 * w / (1 + abs(w) ** 2)


def orientation(p0: complex, p1: complex, p2: complex) -> int:
    """+1 for a counterclockwise geodesic triangle, -1 for clockwise, 0 if degenerate."""
    k0, k1, k2 = (_to_klein(complex(p)) for p in (p0, p1, p2))
    cross = ((k1 - k0).conjugate() * (k2 - k0)).imag
    if abs(cross) < 1e-14:
        return 0
    return 1 if cross > 0 else -1


def _angle_at(p: complex, q: complex, r: complex) -> float:
    t1 = Geodesic.between(p, q).tangent_at_start()
    t2 = Geodesic.between(p, r).tangent_at_start()
    return abs(float(np.angle(t2 / t1)))


def signed_area(p0: complex, p1: complex, p2: complex) -> float:
    """Hyperbolic area pi - (sum of angles), signed by orientation."""
    pts = [complex(p) for p in (p0, p1, p2)]
    for i in range(3):
        for j in range(i + 1, 3):
            if abs(pts[i] - pts[j]) < _SAME_POINT:
                return 0.0
    sign = orientation(*pts)
    if sign == 0:
        return 0.0
    a, b, c = pts
    defect = pi - _angle_at(a, b, c) - _angle_at(b, c, a) - _angle_at(c, a, b)
    return sign * max(defect, 0.0)


__all__ = ["Geodesic", "adaptive_quad", "line_integral", "orientation", "signed_area"]
