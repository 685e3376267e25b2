"""Hopf-cyclic operators on C^n(H1) = H1^(x)n with the modular pair (nu, 1).

    face_0(c)     = 1 (x) c
    face_i(c)     = Delta applied to factor i, 1 <= i <= n - 1
    face_n(c)     = c (x) 1
    sigma_i(c)    = epsilon applied to factor i + 1
    tau_n(h (x) r) = Delta^(n-1)(S~(h)) . (r (x) 1)
    B0(h (x) r)   = Delta^(n-1)(S~(h)) . r          (nu(h) in degree 1)
    A             = sum_j (-1)^(n j) tau^j
    B             = A o B0
    b             = sum_i (-1)^i face_i

Degrees above :data:`MAX_DEGREE` raise :class:`CochainDegreeError`.
"""

from __future__ import annotations

from fractions import Fraction

from src.exact.errors import CochainDegreeError
from src.hopf.algebra import UNIT, H1Elem, PBWMonomial
from src.hopf.coalgebra import (
    MAX_DEGREE,
    Cochain,
    coproduct_monomial,
    twisted_monomial,
    apply_factor,
    iterated_coproduct,
    nu_monomial,
    tensor_mul,
)


def _check_degree(n: int) -> None:
    if n < 0 or n > MAX_DEGREE:
        raise CochainDegreeError(f"cochain degree {n} outside the supported range 0..{MAX_DEGREE}")


def _as_cochain(c) -> Cochain:
    if isinstance(c, Cochain):
        return c
    if isinstance(c, H1Elem):
        return Cochain.from_elem(c)
    raise TypeError(f"expected a Cochain or H1Elem, got {type(c).__name__}")


def face(i: int, c) -> Cochain:
    """face_i : C^(n-1) -> C^n for 0 <= i <= n."""
    c = _as_cochain(c)
    n = c.degree + 1
    _check_degree(n)
    if not 0 <= i <= n:
        raise ValueError(f"face index {i} out of range for degree {n}")
    if i == 0:
        return Cochain(n, {(UNIT,) + k: v for k, v in c.items()})
    if i == n:
        return Cochain(n, {k + (UNIT,): v for k, v in c.items()})
    return apply_factor(c, i - 1, coproduct_monomial, 2)


def _counit_cochain(mono: PBWMonomial) -> Cochain:
    return Cochain.scalar(1 if mono.is_unit() else 0)


def degeneracy(i: int, c) -> Cochain:
    """sigma_i : C^(n+1) -> C^n for 0 <= i <= n."""
    c = _as_cochain(c)
    _check_degree(c.degree)
    n = c.degree - 1
    if n < 0 or not 0 <= i <= n:
        raise ValueError(f"degeneracy index {i} out of range for degree {c.degree}")
    return apply_factor(c, i, _counit_cochain, 0)


def _twisted_lead(mono: PBWMonomial, n: int) -> Cochain:
    """Delta^(n-1)(S~(mono)) as an n-fold tensor."""
    return iterated_coproduct(twisted_monomial(mono), n)


def tau(c) -> Cochain:
    """Cyclic operator tau_n; tau_0 is the identity."""
    c = _as_cochain(c)
    n = c.degree
    _check_degree(n)
    if n == 0:
        return c
    acc = Cochain.zero(n)
    for key, coeff in c.items():
        rest = Cochain(n, {key[1:] + (UNIT,): coeff})
        acc = acc + tensor_mul(_twisted_lead(key[0], n), rest)
    return acc


def b(c) -> Cochain:
    """Hochschild coboundary C^(n-1) -> C^n."""
    c = _as_cochain(c)
    n = c.degree + 1
    _check_degree(n)
    acc = Cochain.zero(n)
    for i in range(n + 1):
        term = face(i, c)
        acc = acc + (term if i % 2 == 0 else -term)
    return acc


def B0(c) -> Cochain:
    """C^(n+1) -> C^n; in degree 1 this is the character nu."""
    c = _as_cochain(c)
    _check_degree(c.degree)
    if c.degree == 0:
        raise CochainDegreeError("B0 is not defined on degree-0 cochains")
    n = c.degree - 1
    if n == 0:
        return Cochain.scalar(sum((v * nu_monomial(k[0]) for k, v in c.items()), Fraction(0)))
    acc = Cochain.zero(n)
    for key, coeff in c.items():
        rest = Cochain(n, {key[1:]: coeff})
        acc = acc + tensor_mul(_twisted_lead(key[0], n), rest)
    return acc


def A(c) -> Cochain:
    """Cyclic antisymmetrizer sum_{j=0..n} (-1)^(n j) tau^j."""
    c = _as_cochain(c)
    n = c.degree
    _check_degree(n)
    acc = c
    power = c
    for j in range(1, n + 1):
        power = tau(power)
        acc = acc + (power if (n * j) % 2 == 0 else -power)
    return acc


def B(c) -> Cochain:
    """Connes boundary A o B0 : C^(n+1) -> C^n."""
    return A(B0(c))


def normalize(c) -> Cochain:
    """Project onto ker(epsilon) in every factor, dropping tensors with a unit factor."""
    c = _as_cochain(c)
    return Cochain(c.degree, {k: v for k, v in c.items() if not any(m.is_unit() for m in k)})


def is_normalized(c) -> bool:
    c = _as_cochain(c)
    return all(not m.is_unit() for k in c.terms for m in k)


__all__ = [
    "face",
    "degeneracy",
    "tau",
    "b",
    "B0",
    "A",
    "B",
    "normalize",
    "is_normalized",
]
