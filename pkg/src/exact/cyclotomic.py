"""Exact arithmetic in cyclotomic fields Q(zeta_M).

An element is a coefficient vector over Q in powers of zeta_M, always reduced
modulo the M-th cyclotomic polynomial, so two elements of the same order are
equal exactly when their vectors agree. Elements of different orders are
compared and combined inside Q(zeta_L) with L the lcm of the orders; L is
capped (``MODHECKE_CYCLOTOMIC_CAP``) and exceeding the cap raises
:class:`CyclotomicCapError`.

Values that turn out rational are stored with order 1.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd, pi
from typing import Iterable, Sequence, Union

from sympy import Poly, QQ, Rational, Symbol, cyclotomic_poly, invert, totient

from settings import MODHECKE_CYCLOTOMIC_CAP
from src.exact.errors import CyclotomicCapError, NotInvertibleError
from src.exact.rational import as_rational, frac_part, from_sympy

_Z = Symbol("z")

_cap: dict = {"value": MODHECKE_CYCLOTOMIC_CAP}


def set_cyclotomic_cap(value: int) -> None:
    """Override the largest admissible common order."""
    if value < 1:
        raise ValueError("cyclotomic cap must be positive")
    _cap["value"] = int(value)


def cyclotomic_cap() -> int:
    return _cap["value"]


@lru_cache(maxsize=None)
def _phi(order: int) -> tuple[Fraction, ...]:
    """Coefficients of Phi_order, constant term first (monic)."""
    poly = Poly(cyclotomic_poly(order, _Z), _Z)
    return tuple(from_sympy(c) for c in reversed(poly.all_coeffs()))


@lru_cache(maxsize=None)
def _degree(order: int) -> int:
    return int(totient(order))


def _reduce(order: int, coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    phi = _phi(order)
    n = len(phi) - 1
    work = list(coeffs)
    for i in range(len(work) - 1, n - 1, -1):
        lead = work[i]
        if lead:
            base = i - n
            for j in range(n):
                work[base + j] -= lead * phi[j]
            work[i] = Fraction(0)
    work = work[:n] + [Fraction(0)] * (n - len(work))
    return tuple(work)


@lru_cache(maxsize=None)
def _zeta_power(order: int, k: int) -> tuple[Fraction, ...]:
    k %= order
    vec = [Fraction(0)] * (k + 1)
    vec[k] = Fraction(1)
    return _reduce(order, vec)


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


class Cyclotomic:
    """An element of Q(zeta_order) in reduced power-basis form.

    Instances are immutable and deliberately unhashable: equality across
    orders goes through an embedding, which a hash could not respect.
    """

    __slots__ = ("order", "coeffs")
    __hash__ = None  # type: ignore[assignment]

    def __init__(self, order: int, coeffs: Iterable[Union[Fraction, int]] = ()) -> None:
        if order < 1:
            raise ValueError("cyclotomic order must be positive")
        reduced = _reduce(order, [as_rational(c) for c in coeffs])
        if order > 1 and not any(reduced[1:]):
            order, reduced = 1, (reduced[0] if reduced else Fraction(0),)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", reduced)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("Cyclotomic values are immutable")

    # construction ------------------------------------------------------

    @classmethod
    def rational(cls, value) -> "Cyclotomic":
        return cls(1, (as_rational(value),))

    @classmethod
    def zeta(cls, order: int, power: int = 1) -> "Cyclotomic":
        """Return zeta_order ** power."""
        return cls(order, _zeta_power(order, power))

    @classmethod
    def exp2pi(cls, r) -> "Cyclotomic":
        """Return exp(2 pi i r) for a rational r."""
        t = frac_part(as_rational(r))
        return cls.zeta(t.denominator, t.numerator)

    # inspection --------------------------------------------------------

    def is_rational(self) -> bool:
        return self.order == 1

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def to_complex(self) -> complex:
        """Embed via zeta_M -> exp(2 pi i / M)."""
        if self.order == 1:
            return complex(self.coeffs[0])
        z = cmath.exp(2j * pi / self.order)
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + float(c)
        return acc

    # embedding ---------------------------------------------------------

    def embed(self, order: int) -> tuple[Fraction, ...]:
        """Coefficient vector of this value inside Q(zeta_order)."""
        if order % self.order:
            raise ValueError(f"order {self.order} does not divide {order}")
        if order == self.order:
            return self.coeffs
        step = order // self.order
        vec = [Fraction(0)] * (step * (len(self.coeffs) - 1) + 1)
        for i, c in enumerate(self.coeffs):
            vec[i * step] = c
        return _reduce(order, vec)

    @staticmethod
    def common_order(a: "Cyclotomic", b: "Cyclotomic") -> int:
        order = _lcm(a.order, b.order)
        if order > _cap["value"]:
            raise CyclotomicCapError(
                f"common cyclotomic order {order} exceeds cap {_cap['value']}"
            )
        return order

    # arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "Cyclotomic":
        if isinstance(other, Cyclotomic):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Cyclotomic.rational(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.order == other.order:
            return Cyclotomic(self.order, [x + y for x, y in zip(self.coeffs, other.coeffs)])
        order = self.common_order(self, other)
        return Cyclotomic(order, [x + y for x, y in zip(self.embed(order), other.embed(order))])

    __radd__ = __add__

    def __neg__(self) -> "Cyclotomic":
        return Cyclotomic(self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.order == 1:
            s = other.coeffs[0]
            return Cyclotomic(self.order, [c * s for c in self.coeffs])
        if self.order == 1:
            s = self.coeffs[0]
            return Cyclotomic(other.order, [c * s for c in other.coeffs])
        order = self.common_order(self, other)
        left, right = self.embed(order), other.embed(order)
        prod = [Fraction(0)] * (len(left) + len(right) - 1)
        for i, x in enumerate(left):
            if x:
                for j, y in enumerate(right):
                    if y:
                        prod[i + j] += x * y
        return Cyclotomic(order, prod)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        """Multiplicative inverse via polynomial inversion modulo Phi_M."""
        if self.is_zero():
            raise NotInvertibleError("zero has no inverse")
        if self.order == 1:
            return Cyclotomic.rational(1 / self.coeffs[0])
        num = Poly([_to_sympy(c) for c in reversed(self.coeffs)], _Z, domain=QQ)
        mod = Poly(cyclotomic_poly(self.order, _Z), _Z, domain=QQ)
        inv = invert(num, mod)
        return Cyclotomic(self.order, [from_sympy(c) for c in reversed(inv.all_coeffs())])

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int) -> "Cyclotomic":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = Cyclotomic.rational(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conj(self) -> "Cyclotomic":
        """Complex conjugate: zeta -> zeta**-1."""
        acc = [Fraction(0)] * len(self.coeffs)
        result = Cyclotomic(self.order, acc)
        for i, c in enumerate(self.coeffs):
            if c:
                result = result + Cyclotomic.zeta(self.order, -i) * c
        return result

    # comparison --------------------------------------------------------

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.order == other.order:
            return self.coeffs == other.coeffs
        if self.order == 1 or other.order == 1:
            return False
        order = _lcm(self.order, other.order)
        return self.embed(order) == other.embed(order)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        return f"Cyclotomic({self.order}, {[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if self.order == 1:
            return str(self.coeffs[0])
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                power = "" if i == 1 else f"^{i}"
                coef = "" if c == 1 else ("-" if c == -1 else f"{c}*")
                parts.append(f"{coef}z{self.order}{power}")
        return " + ".join(parts).replace("+ -", "- ") or "0"


def _to_sympy(value: Fraction) -> Rational:
    return Rational(value.numerator, value.denominator)


ZERO = Cyclotomic.rational(0)
ONE = Cyclotomic.rational(1)


def degree(order: int) -> int:
    """Degree of Q(zeta_order) over Q."""
    return _degree(order)


__all__ = ["Cyclotomic", "ZERO", "ONE", "degree", "set_cyclotomic_cap", "cyclotomic_cap"]
