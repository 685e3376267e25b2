"""Exact rational helpers on top of :class:`fractions.Fraction`.

``Fraction`` is the library-wide rational type: it is always reduced and
keeps a positive denominator. This module adds parsing, the ``"p/q"`` wire
format and reduction modulo 1.
"""

from __future__ import annotations

from fractions import Fraction
from math import floor
from typing import TypeAlias, Union

RationalLike: TypeAlias = Union[Fraction, int, str]


def as_rational(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are rejected: they would silently import rounding error into an
    exact computation.
    """
    if isinstance(value, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("empty rational string")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"malformed rational: {value!r}") from exc
    raise ValueError(f"cannot interpret {type(value).__name__} as an exact rational")


def format_rational(value: Fraction) -> str:
    """Render a Fraction in the ``"p/q"`` wire format (``"p"`` when integral)."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def frac_part(value: Fraction) -> Fraction:
    """Return ``value - floor(value)``, the representative in [0, 1)."""
    return value - floor(value)


def from_sympy(value) -> Fraction:
    """Convert a sympy Rational (or any object exposing ``p``/``q``) to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    p = getattr(value, "p", None)
    q = getattr(value, "q", None)
    if p is None or q is None:
        return Fraction(str(value))
    return Fraction(int(p), int(q))


__all__ = ["RationalLike", "as_rational", "format_rational", "frac_part", "from_sympy"]
