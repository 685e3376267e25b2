"""The distinguished cochains of H1 used by the Hecke action."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from src.hopf.algebra import H1Elem
from src.hopf.coalgebra import Cochain


def delta2_prime() -> H1Elem:
    """delta'_2 = delta_2 - delta_1^2 / 2, the primitive Schwarzian element."""
    d1 = H1Elem.delta(1)
    return H1Elem.delta(2) - d1 * d1 * Fraction(1, 2)


def godbillon_vey_chain() -> Cochain:
    """c = delta_1 (x) X + delta_1^2 (x) Y / 2, with B(c) = delta'_2."""
    d1 = H1Elem.delta(1)
    return Cochain.tensor(d1, H1Elem.X()) + Cochain.tensor(d1 * d1, H1Elem.Y()) * Fraction(1, 2)


def transverse_fundamental() -> Cochain:
    """F = X (x) Y - Y (x) X - delta_1 Y (x) Y."""
    x, y = H1Elem.X(), H1Elem.Y()
    return Cochain.tensor(x, y) - Cochain.tensor(y, x) - Cochain.tensor(H1Elem.delta(1) * y, y)


@lru_cache(maxsize=1)
def _distinguished() -> tuple[tuple[str, Cochain], ...]:
    return (
        ("delta1", Cochain.from_elem(H1Elem.delta(1))),
        ("delta2p", Cochain.from_elem(delta2_prime())),
        ("c", godbillon_vey_chain()),
        ("F", transverse_fundamental()),
    )


def distinguished() -> dict[str, Cochain]:
    """Named cocycles: delta1, delta2p, c and F."""
    return dict(_distinguished())


__all__ = ["delta2_prime", "godbillon_vey_chain", "transverse_fundamental", "distinguished"]
