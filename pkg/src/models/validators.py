"""Common validator helpers for models."""

from __future__ import annotations

from typing import Annotated

from pydantic import BeforeValidator

from src.exact.rational import as_rational, format_rational


def normalize_rational(value) -> str:
    """Coerce an int, Fraction or ``"p/q"`` string into canonical ``"p/q"`` form.

    Raises ValueError for floats, booleans and malformed strings so that the
    error surfaces as a pydantic validation error.
    """
    return format_rational(as_rational(value))


def normalize_matrix(value) -> list[list[int]]:
    """Accept ``[[a, b], [c, d]]`` with integer entries and nothing else."""
    rows = [list(r) for r in value]
    if len(rows) != 2 or any(len(r) != 2 for r in rows):
        raise ValueError("matrices are written [[a, b], [c, d]]")
    for entry in (e for r in rows for e in r):
        if isinstance(entry, bool) or not isinstance(entry, int):
            raise ValueError(f"matrix entries must be integers, got {entry!r}")
    return rows


def parse_point(value: str) -> complex:
    """Parse ``"a+bi"`` (or ``"bi"``, ``"a+bj"``) into a point of the upper half-plane."""
    text = str(value).strip().replace(" ", "").replace("i", "j")
    try:
        z = complex(text)
    except ValueError as exc:
        raise ValueError(f"malformed complex point: {value!r}") from exc
    if z.imag <= 0:
        raise ValueError(f"{value!r} is not in the upper half-plane")
    return z


RationalStr = Annotated[str, BeforeValidator(normalize_rational)]
MatrixRows = Annotated[list[list[int]], BeforeValidator(normalize_matrix)]

__all__ = ["RationalStr", "MatrixRows", "normalize_rational", "normalize_matrix", "parse_point"]
