"""Parsers for the textual arguments of the command line.

All of them raise ValueError on malformed input, which the CLI reports with
exit status 2.
"""

from __future__ import annotations

import re
from fractions import Fraction

from src.exact.matrices import Mat
from src.exact.rational import as_rational
from src.hecke import BASE_WEIGHTS, FormValue, HeckeElem
from src.hopf import UNIT, H1Elem, PBWMonomial, delta2_prime
from src.models.values import HeckeElemModel

_LETTER = re.compile(r"^(?:d(?P<n>[1-9]\d*)|(?P<xy>[XY]))(?:\^(?P<e>\d+))?$")


def parse_matrix(text: str) -> Mat:
    """``"a,b,c,d"`` -> [[a, b], [c, d]]."""
    parts = [p.strip() for p in str(text).split(",")]
    if len(parts) != 4:
        raise ValueError(f"expected four comma-separated integers, got {text!r}")
    try:
        a, b, c, d = (int(p) for p in parts)
    except ValueError as exc:
        raise ValueError(f"matrix entries must be integers: {text!r}") from exc
    return Mat(a, b, c, d)


def parse_positive_matrix(text: str) -> Mat:
    m = parse_matrix(text)
    if m.det() <= 0:
        raise ValueError(f"{m} must have positive determinant")
    return m


def parse_rational(text: str) -> Fraction:
    return as_rational(str(text))


def parse_pair(text: str) -> tuple[Fraction, Fraction]:
    """``"x1,x2"`` with rational entries."""
    parts = str(text).split(",")
    if len(parts) != 2:
        raise ValueError(f"expected two comma-separated rationals, got {text!r}")
    return parse_rational(parts[0]), parse_rational(parts[1])


def parse_monomial(text: str) -> PBWMonomial:
    """``"d1^2 d3 X^2 Y"`` -> PBW monomial; ``"1"`` is the unit."""
    text = str(text).strip()
    if text in ("", "1"):
        return UNIT
    deltas: list[int] = []
    x = y = 0
    for token in text.split():
        match = _LETTER.match(token)
        if match is None:
            raise ValueError(f"cannot read {token!r} as d<n>, X or Y with an optional ^power")
        e = int(match["e"] or 1)
        if match["n"]:
            n = int(match["n"])
            deltas += [0] * max(0, n - len(deltas))
            deltas[n - 1] += e
        elif match["xy"] == "X":
            x += e
        else:
            y += e
    return PBWMonomial(tuple(deltas), x, y)


def parse_operator(text: str) -> H1Elem:
    """A monomial, or ``d2p`` for delta_2' = delta_2 - delta_1^2 / 2."""
    if str(text).strip() == "d2p":
        return delta2_prime()
    return H1Elem.of(parse_monomial(text))


def parse_weight_two(text: str) -> FormValue:
    """``"0"``, ``"eta4"`` or a matrix ``"a,b,c,d"`` standing for mu_g."""
    text = str(text).strip()
    if text == "0":
        return FormValue.zero()
    if text == "eta4":
        return FormValue.form("eta4")
    return FormValue.mu(parse_positive_matrix(text))


def parse_element(text: str) -> HeckeElem:
    """A level-one form tag placed on the trivial coset, or a JSON element."""
    text = str(text).strip()
    if text.startswith("{"):
        return HeckeElemModel.model_validate_json(text).to_value()
    if text in BASE_WEIGHTS or text == "const":
        return HeckeElem.from_form(FormValue.form(text))
    raise ValueError(f"expected a form tag {sorted(BASE_WEIGHTS)} or a JSON element, got {text!r}")


__all__ = [
    "parse_matrix",
    "parse_positive_matrix",
    "parse_rational",
    "parse_pair",
    "parse_monomial",
    "parse_operator",
    "parse_weight_two",
    "parse_element",
]
