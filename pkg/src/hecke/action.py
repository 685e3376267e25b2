"""The action of H1 on modular Hecke elements and the brackets built from it.

    Y(F)_alpha       = (k/2) F_alpha on weight-k parts
    X(F)_alpha       = X(F_alpha)
    delta_n(F)_alpha = X^(n-1)(mu_alpha) * F_alpha
"""

from __future__ import annotations

from fractions import Fraction

from src.exact.matrices import GroupElem
from src.hecke.elements import HeckeElem, convolve, projection_P
from src.hecke.values import FormValue
from src.hopf.algebra import H1Elem, PBWMonomial
from src.utils.logger import get_logger

logger = get_logger(__name__)


def apply_y(F: HeckeElem) -> HeckeElem:
    return F.map_values(lambda _, value: value.grade_y())


def apply_x(F: HeckeElem) -> HeckeElem:
    return F.map_values(lambda _, value: value.serre_x())


def apply_delta(n: int, F: HeckeElem) -> HeckeElem:
    if n < 1:
        raise ValueError(f"delta index must be positive, got {n}")
    return F.map_values(lambda key, value: FormValue.mu(key, n - 1) * value)


def act_monomial(mono: PBWMonomial, F: HeckeElem) -> HeckeElem:
    """delta^e X^a Y^b acting on F: Y first, then X, then the commuting deltas."""
    result = F
    for _ in range(mono.y):
        result = apply_y(result)
    for _ in range(mono.x):
        result = apply_x(result)
    for index, power in enumerate(mono.deltas, start=1):
        for _ in range(power):
            result = apply_delta(index, result)
    return result


def hopf_act(h: H1Elem, F: HeckeElem) -> HeckeElem:
    acc = HeckeElem.zero()
    for mono, c in h.items():
        acc = acc + act_monomial(mono, F).scale(c)
    return acc


def act_on_value(h: H1Elem, value: FormValue) -> FormValue:
    """h acting on a value placed on the trivial coset, where every mu vanishes."""
    return hopf_act(h, HeckeElem.from_form(value)).value_at(GroupElem.identity())


def schwarzian_sigma(g) -> FormValue:
    """X(mu_g) - mu_g^2 / 2, the weight-4 cocycle attached to delta_2'."""
    mu = FormValue.mu(g)
    return FormValue.mu(g, 1) - (mu * mu).scale(Fraction(1, 2))


def omega4() -> FormValue:
    """Omega_4 = -E4 / 72."""
    return FormValue.form("E4").scale(Fraction(-1, 72))


def inner_bracket(w: FormValue, F: HeckeElem) -> HeckeElem:
    """[w, F] = w * F - F * w with w on the trivial coset."""
    W = HeckeElem.from_form(w)
    return convolve(W, F) - convolve(F, W)


def rc1_bracket(a1: HeckeElem, a2: HeckeElem) -> HeckeElem:
    """First Rankin-Cohen bracket X(a1) Y(a2) - Y(a1) X(a2) - delta_1(Y(a1)) Y(a2)."""
    y1, y2 = apply_y(a1), apply_y(a2)
    return convolve(apply_x(a1), y2) - convolve(y1, apply_x(a2)) - convolve(apply_delta(1, y1), y2)


def gv_pair(a: HeckeElem, b: HeckeElem) -> FormValue:
    """P(a * delta_1(b)), the weight-2 trivial-coset part."""
    return projection_P(convolve(a, apply_delta(1, b)))


__all__ = [
    "apply_x",
    "apply_y",
    "apply_delta",
    "act_monomial",
    "hopf_act",
    "act_on_value",
    "schwarzian_sigma",
    "omega4",
    "inner_bracket",
    "rc1_bracket",
    "gv_pair",
]
