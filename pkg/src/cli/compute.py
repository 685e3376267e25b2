"""Objects the ``compute`` command can produce.

Each producer returns a pair (JSON-ready value, text rendering).
"""

from __future__ import annotations

from typing import Any, Callable, Dict

from src.cli.parsing import (
    parse_element,
    parse_monomial,
    parse_pair,
    parse_positive_matrix,
    parse_rational,
    parse_weight_two,
)
from src.eisenstein import dedekind_symbol, euler_rho, phi
from src.exact.rational import format_rational
from src.hecke import FormValue, HeckeElem, hecke_T, perturb, rc1_bracket
from src.models.values import FormValueModel, HeckeElemModel, QSeriesModel
from src.qseries import CLASSICAL, QSeries, mu_series
from src.utils.logger import get_logger

logger = get_logger(__name__)

Produced = tuple[Any, str]

_TEXT_TERMS = 12


def render_series(f: QSeries, max_terms: int = _TEXT_TERMS) -> str:
    """``1 + 240q + 2160q^2 + ... + O(q^5)``."""
    parts = []
    for r, c in list(f.terms.items())[:max_terms]:
        coeff = str(c)
        if r == 0:
            parts.append(coeff)
            continue
        power = "q" if r == 1 else f"q^{format_rational(r)}"
        if coeff == "1":
            parts.append(power)
        elif coeff == "-1":
            parts.append(f"-{power}")
        elif c.is_rational():
            parts.append(f"{coeff}{power}")
        else:
            parts.append(f"({coeff}){power}")
    if len(f.terms) > max_terms:
        parts.append("...")
    if f.truncation is not None:
        parts.append(f"O(q^{format_rational(f.truncation)})")
    return " + ".join(parts).replace("+ -", "- ") or "0"


def _series(f: QSeries) -> Produced:
    return QSeriesModel.from_value(f).model_dump(mode="json"), render_series(f)


def _element(F: HeckeElem) -> Produced:
    return HeckeElemModel.from_value(F).model_dump(mode="json"), F.render()


def _value(v: FormValue) -> Produced:
    return FormValueModel.from_value(v).model_dump(mode="json"), v.render()


def compute_qexp(args) -> Produced:
    if args.series not in CLASSICAL:
        raise ValueError(f"unknown series {args.series!r}; expected one of {sorted(CLASSICAL)}")
    return _series(CLASSICAL[args.series](args.order))


def compute_mu(args) -> Produced:
    return _series(mu_series(parse_positive_matrix(args.g), args.order))


def compute_rho(args) -> Produced:
    value = format_rational(euler_rho(parse_positive_matrix(args.g1), parse_positive_matrix(args.g2)))
    return value, value


def compute_dedekind(args) -> Produced:
    x1, x2 = parse_pair(args.x)
    frac = parse_rational(args.frac)
    value = format_rational(dedekind_symbol(phi(x1, x2), frac.numerator, frac.denominator))
    return value, value


def compute_hecke_T(args) -> Produced:
    return _element(hecke_T(args.n))


def compute_rc1(args) -> Produced:
    return _element(rc1_bracket(parse_element(args.a), parse_element(args.b)))


def compute_perturb_u(args) -> Produced:
    u = perturb(parse_weight_two(args.t), parse_rational(args.lam), parse_weight_two(args.m))
    return _value(u.u_monomial(parse_monomial(args.h)))


COMPUTE: Dict[str, Callable[[Any], Produced]] = {
    "qexp": compute_qexp,
    "mu": compute_mu,
    "rho": compute_rho,
    "dedekind": compute_dedekind,
    "T": compute_hecke_T,
    "rc1": compute_rc1,
    "perturb-u": compute_perturb_u,
}

__all__ = ["COMPUTE", "render_series"]
