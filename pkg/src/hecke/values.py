"""Symbolic values of Hecke operator forms: polynomials in slashed level-one
forms and the cocycle atoms X^j(mu_g).

Every value is a finite sum ``c * prod(atom ** e)`` with cyclotomic
coefficients. Two kinds of atom are used:

* ``B|beta``: a level-one generator B (eta^4, E4, E6, Delta) slashed by an
  upper-triangular Hermite matrix beta;
* ``X^j(mu_beta)``: the j-th Serre derivative of the cocycle mu at a Hermite
  matrix beta different from the identity.

The set of such polynomials is closed under products, slash by GL2+(Q),
the derivation X and the grading Y. The rewrite rules are

    B | gamma0 beta        = chi_B(gamma0) * B | beta
    X(B | beta)            = X(B) | beta + (k/2) mu_beta * B | beta
    mu_h | g               = mu_(hg) - mu_g
    X^j(mu_h) | g          = X(X^(j-1)(mu_h) | g) - j mu_g * X^(j-1)(mu_h) | g

with chi_B trivial except for eta^4. Values can always be expanded at the
cusp with :meth:`FormValue.qexpand`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil
from typing import Iterable, Iterator, Mapping, Optional, Union

from settings import MODHECKE_ORDER
from src.exact.characters import eta4_character
from src.exact.cyclotomic import Cyclotomic
from src.exact.errors import NotQComputable
from src.exact.matrices import IDENTITY, GroupElem, Mat, hnf_reduce
from src.qseries.classical import delta, e4, e6, eta4
from src.qseries.operators import mu_series, serre_x, slash_upper
from src.qseries.series import QSeries
from src.utils.logger import get_logger

logger = get_logger(__name__)

BASE_WEIGHTS = {"eta4": 2, "E4": 4, "E6": 6, "Delta": 12}

_BASE_SERIES = {"eta4": eta4, "E4": e4, "E6": e6, "Delta": delta}

Scalar = Union[Cyclotomic, Fraction, int]


@dataclass(frozen=True, order=True)
class Atom:
    """A generator of the value algebra.

    Attributes:
        kind: ``"form"`` for a slashed level-one form, ``"mu"`` for X^j(mu).
        tag: Base form tag for form atoms, ``"mu"`` otherwise.
        depth: Number of X applications (always 0 for form atoms).
        mat: Hermite representative the atom is attached to.
    """

    kind: str
    tag: str
    depth: int
    mat: Mat

    @property
    def weight(self) -> int:
        if self.kind == "form":
            return BASE_WEIGHTS[self.tag]
        return 2 + 2 * self.depth

    def render(self) -> str:
        if self.kind == "form":
            return self.tag if self.mat == IDENTITY else f"{self.tag}|{self.mat}"
        prefix = "" if self.depth == 0 else ("X " if self.depth == 1 else f"X^{self.depth} ")
        return f"{prefix}mu{self.mat}"


Monomial = tuple[tuple[Atom, int], ...]


def _as_cyclotomic(value: Scalar) -> Cyclotomic:
    return value if isinstance(value, Cyclotomic) else Cyclotomic.rational(value)


def _as_mat(g) -> Mat:
    if isinstance(g, GroupElem):
        return g.mat
    if isinstance(g, Mat):
        return g
    return Mat.from_rows(g)


def canonical(m: Mat) -> tuple[Mat, Mat]:
    """Split a positive-determinant integer matrix as gamma0 * beta (scalar dropped)."""
    gamma0, beta = hnf_reduce(GroupElem.of(m))
    return gamma0, beta.mat


def _monomial_weight(mono: Monomial) -> int:
    return sum(atom.weight * e for atom, e in mono)


def _merge(left: Monomial, right: Monomial) -> Monomial:
    powers: dict[Atom, int] = dict(left)
    for atom, e in right:
        powers[atom] = powers.get(atom, 0) + e
    return tuple(sorted(powers.items()))


class FormValue:
    """Cyclotomic linear combination of atom monomials.

    Attributes:
        terms: Read-only mapping monomial -> nonzero coefficient.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, Scalar] | Iterable[tuple[Monomial, Scalar]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, Cyclotomic] = {}
        for mono, c in items:
            mono = tuple(sorted((a, e) for a, e in mono if e))
            c = _as_cyclotomic(c)
            acc[mono] = acc[mono] + c if mono in acc else c
        self._terms = {m: c for m, c in sorted(acc.items()) if not c.is_zero()}

    # construction ------------------------------------------------------

    @classmethod
    def zero(cls) -> "FormValue":
        return cls()

    @classmethod
    def constant(cls, value: Scalar) -> "FormValue":
        return cls({(): value})

    @classmethod
    def of_atom(cls, atom: Atom, coeff: Scalar = 1) -> "FormValue":
        return cls({((atom, 1),): coeff})

    @classmethod
    def form(cls, tag: str, g=None) -> "FormValue":
        """The level-one form ``tag`` (or ``"const"``), optionally slashed by g."""
        if tag == "const":
            return cls.constant(1)
        if tag not in BASE_WEIGHTS:
            raise ValueError(f"unknown level-one form {tag!r}; expected one of {sorted(BASE_WEIGHTS)}")
        value = cls.of_atom(Atom("form", tag, 0, IDENTITY))
        return value if g is None else value.slash(g)

    @classmethod
    def mu(cls, g, depth: int = 0) -> "FormValue":
        """X^depth(mu_g); zero when g lies in Gamma(1) up to a scalar."""
        if depth < 0:
            raise ValueError("X-depth must be non-negative")
        _, beta = canonical(_as_mat(g))
        if beta == IDENTITY:
            return cls.zero()
        return cls.of_atom(Atom("mu", "mu", depth, beta))

    # inspection --------------------------------------------------------

    @property
    def terms(self) -> Mapping[Monomial, Cyclotomic]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Monomial, Cyclotomic]]:
        return iter(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def weights(self) -> set[int]:
        return {_monomial_weight(m) for m in self._terms}

    @property
    def weight(self) -> Optional[int]:
        """Common weight of all monomials; None for the zero value."""
        found = self.weights()
        if not found:
            return None
        if len(found) > 1:
            raise ValueError(f"value is not homogeneous, weights {sorted(found)}")
        return found.pop()

    def component(self, weight: int) -> "FormValue":
        return FormValue({m: c for m, c in self._terms.items() if _monomial_weight(m) == weight})

    def atoms(self) -> set[Atom]:
        return {a for m in self._terms for a, _ in m}

    def is_level_one(self) -> bool:
        """True when every atom is an unslashed level-one form with trivial character."""
        return all(a.kind == "form" and a.mat == IDENTITY and a.tag != "eta4" for a in self.atoms())

    # arithmetic --------------------------------------------------------

    def __add__(self, other) -> "FormValue":
        other = _coerce(other)
        return FormValue(list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __neg__(self) -> "FormValue":
        return FormValue({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "FormValue":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "FormValue":
        return _coerce(other) - self

    def scale(self, value: Scalar) -> "FormValue":
        c = _as_cyclotomic(value)
        return FormValue({m: a * c for m, a in self._terms.items()})

    def __mul__(self, other) -> "FormValue":
        if isinstance(other, (Cyclotomic, Fraction, int)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, FormValue):
            return NotImplemented
        acc: dict[Monomial, Cyclotomic] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                key = _merge(m1, m2)
                p = c1 * c2
                acc[key] = acc[key] + p if key in acc else p
        return FormValue(acc)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "FormValue":
        if exponent < 0:
            raise ValueError("negative powers are outside the value algebra")
        result = FormValue.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        """Symbolic equality of normal forms; see :func:`value_equal` for the full test."""
        try:
            other = _coerce(other)
        except TypeError:
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    # operators ---------------------------------------------------------

    def slash(self, g) -> "FormValue":
        """Right slash action by g in GL2+(Q); the scalar part of g acts trivially."""
        m = _as_mat(g)
        return self._map_atoms(lambda atom: _slash_atom(atom, m))

    def serre_x(self) -> "FormValue":
        """The Serre derivation X, applied monomial by monomial with the Leibniz rule."""
        acc = FormValue()
        for mono, c in self._terms.items():
            for i, (atom, e) in enumerate(mono):
                rest = mono[:i] + ((atom, e - 1),) + mono[i + 1 :]
                acc = acc + FormValue({rest: c * e}) * _serre_atom(atom)
        return acc

    def grade_y(self) -> "FormValue":
        """Y acts on weight k by k/2."""
        return FormValue({m: c * Fraction(_monomial_weight(m), 2) for m, c in self._terms.items()})

    def _map_atoms(self, fn) -> "FormValue":
        acc = FormValue()
        for mono, c in self._terms.items():
            term = FormValue.constant(c)
            for atom, e in mono:
                term = term * fn(atom) ** e
            acc = acc + term
        return acc

    # expansion ---------------------------------------------------------

    def qexpand(self, order: Optional[int] = None) -> QSeries:
        """Exact q-expansion below q^order."""
        order = order or MODHECKE_ORDER
        total = QSeries.zero(truncation=order)
        for mono, c in self._terms.items():
            term = QSeries.constant(c)
            for atom, e in mono:
                term = term * atom_series(atom, order) ** e
            total = total + term.truncate(order)
        weight = None
        found = self.weights()
        if len(found) == 1:
            weight = next(iter(found))
        return total.truncate(order).replace(weight=weight)

    def render(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, c in self._terms.items():
            body = " * ".join(a.render() if e == 1 else f"({a.render()})^{e}" for a, e in mono)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            else:
                parts.append(f"({c}) {body}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"FormValue({self.render()})"


def _coerce(value) -> FormValue:
    if isinstance(value, FormValue):
        return value
    if isinstance(value, (Cyclotomic, Fraction, int)) and not isinstance(value, bool):
        return FormValue.constant(value)
    raise TypeError(f"cannot use {type(value).__name__} as a form value")


@lru_cache(maxsize=None)
def _slash_atom(atom: Atom, m: Mat) -> FormValue:
    if atom.kind == "form":
        gamma0, beta = canonical(atom.mat @ m)
        coeff = eta4_character(gamma0) if atom.tag == "eta4" else Cyclotomic.rational(1)
        return FormValue.of_atom(Atom("form", atom.tag, 0, beta), coeff)
    if atom.kind != "mu":
        raise NotQComputable(f"atom kind {atom.kind!r} has no slash rule")
    mu_g = FormValue.mu(m)
    if atom.depth == 0:
        return FormValue.mu(atom.mat @ m) - mu_g
    lower = _slash_atom(Atom("mu", "mu", atom.depth - 1, atom.mat), m)
    return lower.serre_x() - mu_g * lower * atom.depth


_SERRE_BASE = {
    "eta4": lambda: FormValue.zero(),
    "Delta": lambda: FormValue.zero(),
    "E4": lambda: FormValue.form("E6").scale(Fraction(-1, 3)),
    "E6": lambda: (FormValue.form("E4") ** 2).scale(Fraction(-1, 2)),
}


@lru_cache(maxsize=None)
def _serre_atom(atom: Atom) -> FormValue:
    if atom.kind == "mu":
        return FormValue.of_atom(Atom("mu", "mu", atom.depth + 1, atom.mat))
    if atom.kind != "form":
        raise NotQComputable(f"atom kind {atom.kind!r} has no X rule")
    base = _SERRE_BASE[atom.tag]()
    own = FormValue.of_atom(atom)
    if atom.mat == IDENTITY:
        return base
    return base.slash(atom.mat) + FormValue.mu(atom.mat) * own * Fraction(atom.weight, 2)


@lru_cache(maxsize=None)
def atom_series(atom: Atom, order: int) -> QSeries:
    """q-expansion of one atom, known below q^order."""
    if atom.kind == "form":
        m = atom.mat
        source = _BASE_SERIES[atom.tag](max(1, ceil(Fraction(order * m.d, m.a))) + 1)
        return slash_upper(source, atom.weight, m).truncate(order)
    if atom.kind == "mu":
        series = mu_series(atom.mat, order)
        for j in range(atom.depth):
            series = serre_x(series, 2 + 2 * j)
        return series.truncate(order)
    raise NotQComputable(f"atom kind {atom.kind!r} cannot be expanded at the cusp")


def value_equal(left: FormValue, right: FormValue, order: Optional[int] = None) -> bool:
    """Equality of values: symbolic first, then by q-expansion below q^order."""
    diff = _coerce(left) - _coerce(right)
    if diff.is_zero():
        return True
    logger.debug("symbolic forms differ; comparing %d monomials by q-expansion", len(diff.terms))
    return diff.qexpand(order).is_zero()


__all__ = ["Atom", "FormValue", "BASE_WEIGHTS", "atom_series", "canonical", "value_equal"]
