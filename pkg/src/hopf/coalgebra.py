"""Coalgebra structure of H1: tensors, coproduct, counit, antipodes.

Tensors of n factors are stored as :class:`Cochain` values of degree n; the
same type carries the Hopf-cyclic cochains in :mod:`src.hopf.cochains`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Mapping

from src.exact.errors import CochainDegreeError
from src.hopf.algebra import (
    UNIT,
    H1Elem,
    Letter,
    PBWMonomial,
    monomial_product,
    pbw_mul,
)
from src.utils.logger import get_logger

logger = get_logger(__name__)

MAX_DEGREE = 4

Key = tuple[PBWMonomial, ...]


class Cochain:
    """Q-linear combination of elementary tensors h1 (x) ... (x) hn.

    Attributes:
        degree: Number of tensor factors; degree 0 is a scalar stored at key ().
        terms: Read-only mapping tensor key -> nonzero Fraction.
    """

    __slots__ = ("degree", "_terms")

    def __init__(self, degree: int, terms: Mapping[Key, Fraction] | Iterable[tuple[Key, Fraction]] = ()):
        if degree < 0:
            raise CochainDegreeError(f"negative cochain degree {degree}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Key, Fraction] = {}
        for key, c in items:
            key = tuple(key)
            if len(key) != degree:
                raise ValueError(f"tensor {key} does not have {degree} factors")
            acc[key] = acc.get(key, Fraction(0)) + Fraction(c)
        self.degree = degree
        self._terms = {k: c for k, c in sorted(acc.items()) if c}

    @classmethod
    def scalar(cls, value) -> "Cochain":
        return cls(0, {(): Fraction(value)})

    @classmethod
    def zero(cls, degree: int) -> "Cochain":
        return cls(degree)

    @classmethod
    def from_elem(cls, u: H1Elem) -> "Cochain":
        return cls(1, {(m,): c for m, c in u.items()})

    @classmethod
    def tensor(cls, *factors: H1Elem) -> "Cochain":
        """Elementary tensor of H1 elements, expanded over their monomials."""
        acc: dict[Key, Fraction] = {}
        for combo in product(*(list(f.items()) for f in factors)):
            key = tuple(m for m, _ in combo)
            c = Fraction(1)
            for _, d in combo:
                c *= d
            acc[key] = acc.get(key, Fraction(0)) + c
        return cls(len(factors), acc)

    @property
    def terms(self) -> Mapping[Key, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Key, Fraction]]:
        return iter(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def to_elem(self) -> H1Elem:
        if self.degree != 1:
            raise CochainDegreeError(f"only degree-1 cochains are elements of H1, got {self.degree}")
        return H1Elem({k[0]: c for k, c in self._terms.items()})

    def scalar_value(self) -> Fraction:
        if self.degree != 0:
            raise CochainDegreeError(f"only degree-0 cochains are scalars, got {self.degree}")
        return self._terms.get((), Fraction(0))

    def _check(self, other: "Cochain") -> None:
        if self.degree != other.degree:
            raise CochainDegreeError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other: "Cochain") -> "Cochain":
        self._check(other)
        return Cochain(self.degree, list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> "Cochain":
        return Cochain(self.degree, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + (-other)

    def __mul__(self, other) -> "Cochain":
        if isinstance(other, (int, Fraction)):
            return Cochain(self.degree, {k: c * other for k, c in self._terms.items()})
        return tensor_mul(self, other)

    def __rmul__(self, other) -> "Cochain":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        if not isinstance(other, Cochain):
            return NotImplemented
        return self.degree == other.degree and self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    def render(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for key, c in self._terms.items():
            body = " (x) ".join(m.render() for m in key) or "1"
            parts.append(body if c == 1 else f"{c} {body}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"Cochain[{self.degree}]({self.render()})"


def tensor_mul(left: Cochain, right: Cochain) -> Cochain:
    """Factorwise product in the tensor power algebra."""
    left._check(right)
    acc: dict[Key, Fraction] = {}
    for k1, c1 in left.items():
        for k2, c2 in right.items():
            expansions = [monomial_product(a, b) for a, b in zip(k1, k2)]
            for combo in product(*expansions):
                key = tuple(m for m, _ in combo)
                c = c1 * c2
                for _, d in combo:
                    c *= d
                acc[key] = acc.get(key, Fraction(0)) + c
    return Cochain(left.degree, acc)


@lru_cache(maxsize=None)
def _coproduct_letter(letter: Letter) -> Cochain:
    kind, n = letter
    one = H1Elem.one()
    if kind == "Y":
        y = H1Elem.Y()
        return Cochain.tensor(y, one) + Cochain.tensor(one, y)
    if kind == "X":
        x = H1Elem.X()
        return Cochain.tensor(x, one) + Cochain.tensor(one, x) + Cochain.tensor(H1Elem.delta(1), H1Elem.Y())
    if n == 1:
        d = H1Elem.delta(1)
        return Cochain.tensor(d, one) + Cochain.tensor(one, d)
    dx = _coproduct_letter(("X", 0))
    prev = _coproduct_letter(("d", n - 1))
    return tensor_mul(dx, prev) - tensor_mul(prev, dx)


@lru_cache(maxsize=None)
def coproduct_monomial(mono: PBWMonomial) -> Cochain:
    result = Cochain.tensor(H1Elem.one(), H1Elem.one())
    for letter in mono.letters():
        result = tensor_mul(result, _coproduct_letter(letter))
    return result


def coproduct(u: H1Elem) -> Cochain:
    """Delta(u), extended multiplicatively from the generators."""
    acc = Cochain.zero(2)
    for mono, c in u.items():
        acc = acc + coproduct_monomial(mono) * c
    return acc


def counit(u: H1Elem) -> Fraction:
    return u.terms.get(UNIT, Fraction(0))


def nu_monomial(mono: PBWMonomial) -> Fraction:
    """nu(Y) = 1, nu(X) = nu(delta_n) = 0, extended as a character."""
    return Fraction(1) if not mono.deltas and mono.x == 0 else Fraction(0)


def nu(u: H1Elem) -> Fraction:
    return sum((c * nu_monomial(m) for m, c in u.items()), Fraction(0))


@lru_cache(maxsize=None)
def _antipode_letter(letter: Letter) -> H1Elem:
    kind, n = letter
    if kind == "Y":
        return -H1Elem.Y()
    if kind == "X":
        return -H1Elem.X() + H1Elem.delta(1) * H1Elem.Y()
    if n == 1:
        return -H1Elem.delta(1)
    sx = _antipode_letter(("X", 0))
    prev = _antipode_letter(("d", n - 1))
    return pbw_mul(prev, sx) - pbw_mul(sx, prev)


@lru_cache(maxsize=None)
def _antipode_monomial(mono: PBWMonomial) -> H1Elem:
    result = H1Elem.one()
    for letter in reversed(mono.letters()):
        result = pbw_mul(result, _antipode_letter(letter))
    return result


def antipode(u: H1Elem) -> H1Elem:
    """S, the anti-homomorphism with S(Y) = -Y, S(X) = -X + delta_1 Y, S(delta_1) = -delta_1."""
    acc = H1Elem.zero()
    for mono, c in u.items():
        acc = acc + _antipode_monomial(mono) * c
    return acc


@lru_cache(maxsize=None)
def twisted_monomial(mono: PBWMonomial) -> H1Elem:
    acc = H1Elem.zero()
    for (h1, h2), c in coproduct_monomial(mono).items():
        weight = nu_monomial(h1)
        if weight:
            acc = acc + _antipode_monomial(h2) * (c * weight)
    return acc


def twisted_antipode(u: H1Elem) -> H1Elem:
    """S~ = nu * S (convolution), so S~(h) = sum nu(h_(1)) S(h_(2))."""
    acc = H1Elem.zero()
    for mono, c in u.items():
        acc = acc + twisted_monomial(mono) * c
    return acc


def apply_factor(c: Cochain, index: int, fn, image_degree: int) -> Cochain:
    """Replace factor ``index`` by ``fn(monomial)``, a Cochain of ``image_degree``."""
    acc: dict[Key, Fraction] = {}
    for key, coeff in c.items():
        for ikey, d in fn(key[index]).items():
            new = key[:index] + ikey + key[index + 1 :]
            acc[new] = acc.get(new, Fraction(0)) + coeff * d
    return Cochain(c.degree - 1 + image_degree, acc)


def iterated_coproduct(u: H1Elem, n: int) -> Cochain:
    """Delta^(n-1)(u) as an n-fold tensor; n = 1 returns u itself."""
    if n < 1:
        raise CochainDegreeError("iterated coproduct needs at least one factor")
    if n > MAX_DEGREE:
        raise CochainDegreeError(f"tensor degree {n} exceeds the supported maximum {MAX_DEGREE}")
    result = Cochain.from_elem(u)
    for _ in range(n - 1):
        result = apply_factor(result, 0, coproduct_monomial, 2)
    return result


__all__ = [
    "Cochain",
    "MAX_DEGREE",
    "tensor_mul",
    "coproduct",
    "counit",
    "nu",
    "nu_monomial",
    "antipode",
    "twisted_antipode",
    "apply_factor",
    "iterated_coproduct",
    "coproduct_monomial",
    "twisted_monomial",
]
