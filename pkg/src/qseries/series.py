"""Truncated q-expansions with rational exponents and cyclotomic coefficients.

A :class:`QSeries` stores finitely many terms ``c * q**r`` with ``r`` rational
and ``c`` a :class:`~src.exact.cyclotomic.Cyclotomic`. Coefficients at
exponents ``>= truncation`` are unknown; ``truncation=None`` marks an exact
(finite) expansion. Arithmetic propagates the truncation to the largest order
the inputs determine.
"""

from __future__ import annotations

from fractions import Fraction
from math import ceil, gcd
from types import MappingProxyType
from typing import Iterable, Mapping, Optional, Union

from settings import MODHECKE_MAX_EXP_DENOMINATOR, MODHECKE_ORDER
from src.exact.cyclotomic import Cyclotomic
from src.exact.errors import ExponentDenominatorError, NotInvertibleError
from src.exact.rational import as_rational
from src.utils.logger import get_logger

logger = get_logger(__name__)

Scalar = Union[Cyclotomic, Fraction, int]

_limits: dict = {"max_exp_denominator": MODHECKE_MAX_EXP_DENOMINATOR}


def set_max_exp_denominator(value: int) -> None:
    if value < 1:
        raise ValueError("exponent denominator cap must be positive")
    _limits["max_exp_denominator"] = int(value)


def _as_cyclotomic(value: Scalar) -> Cyclotomic:
    if isinstance(value, Cyclotomic):
        return value
    return Cyclotomic.rational(value)


def _min_trunc(*values: Optional[Fraction]) -> Optional[Fraction]:
    known = [v for v in values if v is not None]
    return min(known) if known else None


class QSeries:
    """Immutable truncated q-expansion.

    Attributes:
        terms: Read-only mapping exponent -> nonzero coefficient, all
            exponents below ``truncation``.
        truncation: First unknown exponent, or None for an exact expansion.
        weight: Optional weight metadata.
        level_tag: Optional free-form level description.
    """

    __slots__ = ("_terms", "truncation", "weight", "level_tag")

    def __init__(
        self,
        terms: Mapping[Fraction, Scalar] | Iterable[tuple[Fraction, Scalar]] = (),
        truncation=None,
        weight=None,
        level_tag: Optional[str] = None,
    ) -> None:
        trunc = None if truncation is None else as_rational(truncation)
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Fraction, Cyclotomic] = {}
        for r, c in items:
            r = as_rational(r)
            if trunc is not None and r >= trunc:
                continue
            c = _as_cyclotomic(c)
            if r in clean:
                c = clean[r] + c
            if c.is_zero():
                clean.pop(r, None)
            else:
                clean[r] = c
        self._terms = dict(sorted(clean.items()))
        self.truncation = trunc
        self.weight = None if weight is None else as_rational(weight)
        self.level_tag = level_tag
        if self.exp_denominator > _limits["max_exp_denominator"]:
            raise ExponentDenominatorError(
                f"exponent denominator {self.exp_denominator} exceeds cap "
                f"{_limits['max_exp_denominator']}"
            )

    # construction ------------------------------------------------------

    @classmethod
    def zero(cls, truncation=None, weight=None) -> "QSeries":
        return cls({}, truncation, weight)

    @classmethod
    def constant(cls, value: Scalar, truncation=None, weight=0) -> "QSeries":
        return cls({Fraction(0): value}, truncation, weight)

    @classmethod
    def monomial(cls, value: Scalar, exponent, truncation=None, weight=None) -> "QSeries":
        return cls({as_rational(exponent): value}, truncation, weight)

    @classmethod
    def from_coefficients(
        cls, coeffs: Iterable[Scalar], offset=0, truncation=None, weight=None, level_tag=None
    ) -> "QSeries":
        """Build sum(coeffs[n] * q**(offset + n)); truncation defaults to offset + len."""
        offset = as_rational(offset)
        coeffs = list(coeffs)
        if truncation is None:
            truncation = offset + len(coeffs)
        return cls(
            {offset + n: c for n, c in enumerate(coeffs) if c},
            truncation,
            weight,
            level_tag,
        )

    def replace(self, **changes) -> "QSeries":
        fields = {
            "terms": self._terms,
            "truncation": self.truncation,
            "weight": self.weight,
            "level_tag": self.level_tag,
        }
        fields.update(changes)
        return QSeries(**fields)

    # inspection --------------------------------------------------------

    @property
    def terms(self) -> Mapping[Fraction, Cyclotomic]:
        return MappingProxyType(self._terms)

    @property
    def exp_denominator(self) -> int:
        den = 1
        for r in self._terms:
            den = den // gcd(den, r.denominator) * r.denominator
        return den

    def is_zero(self) -> bool:
        """True when every known coefficient vanishes."""
        return not self._terms

    def valuation(self) -> Optional[Fraction]:
        """Smallest exponent with a nonzero coefficient (None if none is known)."""
        return next(iter(self._terms), None)

    def leading_coefficient(self) -> Cyclotomic:
        if not self._terms:
            raise NotInvertibleError("series has no known nonzero term")
        return next(iter(self._terms.values()))

    def coefficient(self, exponent) -> Cyclotomic:
        r = as_rational(exponent)
        if self.truncation is not None and r >= self.truncation:
            raise ValueError(f"coefficient of q^{r} is beyond the truncation {self.truncation}")
        return self._terms.get(r, Cyclotomic.rational(0))

    def constant_term(self) -> Cyclotomic:
        return self.coefficient(0)

    def truncate(self, order) -> "QSeries":
        order = as_rational(order)
        new = order if self.truncation is None else min(order, self.truncation)
        return self.replace(truncation=new)

    # arithmetic --------------------------------------------------------

    def __add__(self, other) -> "QSeries":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self._terms)
        for r, c in other._terms.items():
            terms[r] = terms[r] + c if r in terms else c
        weight = self.weight if self.weight == other.weight else None
        return QSeries(terms, _min_trunc(self.truncation, other.truncation), weight, self.level_tag)

    __radd__ = __add__

    def __neg__(self) -> "QSeries":
        return QSeries({r: -c for r, c in self._terms.items()}, self.truncation, self.weight, self.level_tag)

    def __sub__(self, other) -> "QSeries":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "QSeries":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def scale(self, value: Scalar) -> "QSeries":
        c = _as_cyclotomic(value)
        return QSeries({r: a * c for r, a in self._terms.items()}, self.truncation, self.weight, self.level_tag)

    def __mul__(self, other) -> "QSeries":
        if isinstance(other, (Cyclotomic, Fraction, int)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, QSeries):
            return NotImplemented
        trunc = _product_truncation(self, other)
        terms: dict[Fraction, Cyclotomic] = {}
        for r, a in self._terms.items():
            for s, b in other._terms.items():
                e = r + s
                if trunc is not None and e >= trunc:
                    continue
                p = a * b
                terms[e] = terms[e] + p if e in terms else p
        weight = None if self.weight is None or other.weight is None else self.weight + other.weight
        return QSeries(terms, trunc, weight, self.level_tag or other.level_tag)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "QSeries":
        if exponent < 0:
            return self.invert() ** (-exponent)
        result = QSeries.constant(1, weight=0)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def shift(self, exponent) -> "QSeries":
        """Multiply by q**exponent."""
        e = as_rational(exponent)
        trunc = None if self.truncation is None else self.truncation + e
        return QSeries({r + e: c for r, c in self._terms.items()}, trunc, self.weight, self.level_tag)

    def invert(self, order: Optional[int] = None) -> "QSeries":
        """Multiplicative inverse.

        For f = c q^v (1 + ...) known below t, the inverse is known below
        t - 2v. Exact inputs need an explicit ``order`` (relative precision).
        """
        if not self._terms:
            raise NotInvertibleError("cannot invert a series with zero leading term")
        v = self.valuation()
        if self.truncation is None:
            prec = as_rational(order if order is not None else MODHECKE_ORDER)
        else:
            prec = self.truncation - v
        offsets = {r - v: c for r, c in self._terms.items()}
        den = 1
        for off in offsets:
            den = den // gcd(den, off.denominator) * off.denominator
        n_terms = ceil(prec * den)
        a = {int(off * den): c for off, c in offsets.items() if off * den < n_terms}
        inv_lead = a[0].inverse()
        steps = sorted(k for k in a if k)
        b: list[Optional[Cyclotomic]] = [None] * n_terms
        b[0] = inv_lead
        for n in range(1, n_terms):
            acc = None
            for k in steps:
                if k > n:
                    break
                prev = b[n - k]
                if prev is None:
                    continue
                term = a[k] * prev
                acc = term if acc is None else acc + term
            if acc is not None and not acc.is_zero():
                b[n] = -(inv_lead * acc)
        weight = None if self.weight is None else -self.weight
        return QSeries(
            {-v + Fraction(n, den): c for n, c in enumerate(b) if c is not None},
            -v + prec,
            weight,
            self.level_tag,
        )

    def __truediv__(self, other) -> "QSeries":
        if isinstance(other, QSeries):
            return self * other.invert()
        return self.scale(_as_cyclotomic(other).inverse())

    # comparison --------------------------------------------------------

    def __eq__(self, other) -> bool:
        """Coefficient-wise equality below the smaller truncation."""
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        bound = _min_trunc(self.truncation, other.truncation)
        keys = set(self._terms) | set(other._terms)
        for r in keys:
            if bound is not None and r >= bound:
                continue
            zero = Cyclotomic.rational(0)
            if self._terms.get(r, zero) != other._terms.get(r, zero):
                return False
        return True

    __hash__ = None  # type: ignore[assignment]

    def agreement_order(self, other: "QSeries") -> Optional[Fraction]:
        """Exponent of the first disagreement, or the common truncation if none."""
        bound = _min_trunc(self.truncation, other.truncation)
        zero = Cyclotomic.rational(0)
        for r in sorted(set(self._terms) | set(other._terms)):
            if bound is not None and r >= bound:
                break
            if self._terms.get(r, zero) != other._terms.get(r, zero):
                return r
        return bound

    def __repr__(self) -> str:
        head = ", ".join(f"{c}*q^{r}" for r, c in list(self._terms.items())[:6])
        tail = "" if self.truncation is None else f" + O(q^{self.truncation})"
        return f"QSeries({head}{tail})"


def theta(f: QSeries) -> QSeries:
    """q d/dq, termwise q^r -> r q^r; raises the weight metadata by 2."""
    weight = None if f.weight is None else f.weight + 2
    return QSeries({r: c * r for r, c in f.terms.items()}, f.truncation, weight, f.level_tag)


def _coerce(value) -> QSeries:
    if isinstance(value, QSeries):
        return value
    if isinstance(value, (Cyclotomic, Fraction, int)) and not isinstance(value, bool):
        return QSeries.constant(value)
    return NotImplemented  # type: ignore[return-value]


def _product_truncation(f: QSeries, g: QSeries) -> Optional[Fraction]:
    vf = f.valuation() if f._terms else f.truncation
    vg = g.valuation() if g._terms else g.truncation
    if (not f._terms and f.truncation is None) or (not g._terms and g.truncation is None):
        return None
    candidates = []
    if g.truncation is not None and vf is not None:
        candidates.append(vf + g.truncation)
    if f.truncation is not None and vg is not None:
        candidates.append(vg + f.truncation)
    return min(candidates) if candidates else None


__all__ = ["QSeries", "Scalar", "set_max_exp_denominator", "theta"]
