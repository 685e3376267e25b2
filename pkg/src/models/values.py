"""JSON wire models for exact values: cyclotomic numbers, q-series, form
values and Hecke elements.

Every model converts both ways with ``from_value``/``to_value``. Rationals
travel as ``"p/q"`` strings and matrices as ``[[a, b], [c, d]]``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Literal, Optional

from pydantic import BaseModel, Field

from src.exact.cyclotomic import Cyclotomic
from src.exact.matrices import GroupElem, Mat
from src.exact.rational import as_rational
from src.hecke.elements import HeckeElem
from src.hecke.values import BASE_WEIGHTS, Atom, FormValue
from src.models.validators import MatrixRows, RationalStr
from src.qseries.series import QSeries


def _rows(m: Mat) -> list[list[int]]:
    return [[m.a, m.b], [m.c, m.d]]


class CyclotomicModel(BaseModel):
    """An element of Q(zeta_order) as its reduced coefficient vector."""

    order: int = Field(ge=1, description="Cyclotomic order M")
    coeffs: List[RationalStr] = Field(default_factory=list, description="Coefficients of 1, zeta, zeta^2, ...")

    @classmethod
    def from_value(cls, value: Cyclotomic) -> "CyclotomicModel":
        return cls(order=value.order, coeffs=list(value.coeffs))

    def to_value(self) -> Cyclotomic:
        return Cyclotomic(self.order, [as_rational(c) for c in self.coeffs])


class QSeriesModel(BaseModel):
    """sum c q^(n / exp_den), terms sorted by exponent."""

    exp_den: int = Field(ge=1, description="Common exponent denominator D")
    terms: List[tuple[int, CyclotomicModel]] = Field(default_factory=list)
    trunc: Optional[RationalStr] = Field(None, description="First unknown exponent")
    weight: Optional[RationalStr] = None

    @classmethod
    def from_value(cls, f: QSeries) -> "QSeriesModel":
        den = f.exp_denominator
        terms = [(int(r * den), CyclotomicModel.from_value(c)) for r, c in f.terms.items()]
        return cls(exp_den=den, terms=terms, trunc=f.truncation, weight=f.weight)

    def to_value(self) -> QSeries:
        terms = {Fraction(n, self.exp_den): c.to_value() for n, c in self.terms}
        return QSeries(terms, self.trunc, self.weight)


class AtomModel(BaseModel):
    kind: Literal["form", "mu"]
    tag: str
    depth: int = Field(0, ge=0)
    mat: MatrixRows

    @classmethod
    def from_value(cls, atom: Atom) -> "AtomModel":
        return cls(kind=atom.kind, tag=atom.tag, depth=atom.depth, mat=_rows(atom.mat))

    def to_value(self) -> FormValue:
        m = Mat.from_rows(self.mat)
        if self.kind == "mu":
            return FormValue.mu(m, self.depth)
        if self.tag not in BASE_WEIGHTS:
            raise ValueError(f"unknown level-one form {self.tag!r}")
        return FormValue.form(self.tag, m)


class FormTermModel(BaseModel):
    """coeff * prod atom^power."""

    atoms: List[tuple[AtomModel, int]] = Field(default_factory=list)
    coeff: CyclotomicModel


class FormValueModel(BaseModel):
    terms: List[FormTermModel] = Field(default_factory=list)

    @classmethod
    def from_value(cls, value: FormValue) -> "FormValueModel":
        return cls(
            terms=[
                FormTermModel(
                    atoms=[(AtomModel.from_value(a), e) for a, e in mono],
                    coeff=CyclotomicModel.from_value(c),
                )
                for mono, c in value.items()
            ]
        )

    def to_value(self) -> FormValue:
        total = FormValue.zero()
        for term in self.terms:
            product = FormValue.constant(term.coeff.to_value())
            for atom, power in term.atoms:
                product = product * atom.to_value() ** power
            total = total + product
        return total


class HeckeEntryModel(BaseModel):
    scalar: RationalStr = "1"
    hnf: MatrixRows
    value: FormValueModel


class HeckeElemModel(BaseModel):
    """{"support": [{"scalar": "r", "hnf": [[a, b], [0, d]], "value": ...}]}"""

    support: List[HeckeEntryModel] = Field(default_factory=list)

    @classmethod
    def from_value(cls, F: HeckeElem) -> "HeckeElemModel":
        return cls(
            support=[
                HeckeEntryModel(scalar=g.scalar, hnf=_rows(g.mat), value=FormValueModel.from_value(v))
                for g, v in F.items()
            ]
        )

    def to_value(self) -> HeckeElem:
        return HeckeElem(
            [(GroupElem.of(entry.hnf, as_rational(entry.scalar)), entry.value.to_value()) for entry in self.support]
        )


__all__ = [
    "CyclotomicModel",
    "QSeriesModel",
    "AtomModel",
    "FormTermModel",
    "FormValueModel",
    "HeckeEntryModel",
    "HeckeElemModel",
]
