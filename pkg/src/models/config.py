"""Effective run configuration for the verification suites."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field, field_validator

from settings import MODHECKE_MAX_ENTRY, MODHECKE_ORDER, MODHECKE_SEED
from src.models.validators import parse_point


class RunConfig(BaseModel):
    """Settings a suite runs with; CLI flags override the environment defaults.

    Attributes:
        order: Working q-truncation.
        seed: Seed of the numpy generator used for random samples.
        max_entry: Entry bound for sampled integer matrices.
        triples: Number of random triples for 2-cocycle identities.
        pairs: Number of random pairs for numeric cross-checks.
        samples: Number of random algebra elements for Hecke identities.
        fragment_pairs: Number of random element pairs for the Leibniz and commutator identities.
        z0: Base point of the numeric cocycles, written ``"a+bi"``.
        include_slow: Run checks marked slow instead of skipping them.
    """

    order: int = Field(MODHECKE_ORDER, ge=5)
    seed: int = MODHECKE_SEED
    max_entry: int = Field(MODHECKE_MAX_ENTRY, ge=1)
    triples: int = Field(200, ge=0)
    pairs: int = Field(10, ge=0)
    samples: int = Field(10, ge=0)
    fragment_pairs: int = Field(50, ge=0)
    z0: str = "2i"
    include_slow: bool = False

    model_config = ConfigDict(frozen=True)

    @field_validator("z0")
    @classmethod
    def _check_point(cls, v: str) -> str:
        parse_point(v)
        return v

    @property
    def point(self) -> complex:
        return parse_point(self.z0)


__all__ = ["RunConfig"]
