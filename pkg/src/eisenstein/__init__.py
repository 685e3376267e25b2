"""Symbolic Eisenstein module, its cocycles and the rational Euler cocycle."""

from src.eisenstein.classes import PHI0, EisClass, a0_class, class_equal, phi, refine, slash_class
from src.eisenstein.cocycles import (
    cocycle_defect,
    dedekind_symbol,
    euler_rho,
    mu_constant_term,
    mu_symbolic,
    transverse_E,
)

__all__ = [
    "EisClass",
    "PHI0",
    "phi",
    "refine",
    "class_equal",
    "slash_class",
    "a0_class",
    "mu_symbolic",
    "transverse_E",
    "dedekind_symbol",
    "mu_constant_term",
    "euler_rho",
    "cocycle_defect",
]
