"""Exception types shared across the library.

Plain argument validation raises ``ValueError``; the classes below mark the
conditions callers may want to catch specifically.
"""

from __future__ import annotations


class ModHeckeError(Exception):
    """Base class for library-specific failures."""


class CyclotomicCapError(ModHeckeError, ValueError):
    """Mixed cyclotomic orders would need a field larger than the configured cap."""


class ExponentDenominatorError(ModHeckeError, ValueError):
    """A q-series exponent denominator exceeds the configured cap."""


class NotInvertibleError(ModHeckeError, ZeroDivisionError):
    """Inverse requested for zero or for a series without a unit leading term."""


class NotQComputable(ModHeckeError):
    """An expression left the fragment whose q-expansions are computable."""


class CochainDegreeError(ModHeckeError, ValueError):
    """A Hopf-cyclic operator was applied outside the supported degrees."""


class RecursionInconsistency(ModHeckeError, RuntimeError):
    """A coefficient recursion met a degenerate step."""


class BranchError(ModHeckeError, ArithmeticError):
    """A logarithm branch bookkeeping check failed."""


class DivergenceError(ModHeckeError, ArithmeticError):
    """A series was evaluated outside its disc of convergence."""


__all__ = [
    "ModHeckeError",
    "CyclotomicCapError",
    "ExponentDenominatorError",
    "NotInvertibleError",
    "NotQComputable",
    "CochainDegreeError",
    "RecursionInconsistency",
    "BranchError",
    "DivergenceError",
]
