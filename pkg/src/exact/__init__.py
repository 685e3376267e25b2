"""Exact scalars, cyclotomic numbers, Bernoulli functions and 2x2 matrix combinatorics."""

from src.exact.bernoulli import b1, b2, bernoulli_periodized
from src.exact.characters import dedekind_sum, eta4_character, eta4_exponent
from src.exact.cyclotomic import ONE, ZERO, Cyclotomic
from src.exact.errors import (
    BranchError,
    CochainDegreeError,
    CyclotomicCapError,
    DivergenceError,
    ExponentDenominatorError,
    ModHeckeError,
    NotInvertibleError,
    NotQComputable,
    RecursionInconsistency,
)
from src.exact.matrices import (
    IDENTITY,
    ORIGIN,
    S_MAT,
    GroupElem,
    Mat,
    TorsionPoint,
    hnf_cosets,
    hnf_key,
    hnf_reduce,
    kernel_points,
    particular_preimage,
    primitive_hnf_cosets,
    smith_normal_form,
    translation,
)
from src.exact.rational import as_rational, format_rational, frac_part

__all__ = [
    "b1",
    "b2",
    "bernoulli_periodized",
    "dedekind_sum",
    "eta4_character",
    "eta4_exponent",
    "Cyclotomic",
    "ONE",
    "ZERO",
    "BranchError",
    "CochainDegreeError",
    "CyclotomicCapError",
    "DivergenceError",
    "ExponentDenominatorError",
    "ModHeckeError",
    "NotInvertibleError",
    "NotQComputable",
    "RecursionInconsistency",
    "IDENTITY",
    "ORIGIN",
    "S_MAT",
    "GroupElem",
    "Mat",
    "TorsionPoint",
    "hnf_cosets",
    "hnf_key",
    "hnf_reduce",
    "kernel_points",
    "particular_preimage",
    "primitive_hnf_cosets",
    "smith_normal_form",
    "translation",
    "as_rational",
    "format_rational",
    "frac_part",
]
