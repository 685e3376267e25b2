"""The Hopf algebra H1 and its Hopf-cyclic cochain complex."""

from src.hopf.algebra import (
    UNIT,
    H1Elem,
    PBWMonomial,
    commutator,
    monomial_delta,
    monomial_x,
    monomial_y,
    monomials_up_to,
    pbw_mul,
)
from src.hopf.coalgebra import (
    Cochain,
    antipode,
    coproduct,
    counit,
    iterated_coproduct,
    nu,
    tensor_mul,
    twisted_antipode,
)
from src.hopf.cochains import A, B, B0, b, degeneracy, face, is_normalized, normalize, tau
from src.hopf.cocycles import delta2_prime, distinguished, godbillon_vey_chain, transverse_fundamental

__all__ = [
    "UNIT",
    "H1Elem",
    "PBWMonomial",
    "commutator",
    "monomial_delta",
    "monomial_x",
    "monomial_y",
    "monomials_up_to",
    "pbw_mul",
    "Cochain",
    "antipode",
    "coproduct",
    "counit",
    "iterated_coproduct",
    "nu",
    "tensor_mul",
    "twisted_antipode",
    "A",
    "B",
    "B0",
    "b",
    "degeneracy",
    "face",
    "is_normalized",
    "normalize",
    "tau",
    "delta2_prime",
    "distinguished",
    "godbillon_vey_chain",
    "transverse_fundamental",
]
