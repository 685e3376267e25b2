"""The modular Hecke algebra of level one on its q-computable fragment."""

from src.hecke.action import (
    act_monomial,
    act_on_value,
    apply_delta,
    apply_x,
    apply_y,
    gv_pair,
    hopf_act,
    inner_bracket,
    omega4,
    rc1_bracket,
    schwarzian_sigma,
)
from src.hecke.elements import (
    HeckeElem,
    act_on_form,
    convolve,
    coset_key,
    epsilon,
    from_double_coset,
    hecke_T,
    is_cuspidal_at_infinity,
    j_embed,
    projection_P,
    sigma_z,
)
from src.hecke.perturbation import Perturbation, perturb
from src.hecke.values import BASE_WEIGHTS, Atom, FormValue, atom_series, value_equal

__all__ = [
    "act_monomial",
    "act_on_value",
    "apply_delta",
    "apply_x",
    "apply_y",
    "gv_pair",
    "hopf_act",
    "inner_bracket",
    "omega4",
    "rc1_bracket",
    "schwarzian_sigma",
    "HeckeElem",
    "act_on_form",
    "convolve",
    "coset_key",
    "epsilon",
    "from_double_coset",
    "hecke_T",
    "is_cuspidal_at_infinity",
    "j_embed",
    "projection_P",
    "sigma_z",
    "Perturbation",
    "perturb",
    "BASE_WEIGHTS",
    "Atom",
    "FormValue",
    "atom_series",
    "value_equal",
]
