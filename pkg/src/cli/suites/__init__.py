"""Package exposing the suite modules.

Importing submodules registers their checks via side-effects.
"""

from . import analytic_checks, curve_checks, euler_checks, hecke_checks, hopf_checks

__all__ = ["analytic_checks", "curve_checks", "euler_checks", "hecke_checks", "hopf_checks"]
