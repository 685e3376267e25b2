"""Top-level package for the modular Hecke algebra toolkit.

Sub-packages follow the layers of the computation: exact scalars and
matrices, q-series, the Hopf algebra H1, the Hecke algebra, the Eisenstein
symbol module, the elliptic curve identities, the floating-point bridge and
the command-line front end.
"""
