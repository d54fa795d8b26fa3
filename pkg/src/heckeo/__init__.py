"""Exact computations with the degenerate affine Hecke algebra, Kostant
partition posets, gl_m weight modules and the Schur-Weyl type functor
relating deformed category O to Hecke modules."""

from ._backend import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "__version__"]
