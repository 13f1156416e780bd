"""Discrete Shannon entropy of orthonormal polynomials.

Two independent routes: a spectral one (Jacobi matrix zeros, Christoffel
weights, the orthogonal Psi matrix) that works for any family given by its
recurrence, and exact closed forms for the Chebyshev families in terms of
``R(x)`` and a GCD of the zero index.
"""
from .closedform import compare, extremal_summary, theorem1, theorem2
from .entropy import (
    dual_entropy,
    entropy_at_lambda,
    entropy_at_zero,
    entropy_table,
    modified_entropy_cheb1,
    modified_entropy_cheb2,
    shannon_entropy,
    spectral_to_angular_index,
)
from .estimator import DiscreteEntropy
from .families import REFERENCE_PARAMETER_SETS, FamilySpec, chebyshev_explicit, coefficients
from .numthy import PhiFunction, gcd, phi_at_integer, phi_at_real, shifted_remainder, verify_main_lemma
from .specfun import RFunctionEvaluator, digamma, eval_R, zeta_odd
from .spectrum import JacobiMatrix, christoffel_at, decompose, eigenvalues, evaluate_polynomial_vector

__version__ = "0.1.0"

__all__ = [
    "REFERENCE_PARAMETER_SETS",
    "DiscreteEntropy",
    "FamilySpec",
    "JacobiMatrix",
    "PhiFunction",
    "RFunctionEvaluator",
    "chebyshev_explicit",
    "christoffel_at",
    "coefficients",
    "compare",
    "decompose",
    "digamma",
    "dual_entropy",
    "eigenvalues",
    "entropy_at_lambda",
    "entropy_at_zero",
    "entropy_table",
    "eval_R",
    "evaluate_polynomial_vector",
    "extremal_summary",
    "gcd",
    "modified_entropy_cheb1",
    "modified_entropy_cheb2",
    "phi_at_integer",
    "phi_at_real",
    "shannon_entropy",
    "shifted_remainder",
    "spectral_to_angular_index",
    "theorem1",
    "theorem2",
    "verify_main_lemma",
    "zeta_odd",
]
