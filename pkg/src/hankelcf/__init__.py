"""Exact Hankel determinants, orthogonal polynomials and Jacobi continued
fractions for Bernoulli and Euler moment sequences."""
from __future__ import annotations

from .cfrac import (Approximant, CFSpec, cf_approximant, cf_equivalence, cf_even_contraction,
                    cf_odd_contraction, jfraction_series, moment_series, verify_jfraction_vs_moments)
from .errors import (ArityError, ContractionError, DegenerateMomentsError, DomainError, EquivalenceError,
                     ExactDivisionError, FormalCancellationError, HankelCFError, SeriesDivisionError)
from .exact import (X, Y, LaurentPoly, Poly, TruncSeries, YPoly, poly_arith, poly_compose, poly_divide_exact,
                    rational_arith, series_divide)
from .formal import formal_F, psi_asymptotic, psi_prime_asymptotic
from .hankel import (HankelMatrix, closed_bernoulli_numbers, closed_bernoulli_odd, closed_chen, closed_euler,
                     hankel_det, hankel_matrix)
from .numerics import ConvergenceWarning, FloatCF, cf_eval_float, digamma, trigamma, validate_identity
from .orthopoly import (JacobiParams, apply_functional, family_params, jacobi_from_moments, named_family,
                        orth_poly_det, orth_poly_rec, verify_orthogonality)
from .sequences import (MomentSeq, bernoulli_number, bernoulli_poly, euler_number, euler_poly, make_sequence,
                        verify_euler_from_bernoulli, verify_reflection)
from .shift import (BandMatrix, dn0_closed, dn_via_determinant, dn_via_recurrence, s_from_shifted,
                    shifted_hankel_prop62)

__version__ = "0.1.0"

__all__ = [
    "Approximant", "ArityError", "BandMatrix", "CFSpec", "ContractionError", "ConvergenceWarning",
    "DegenerateMomentsError", "DomainError", "EquivalenceError", "ExactDivisionError", "FloatCF",
    "FormalCancellationError", "HankelCFError", "HankelMatrix", "JacobiParams", "LaurentPoly", "MomentSeq",
    "Poly", "SeriesDivisionError", "TruncSeries", "X", "Y", "YPoly", "apply_functional", "bernoulli_number",
    "bernoulli_poly", "cf_approximant", "cf_equivalence", "cf_eval_float", "cf_even_contraction",
    "cf_odd_contraction", "closed_bernoulli_numbers", "closed_bernoulli_odd", "closed_chen", "closed_euler",
    "digamma", "dn0_closed", "dn_via_determinant", "dn_via_recurrence", "euler_number", "euler_poly",
    "family_params", "formal_F", "hankel_det", "hankel_matrix", "jacobi_from_moments", "jfraction_series",
    "make_sequence", "moment_series", "named_family", "orth_poly_det", "orth_poly_rec", "poly_arith",
    "poly_compose", "poly_divide_exact", "psi_asymptotic", "psi_prime_asymptotic", "rational_arith",
    "s_from_shifted", "series_divide", "shifted_hankel_prop62", "trigamma", "validate_identity",
    "verify_euler_from_bernoulli", "verify_jfraction_vs_moments", "verify_orthogonality", "verify_reflection",
]
