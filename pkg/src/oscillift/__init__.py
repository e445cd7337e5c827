"""oscillift: lifts of orthogonal polynomial families that preserve the
generalized oscillator algebra.

A family P with 2-periodic recurrence tail is lifted to
Q_n = P_n + a1 P_{n-1} + a2 P_{n-2}; the solvers find every (a1, a2) and
lifted head for which Q is again orthogonal with an unchanged gamma
sequence, and the oracle verifies each solution in exact or high-precision
arithmetic.
"""
from .recurrence import (PeriodicRecurrence, JacobiMatrix,
                         OrthonormalCoefficients, DefinitenessError,
                         coefficients_at, eval_monic, coefficient_vector,
                         jacobi_matrix, symmetrize, eval_orthonormal)
from .lift import (StructuralConstants, LiftSolution, Branch, WrongCaseError,
                   structural_constants, admissibility_check, head_data,
                   solve_case_I, solve_case_II, solve_case_III, solve_case_IV,
                   solve_case_V, solve_case_VI, solve_case_VII_VIII,
                   enumerate_solutions, theorem11_classify,
                   exact_offdiagonal_solutions, diagonal_curve_a1,
                   diagonal_curve_solution, slice_polynomial)
from .oracle import (OracleReport, QuadratureRule, VerificationReport,
                     exact_recurrence_oracle, derive_q_recurrence,
                     linear_relation_residual, gauss_quadrature,
                     quadrature_orthogonality, k_general_constraints,
                     variant_count, verify_solution)
from .oscillator import (OscillatorTruncation, build_truncation,
                         verify_algebra_relations, hamiltonian_spectrum,
                         algebras_equal, dimension_check)

__version__ = "0.1.0"

__all__ = [
    "PeriodicRecurrence", "JacobiMatrix", "OrthonormalCoefficients",
    "DefinitenessError", "coefficients_at", "eval_monic", "coefficient_vector",
    "jacobi_matrix", "symmetrize", "eval_orthonormal",
    "StructuralConstants", "LiftSolution", "Branch", "WrongCaseError",
    "structural_constants", "admissibility_check", "head_data",
    "solve_case_I", "solve_case_II", "solve_case_III", "solve_case_IV",
    "solve_case_V", "solve_case_VI", "solve_case_VII_VIII",
    "enumerate_solutions", "theorem11_classify",
    "exact_offdiagonal_solutions", "diagonal_curve_a1",
    "diagonal_curve_solution", "slice_polynomial",
    "OracleReport", "QuadratureRule", "VerificationReport",
    "exact_recurrence_oracle", "derive_q_recurrence",
    "linear_relation_residual", "gauss_quadrature",
    "quadrature_orthogonality", "k_general_constraints", "variant_count",
    "verify_solution",
    "OscillatorTruncation", "build_truncation", "verify_algebra_relations",
    "hamiltonian_spectrum", "algebras_equal", "dimension_check",
    "__version__",
]
