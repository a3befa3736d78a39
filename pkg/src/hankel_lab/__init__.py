"""Exact Hankel determinant identities for orthogonal polynomial moments.

Construct symmetric orthogonal polynomial sequences over integers, rationals,
and rational functions in q or u; compute their moment sequences; evaluate
Hankel determinants (plain and polynomial-entry) by fraction-free
elimination; and mechanically verify a catalog of closed-form determinant
identities.
"""

from .hankel import (Matrix, RBuilder, d0_product, det_bareiss, det_cofactor,
                     hankel_matrix, hankel_poly_det, inverse_first_column,
                     matmul, matrix_inverse, matvec, r_poly)
from .identities import (REGISTRY, Check, CheckReport, CheckResult,
                         check_aeration, check_cor1, check_cor2, check_cor3,
                         check_cor4, check_cor5, check_cor6,
                         check_corollaries, check_fibonacci_consequences,
                         check_hermite_lin, check_lemma, check_motzkin_lin,
                         check_motzkin_section, check_schroder_lin,
                         check_theorem1, check_theorem2, run_check,
                         verify_d0_product_certified)
from .moments import (MomentSeq, aerate, andrews_q_catalan,
                      andrews_q_catalan_seq, apply_functional,
                      apply_general_functional, carlitz_q_catalan,
                      catalan_formula, central_binomial_formula,
                      double_factorial_moments, general_moments,
                      motzkin_formula, motzkin_recurrence, motzkin_t,
                      motzkin_u, named_sequence, q_central_binomial_moments,
                      q_central_binomial_seq, schroder_large_formula,
                      schroder_little_formula, sym_moments)
from .opseq import (GeneralRecurrence, SymRecurrence, VTable,
                    andrews_q_recurrence, carlitz_q_recurrence,
                    catalan_recurrence, central_binomial_recurrence,
                    fibonacci_poly, general_polys, hermite_poly,
                    hermite_recurrence, lucas_poly, q_central_binomial_recurrence,
                    q_fibonacci, q_fibonacci_closed, q_lucas, q_lucas_closed,
                    qb_fibonacci, qb_fibonacci_closed, schroder_large_recurrence,
                    schroder_little_recurrence, schroder_q_recurrence,
                    schroder_sym_polys, shift_t, sym_polys, sym_to_general,
                    v_table)
from .ring import (QQ, QQ_Q, QQ_U, ZZ, Domain, InexactDivisionError, Poly,
                   RatFunc, binom, exact_div, poly_gcd, poly_lcm, q_binomial,
                   q_int, specialize_param)

__version__ = "0.1.0"
