"""qgb: exact Groebner bases over quotient coefficient rings.

Computes bases, normal forms, and ideal operations in polynomial rings
whose coefficients live in Z_m, K[y..]/I, Z[theta], or Galois rings, by
lifting every computation to a polynomial ring over Z or a field,
completing there, and projecting back.
"""

from qgb._kernels import BACKEND as kernel_backend
from qgb.domains import GF, QQ, ZZ, ext_gcd, solve_membership, syzygy_generators
from qgb.engine import (Caps, ResourceLimitExceeded, TrackedBasis,
                        buchberger_field, g_polynomial, gb_with_syzygies,
                        interreduce, s_polynomial, strong_gb_integer,
                        verify_groebner, verify_strong)
from qgb.ideal_ops import (AlgebraMap, SyzygyBasis, eliminate, ideal_quotient,
                           intersect, kernel, leading_coeff_ideal, syzygies)
from qgb.poly import (MonomialOrder, Polynomial, PolyRing, VariableSet,
                      compare, leading_data, leading_data_x)
from qgb.reduction import (DivisionOutcome, canonical_normal_form, divide,
                           reduce_step, strong_reduce)
from qgb.tower import (PullbackGB, QuotientPoly, RingTower, algebraic_tower,
                       gb_galois, gb_quotient, minimal_poly_to_primitive,
                       real_representation)

__version__ = "0.1.0"

__all__ = [
    "GF", "QQ", "ZZ", "ext_gcd", "solve_membership", "syzygy_generators",
    "Caps", "ResourceLimitExceeded", "TrackedBasis", "buchberger_field",
    "g_polynomial", "gb_with_syzygies", "interreduce", "s_polynomial",
    "strong_gb_integer", "verify_groebner", "verify_strong",
    "AlgebraMap", "SyzygyBasis", "eliminate", "ideal_quotient", "intersect",
    "kernel", "leading_coeff_ideal", "syzygies",
    "MonomialOrder", "Polynomial", "PolyRing", "VariableSet", "compare",
    "leading_data", "leading_data_x",
    "DivisionOutcome", "canonical_normal_form", "divide", "reduce_step",
    "strong_reduce",
    "PullbackGB", "QuotientPoly", "RingTower", "algebraic_tower", "gb_galois",
    "gb_quotient", "minimal_poly_to_primitive", "real_representation",
    "kernel_backend",
]
