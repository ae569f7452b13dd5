"""Exact arithmetic and polynomial algebra substrate.

Re-exports the working set: rationals/matrices, univariate polynomials with
resultants and squarefree machinery, ternary homogeneous forms with
projective substitution, bivariate germs, and the elimination layer
(Macaulay resultants, good-position intersections, singular-locus search).
"""

from .rationals import (
    Mat3,
    bareiss_det_int,
    clear_denominators,
    det_fractions,
    mat3,
    mat3_det,
    mat3_identity,
    mat3_inv,
    mat3_mul,
    mat3_transpose,
    mat3_vec,
    nullspace,
    rank,
    rational_from_string,
    rational_to_string,
)
from .unipoly import (
    UnivariatePoly,
    discriminant,
    factor_over_q,
    interpolate,
    poly_gcd,
    rational_roots,
    resultant,
    squarefree_part,
    yun_decomposition,
)
from .forms import HomogeneousForm, ProjectivePoint, euler_combination
from .bipoly import BivariatePoly, resultant_y
from .elim import (
    FiberData,
    IntersectionData,
    form_factorization,
    is_irreducible_form,
    is_reduced_form,
    is_smooth_form,
    macaulay_resultant_quadrics,
    plane_intersection,
    rational_singular_points,
    ternary_discriminant,
    unimodular_matrices,
)

__all__ = [
    "Mat3",
    "bareiss_det_int",
    "clear_denominators",
    "det_fractions",
    "mat3",
    "mat3_det",
    "mat3_identity",
    "mat3_inv",
    "mat3_mul",
    "mat3_transpose",
    "mat3_vec",
    "nullspace",
    "rank",
    "rational_from_string",
    "rational_to_string",
    "UnivariatePoly",
    "discriminant",
    "factor_over_q",
    "interpolate",
    "poly_gcd",
    "rational_roots",
    "resultant",
    "squarefree_part",
    "yun_decomposition",
    "HomogeneousForm",
    "ProjectivePoint",
    "euler_combination",
    "BivariatePoly",
    "resultant_y",
    "FiberData",
    "IntersectionData",
    "form_factorization",
    "is_irreducible_form",
    "is_reduced_form",
    "is_smooth_form",
    "macaulay_resultant_quadrics",
    "plane_intersection",
    "rational_singular_points",
    "ternary_discriminant",
    "unimodular_matrices",
]
