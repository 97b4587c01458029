"""Exact tableau and pattern combinatorics for types A, B and C.

Bender-Knuth involutions on Gelfand-Tsetlin, King and orthogonal patterns,
Schur / symplectic / orthogonal polynomials as exact Laurent polynomials, and
independent oracles (Weyl alternants, detropicalized maps) to check them.
"""
from .benderknuth import (
    bk_a_pattern, bk_a_tableau, bk_b, bk_b_tableau, bk_c_pattern, bk_c_tableau,
    bk_c_tableau_trace, bk_c_trace, bk_first_pattern, rect_pattern,
)
from .bijections import (
    pattern_to_tableau, sop_forget, sop_mark, sot_corestrict, sot_extend, tableau_to_pattern,
)
from .combinatorics import (
    INF, SIGNED, SIGNED_INF, TYPE_A, GTPattern, OrthogonalPattern, Tableau, is_king_symplectic,
    is_semistandard, is_sundaram_orthogonal, letter, shape_of_orthogonal, validate_gt,
    validate_king, validate_orthogonal, weight_pattern_a, weight_pattern_bc, weight_tableau,
)
from .enumeration import enum_gt, enum_king, enum_orthogonal, orthogonal, schur, symplectic
from .laurent import (
    LaurentPolynomial, SignedPermutation, basis_expand, is_w_invariant, poly_add, poly_divexact,
    poly_mul, weyl_act,
)
from .oracles import RationalPattern, character_b, character_c, detrop_bk_a, detrop_bk_c

__version__ = "0.1.0"
