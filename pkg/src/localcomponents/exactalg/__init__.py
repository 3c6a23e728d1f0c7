"""Exact arithmetic: rationals, polynomials, number fields, dense linear algebra."""

from .factor import (cyclotomic_polynomial, factor_rational_poly, is_irreducible,
                     squarefree_decomposition)
from .linalg import (Matrix, echelon_basis, intersect_subspaces, kernel,
                     min_poly_of_matrix, solve_intertwiners, subspace_contains)
from .numberfield import (NFElement, NumberField, QQ, RationalField, adjoin_root,
                          as_rational, embed_element, field_of, minimal_polynomial,
                          multiplicative_order, roots_in_field)
from .poly import UniPoly

__all__ = [
    "cyclotomic_polynomial", "factor_rational_poly", "is_irreducible",
    "squarefree_decomposition",
    "Matrix", "echelon_basis", "intersect_subspaces", "kernel",
    "min_poly_of_matrix", "solve_intertwiners", "subspace_contains",
    "NFElement", "NumberField", "QQ", "RationalField", "adjoin_root",
    "as_rational", "embed_element", "field_of", "minimal_polynomial",
    "multiplicative_order", "roots_in_field",
    "UniPoly",
]
