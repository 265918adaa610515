"""Exact symbolic algebra of conjugation-invariant trace polynomials."""

from .indexsets import (
    Monomial,
    ONE,
    degree_vector,
    index_product,
    is_strict,
    lex_less,
    monomials_below,
    monomials_of_degree,
    pair_intersection,
    pair_union,
    pair_xor,
    flatten_pairs,
    split_pairs,
)
from .poly import (
    TracePoly,
    format_poly,
    pair_generator,
    parse_poly,
    triple_generator,
)
from .adapted import (
    adapted_form,
    basis_element_expansion,
    clear_caches,
    expand_adapted,
    ideal_member,
    ideal_part,
    is_complement_key,
    product_decompose,
    x_part,
)
from .radical import (
    RadicalReport,
    binomial_identity_check,
    class_sums,
    degree_class,
    radical_spot_check,
    rational_nullspace,
    top_product_coefficients,
)

__all__ = [
    "Monomial",
    "ONE",
    "TracePoly",
    "RadicalReport",
    "adapted_form",
    "basis_element_expansion",
    "binomial_identity_check",
    "class_sums",
    "clear_caches",
    "degree_class",
    "degree_vector",
    "expand_adapted",
    "flatten_pairs",
    "format_poly",
    "ideal_member",
    "ideal_part",
    "index_product",
    "is_complement_key",
    "is_strict",
    "lex_less",
    "monomials_below",
    "monomials_of_degree",
    "pair_generator",
    "pair_intersection",
    "pair_union",
    "pair_xor",
    "parse_poly",
    "product_decompose",
    "radical_spot_check",
    "rational_nullspace",
    "split_pairs",
    "top_product_coefficients",
    "triple_generator",
    "x_part",
]
