"""Exact Möbius polynomials of finite (generalized) ranked posets.

The package realizes the polynomial incidence algebra of a poset as
integer-polynomial matrices, computes Möbius polynomials by unitriangular
inversion, and assembles from them the Hilbert series and graded-trace
generating functions of the poset's splitting algebra, together with the
closed forms for chains, Boolean lattices, divisor posets, direct
products, rank rescalings, and factor-shuffling automorphisms.
"""

from .errors import InputError
from .polynomial import IntPolynomial, ONE, Z, ZERO, RationalSeries
from .polymatrix import PolyMatrix, kronecker
from .poset import (
    GENERALIZED,
    RANKED,
    Poset,
    PosetAutomorphism,
    RankAssignment,
    automorphism,
    classify_ranks,
    closure_from_covers,
    find_isomorphism,
    fixed_subposet,
    identity_automorphism,
    infer_ranks,
    is_isomorphic,
    mobius_recursive,
    validate,
)
from .incidence import (
    IncidenceElement,
    delta_matrix,
    incidence_element,
    mobius_matrix,
    mobius_polynomial,
    zeta_matrix,
)
from .constructions import (
    FactorShuffle,
    boolean,
    chain,
    direct_product,
    divisor_poset,
    factor_shuffle,
    factorize,
    product_automorphism,
    product_poset,
    rescale,
    shuffle_automorphism,
    shuffle_fixed_mobius,
)
from .series import graded_trace, hilbert_series, shuffle_trace
from .files import format_poset_text, parse_aut_text, parse_poset_text

__all__ = [
    "InputError",
    "IntPolynomial",
    "ONE",
    "Z",
    "ZERO",
    "RationalSeries",
    "PolyMatrix",
    "kronecker",
    "RANKED",
    "GENERALIZED",
    "Poset",
    "RankAssignment",
    "PosetAutomorphism",
    "automorphism",
    "classify_ranks",
    "closure_from_covers",
    "find_isomorphism",
    "fixed_subposet",
    "identity_automorphism",
    "infer_ranks",
    "is_isomorphic",
    "mobius_recursive",
    "validate",
    "IncidenceElement",
    "delta_matrix",
    "incidence_element",
    "mobius_matrix",
    "mobius_polynomial",
    "zeta_matrix",
    "FactorShuffle",
    "boolean",
    "chain",
    "direct_product",
    "divisor_poset",
    "factor_shuffle",
    "factorize",
    "product_automorphism",
    "product_poset",
    "rescale",
    "shuffle_automorphism",
    "shuffle_fixed_mobius",
    "graded_trace",
    "hilbert_series",
    "shuffle_trace",
    "format_poset_text",
    "parse_aut_text",
    "parse_poset_text",
]
