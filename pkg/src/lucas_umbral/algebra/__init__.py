"""
Exact arithmetic in characteristic p.

This subpackage provides finite fields, polynomials in one and two variables,
fractions over `A = F_q[th]`, q-adic digits with Lucas binomials, affine
linear solving and the text grammar shared by every file format.
"""

from lucas_umbral.algebra.bipoly import BiPoly, BiPolyRing, substitute_sum
from lucas_umbral.algebra.digits import (
    binom_mod_p,
    digit_sum,
    digits,
    from_digits,
    is_power_of,
    lucas,
)
from lucas_umbral.algebra.field import FieldCtx, FieldElem, field, field_of_order
from lucas_umbral.algebra.frac import Frac, FracField
from lucas_umbral.algebra.linalg import AffineSolution, solve_affine_system
from lucas_umbral.algebra.parse import ParseError, parse_element, ring_from_tag
from lucas_umbral.algebra.poly import Poly, PolyRing, is_additive, is_q_linear, poly_gcd
from lucas_umbral.algebra.ring import NEG_INF, Element, Ring

__all__ = [
    "NEG_INF",
    "AffineSolution",
    "BiPoly",
    "BiPolyRing",
    "Element",
    "FieldCtx",
    "FieldElem",
    "Frac",
    "FracField",
    "ParseError",
    "Poly",
    "PolyRing",
    "Ring",
    "binom_mod_p",
    "digit_sum",
    "digits",
    "field",
    "field_of_order",
    "from_digits",
    "is_additive",
    "is_power_of",
    "is_q_linear",
    "lucas",
    "parse_element",
    "poly_gcd",
    "ring_from_tag",
    "solve_affine_system",
    "substitute_sum",
]
