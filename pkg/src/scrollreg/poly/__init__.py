"""Exact multivariate polynomial arithmetic over QQ."""
from .coeffs import QQ, to_qq
from .ops import binary_form_gcd, binary_forms_divide, homogeneous_degree, substitute
from .orders import (GREVLEX, LEX, MonomialOrder, block_order, grevlex, grevlex_last, lex, parse_order,
                     weighted_order)
from .parser import parse_polynomial
from .ring import PolyRing, Polynomial

__all__ = [
    "QQ", "to_qq", "PolyRing", "Polynomial", "MonomialOrder", "GREVLEX", "LEX", "grevlex",
    "grevlex_last", "lex", "block_order", "weighted_order", "parse_order", "parse_polynomial", "substitute",
    "homogeneous_degree", "binary_form_gcd", "binary_forms_divide",
]
