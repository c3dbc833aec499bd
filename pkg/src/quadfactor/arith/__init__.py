"""Exact scalar and polynomial arithmetic."""

from .algorithms import (
    divides,
    poly_divrem,
    poly_gcd,
    rational_roots,
    resultant_q,
    squarefree_decomposition,
    squarefree_part,
)
from .bipoly import BiPoly
from .rational import Rational, format_rational, height, parse_rational, to_rational
from .unipoly import UniPoly, deg_lt, parse_poly

__all__ = [
    "BiPoly",
    "Rational",
    "UniPoly",
    "deg_lt",
    "divides",
    "format_rational",
    "height",
    "parse_poly",
    "parse_rational",
    "poly_divrem",
    "poly_gcd",
    "rational_roots",
    "resultant_q",
    "squarefree_decomposition",
    "squarefree_part",
    "to_rational",
]
