"""Gorenstein liaison certificates for monomial and homogeneous ideals."""

from .algebra import (
    Variable,
    Monomial,
    Polynomial,
    Lex,
    GrevLex,
    ProductOrder,
    InducedOrder,
    y_first_order,
    deg_y,
    in_y,
    depol,
)
from .ideals import MonomialIdeal, KPolynomial, polarize, depolarize

__all__ = [
    "Variable",
    "Monomial",
    "Polynomial",
    "Lex",
    "GrevLex",
    "ProductOrder",
    "InducedOrder",
    "y_first_order",
    "deg_y",
    "in_y",
    "depol",
    "MonomialIdeal",
    "KPolynomial",
    "polarize",
    "depolarize",
]
