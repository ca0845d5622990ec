"""Exact integer certification."""

from pcgraph.core.exact.certify import (
    ExactCertificate,
    NodeCheck,
    check_perfect_exact,
    is_perfect_exact,
)
from pcgraph.core.exact.polynomials import IntPolynomial, char_poly, is_squarefree, repeated_factor

__all__ = [
    "ExactCertificate",
    "IntPolynomial",
    "NodeCheck",
    "char_poly",
    "check_perfect_exact",
    "is_perfect_exact",
    "is_squarefree",
    "repeated_factor",
]
