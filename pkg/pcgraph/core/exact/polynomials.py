"""Exact integer polynomials backed by sympy's ZZ domain."""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator
from sympy import Poly, Symbol
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix

from pcgraph.core.graph.engine import LaplacianMatrix

x = Symbol("x")


class IntPolynomial(BaseModel):
    """Polynomial with arbitrary-precision integer coefficients.

    ``coefficients[k]`` is the coefficient of x**k. Trailing zeros are
    stripped so the leading coefficient is nonzero; the zero polynomial has
    no coefficients.
    """

    model_config = ConfigDict(frozen=True)

    coefficients: tuple[int, ...]

    @field_validator("coefficients", mode="before")
    @classmethod
    def _strip(cls, value: Any) -> tuple[int, ...]:
        coeffs = [int(c) for c in value]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return tuple(coeffs)

    @classmethod
    def from_high_to_low(cls, coeffs: Sequence[Any]) -> "IntPolynomial":
        return cls(coefficients=[int(c) for c in reversed(list(coeffs))])

    @classmethod
    def from_sympy(cls, poly: Poly) -> "IntPolynomial":
        return cls.from_high_to_low(poly.all_coeffs() if not poly.is_zero else [])

    def to_sympy(self) -> Poly:
        if self.is_zero:
            return Poly(0, x, domain=ZZ)
        return Poly.from_list([ZZ(c) for c in reversed(self.coefficients)], x, domain=ZZ)

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    @property
    def leading_coefficient(self) -> int:
        return self.coefficients[-1] if self.coefficients else 0

    def evaluate(self, value: int | Fraction) -> int | Fraction:
        result: int | Fraction = 0
        for coeff in reversed(self.coefficients):
            result = result * value + coeff
        return result

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(coefficients=[k * c for k, c in enumerate(self.coefficients)][1:])

    def gcd(self, other: "IntPolynomial") -> "IntPolynomial":
        """Greatest common divisor over the integers, with positive leading coefficient."""
        result = IntPolynomial.from_sympy(self.to_sympy().gcd(other.to_sympy()))
        if result.leading_coefficient < 0:
            result = IntPolynomial(coefficients=[-c for c in result.coefficients])
        return result

    def rational_root(self) -> Fraction | None:
        """The root of a degree-1 polynomial, else None."""
        if self.degree != 1:
            return None
        return Fraction(-self.coefficients[0], self.coefficients[1])

    def __str__(self) -> str:
        return str(self.to_sympy().as_expr())


def char_poly(L: LaplacianMatrix | np.ndarray) -> IntPolynomial:
    """det(xI - L) computed exactly over the integers.

    Accepts a Laplacian or any square integer array, so principal
    submatrices can be passed directly. An empty matrix yields 1.
    """
    arr = L.to_numpy() if isinstance(L, LaplacianMatrix) else np.asarray(L)
    n = arr.shape[0]
    if n == 0:
        return IntPolynomial(coefficients=[1])
    rows = [[ZZ(int(v)) for v in row] for row in arr]
    matrix = DomainMatrix(rows, (n, n), ZZ)
    return IntPolynomial.from_high_to_low(matrix.charpoly())


def is_squarefree(p: IntPolynomial) -> bool:
    """True iff gcd(p, p') is a constant.

    Raises:
        ValueError: For the zero polynomial.
    """
    if p.is_zero:
        raise ValueError("the zero polynomial has no squarefree decomposition")
    return p.gcd(p.derivative()).degree == 0


def repeated_factor(p: IntPolynomial) -> IntPolynomial:
    """gcd(p, p'): the product of repeated factors, one multiplicity lower."""
    return p.gcd(p.derivative())
