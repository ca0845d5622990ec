"""Unit tests for exact characteristic polynomials and certificates."""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings

from pcgraph.core.exact import (
    IntPolynomial,
    char_poly,
    check_perfect_exact,
    is_perfect_exact,
    is_squarefree,
    repeated_factor,
)
from pcgraph.core.graph import Graph
from pcgraph.core.spectral import check_perfect_numeric
from tests.utils.strategies import graphs, graphs_with_permutation


class TestIntPolynomial:
    """Tests for the integer polynomial wrapper."""

    def test_trailing_zeros_are_stripped(self) -> None:
        p = IntPolynomial(coefficients=[1, 2, 0, 0])
        assert p.coefficients == (1, 2)
        assert p.degree == 1

    def test_zero_polynomial(self) -> None:
        zero = IntPolynomial(coefficients=[0])
        assert zero.is_zero
        assert zero.degree == -1
        assert zero.leading_coefficient == 0

    def test_from_high_to_low(self) -> None:
        p = IntPolynomial.from_high_to_low([1, -3, 2])
        assert p.coefficients == (2, -3, 1)
        assert p.evaluate(1) == 0
        assert p.evaluate(2) == 0
        assert p.evaluate(Fraction(1, 2)) == Fraction(3, 4)

    def test_derivative(self) -> None:
        p = IntPolynomial.from_high_to_low([1, 0, -4, 7])
        assert p.derivative() == IntPolynomial.from_high_to_low([3, 0, -4])

    def test_gcd_has_positive_leading_coefficient(self) -> None:
        p = IntPolynomial.from_high_to_low([1, -3, 2])  # (x-1)(x-2)
        q = IntPolynomial.from_high_to_low([-1, 4, -3])  # -(x-1)(x-3)
        assert p.gcd(q) == IntPolynomial.from_high_to_low([1, -1])

    def test_rational_root(self) -> None:
        assert IntPolynomial.from_high_to_low([2, -3]).rational_root() == Fraction(3, 2)
        assert IntPolynomial.from_high_to_low([1, 0, 1]).rational_root() is None

    def test_str_uses_x(self) -> None:
        assert str(IntPolynomial.from_high_to_low([1, -4, 3, 0])) == "x**3 - 4*x**2 + 3*x"

    def test_big_coefficients_survive(self) -> None:
        big = 10**40 + 7
        p = IntPolynomial(coefficients=[big, 1])
        assert p.to_sympy().all_coeffs()[-1] == big


class TestCharPoly:
    """Tests for det(xI - L) over the integers."""

    def test_path_of_three(self, path3: Graph) -> None:
        assert char_poly(path3.laplacian()) == IntPolynomial.from_high_to_low([1, -4, 3, 0])

    def test_triangle(self, triangle: Graph) -> None:
        assert char_poly(triangle.laplacian()) == IntPolynomial.from_high_to_low([1, -6, 9, 0])

    def test_empty_matrix_gives_one(self) -> None:
        assert char_poly(np.zeros((0, 0), dtype=int)) == IntPolynomial(coefficients=[1])

    def test_accepts_principal_submatrix(self, path3: Graph) -> None:
        minor = path3.laplacian().principal_submatrix(2)
        assert char_poly(minor) == IntPolynomial.from_high_to_low([1, -2, 1])

    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_spanning_tree_coefficient(self, n: int) -> None:
        """The linear coefficient is (-1)^(n-1) * n * (number of spanning trees)."""
        path = char_poly(Graph.path(n).laplacian())
        complete = char_poly(Graph.complete(n).laplacian())
        sign = (-1) ** (n - 1)
        assert path.coefficients[1] == sign * n
        assert complete.coefficients[1] == sign * n ** (n - 1)

    @settings(max_examples=60, deadline=None, derandomize=True)
    @given(graphs(max_nodes=7))
    def test_coefficient_identities(self, graph: Graph) -> None:
        """Monic, zero constant term, and x^(n-1) coefficient equal to -2|E|."""
        p = char_poly(graph.laplacian())
        assert p.degree == graph.n
        assert p.leading_coefficient == 1
        assert p.evaluate(0) == 0
        assert p.coefficients[graph.n - 1] == -2 * graph.num_edges

    @settings(max_examples=60, deadline=None, derandomize=True)
    @given(graphs(max_nodes=8))
    def test_coefficient_signs_alternate(self, graph: Graph) -> None:
        """The coefficient of x^k is zero or has the sign of (-1)^(n-k)."""
        p = char_poly(graph.laplacian())
        for k, c in enumerate(p.coefficients):
            assert c * (-1) ** (graph.n - k) >= 0


class TestSquarefree:
    """Tests for the squarefree test."""

    def test_simple_roots(self) -> None:
        assert is_squarefree(IntPolynomial.from_high_to_low([1, -4, 3, 0]))

    def test_repeated_root(self) -> None:
        p = IntPolynomial.from_high_to_low([1, -6, 9, 0])
        assert not is_squarefree(p)
        assert repeated_factor(p) == IntPolynomial.from_high_to_low([1, -3])

    def test_constant_is_squarefree(self) -> None:
        assert is_squarefree(IntPolynomial(coefficients=[5]))

    def test_zero_polynomial_rejected(self) -> None:
        with pytest.raises(ValueError):
            is_squarefree(IntPolynomial(coefficients=[]))


class TestExactCertificate:
    """Tests for the exact perfect-controllability certificate."""

    def test_single_edge_is_perfect(self) -> None:
        cert = check_perfect_exact(Graph.path(2))
        assert cert.perfect
        assert bool(cert)
        assert cert.witness() is None
        assert [c.node for c in cert.node_checks] == [1, 2]

    def test_single_node_is_perfect(self) -> None:
        assert is_perfect_exact(Graph.empty(1))

    def test_path_of_three_fails_on_middle_node(self, path3: Graph) -> None:
        cert = check_perfect_exact(path3)
        assert cert.squarefree
        assert not cert.perfect
        assert cert.failing_node is not None
        assert cert.failing_node.node == 2
        assert cert.witness() == "eigenvalue 1, node 2"

    def test_triangle_fails_condition_a(self, triangle: Graph) -> None:
        cert = check_perfect_exact(triangle)
        assert not cert.squarefree
        assert cert.node_checks == ()
        assert cert.witness() == "repeated factor x - 3 (eigenvalue 3)"

    def test_disconnected_graph_repeats_zero(self) -> None:
        cert = check_perfect_exact(Graph.empty(2))
        assert cert.witness() == "repeated factor x (eigenvalue 0)"

    def test_early_exit_stops_at_failure(self, path3: Graph) -> None:
        cert = check_perfect_exact(path3, exhaustive=False)
        assert [c.node for c in cert.node_checks] == [1, 2]

    def test_render(self, path3: Graph) -> None:
        lines = check_perfect_exact(path3).render().splitlines()
        assert lines[0] == "char_poly: x**3 - 4*x**2 + 3*x"
        assert lines[1] == "condition (a) distinct eigenvalues: ok"
        assert lines[2] == "condition (b) node 1: ok"
        assert lines[3] == "condition (b) node 2: FAILED (shared factor: x - 1)"
        assert "exact verdict: not-perfect" in lines
        assert lines[-1] == "witness: eigenvalue 1, node 2"

    def test_render_condition_a_failure(self, triangle: Graph) -> None:
        text = check_perfect_exact(triangle).render()
        assert "condition (a) distinct eigenvalues: FAILED (repeated factor: x - 3)" in text

    @settings(max_examples=80, deadline=None, derandomize=True)
    @given(graphs(max_nodes=8))
    def test_agrees_with_decided_numeric_verdict(self, graph: Graph) -> None:
        numeric = check_perfect_numeric(graph)
        if numeric.decided:
            assert numeric.is_perfect == is_perfect_exact(graph)

    @settings(max_examples=40, deadline=None, derandomize=True)
    @given(graphs(max_nodes=6))
    def test_perfect_implies_connected(self, graph: Graph) -> None:
        if is_perfect_exact(graph):
            assert graph.is_connected()

    @settings(max_examples=40, deadline=None, derandomize=True)
    @given(graphs_with_permutation(max_nodes=7))
    def test_relabeling_keeps_the_verdict(self, case) -> None:
        graph, perm = case
        first = check_perfect_exact(graph)
        second = check_perfect_exact(graph.relabel(perm))
        assert first.perfect == second.perfect
        assert first.char_poly == second.char_poly
