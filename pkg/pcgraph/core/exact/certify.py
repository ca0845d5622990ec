"""Exact certification of perfect controllability.

Condition (a): the characteristic polynomial of L is squarefree, so every
eigenvalue is simple.

Condition (b): for each node j, char_poly(L) and char_poly(L minus row and
column j) share no root. For a simple eigenvalue λ with unit eigenvector v,
v_j**2 = char_poly(L_-j)(λ) / char_poly(L)'(λ), so a shared root is exactly
a zero eigenvector entry. Condition (a) gates condition (b).
"""

from __future__ import annotations

import logging

from pydantic import BaseModel, ConfigDict

from pcgraph.core.exact.polynomials import IntPolynomial, char_poly, repeated_factor
from pcgraph.core.graph.engine import Graph

logger = logging.getLogger(__name__)


class NodeCheck(BaseModel):
    model_config = ConfigDict(frozen=True)

    node: int
    minor_poly: IntPolynomial
    shared_factor: IntPolynomial

    @property
    def ok(self) -> bool:
        return self.shared_factor.degree == 0


class ExactCertificate(BaseModel):
    """Outcome of the exact test together with the polynomials that justify it."""

    model_config = ConfigDict(frozen=True)

    n: int
    char_poly: IntPolynomial
    repeated_factor: IntPolynomial
    node_checks: tuple[NodeCheck, ...] = ()

    @property
    def squarefree(self) -> bool:
        return self.repeated_factor.degree == 0

    @property
    def perfect(self) -> bool:
        return self.squarefree and len(self.node_checks) == self.n and all(c.ok for c in self.node_checks)

    def __bool__(self) -> bool:
        return self.perfect

    @property
    def failing_node(self) -> NodeCheck | None:
        return next((c for c in self.node_checks if not c.ok), None)

    def witness(self) -> str | None:
        """One-line witness for a failed certificate."""
        if not self.squarefree:
            root = self.repeated_factor.rational_root()
            suffix = f" (eigenvalue {root})" if root is not None else ""
            return f"repeated factor {self.repeated_factor}{suffix}"
        failing = self.failing_node
        if failing is None:
            return None
        root = failing.shared_factor.rational_root()
        if root is not None:
            return f"eigenvalue {root}, node {failing.node}"
        return f"node {failing.node}, shared factor {failing.shared_factor}"

    def render(self) -> str:
        lines = [f"char_poly: {self.char_poly}"]
        if self.squarefree:
            lines.append("condition (a) distinct eigenvalues: ok")
        else:
            lines.append(f"condition (a) distinct eigenvalues: FAILED (repeated factor: {self.repeated_factor})")
        for check in self.node_checks:
            if check.ok:
                lines.append(f"condition (b) node {check.node}: ok")
            else:
                lines.append(f"condition (b) node {check.node}: FAILED (shared factor: {check.shared_factor})")
        lines.append(f"exact verdict: {'perfect' if self.perfect else 'not-perfect'}")
        witness = self.witness()
        if witness:
            lines.append(f"witness: {witness}")
        return "\n".join(lines)


def check_perfect_exact(graph: Graph, exhaustive: bool = True) -> ExactCertificate:
    """Decide perfect controllability in exact integer arithmetic.

    Args:
        graph: Graph to certify.
        exhaustive: Record condition (b) for every node. When False the
            check stops at the first failing node, which is what the
            enumeration loops want.

    Returns:
        ExactCertificate; ``certificate.perfect`` is the verdict.
    """
    L = graph.laplacian()
    p = char_poly(L)
    rep = repeated_factor(p)
    checks: list[NodeCheck] = []
    if rep.degree == 0:
        for node in graph.nodes:
            minor = char_poly(L.principal_submatrix(node))
            check = NodeCheck(node=node, minor_poly=minor, shared_factor=p.gcd(minor))
            checks.append(check)
            if not check.ok and not exhaustive:
                break
    else:
        logger.debug("Characteristic polynomial has repeated factor %s", rep)
    return ExactCertificate(n=graph.n, char_poly=p, repeated_factor=rep, node_checks=tuple(checks))


def is_perfect_exact(graph: Graph) -> bool:
    return check_perfect_exact(graph, exhaustive=False).perfect
