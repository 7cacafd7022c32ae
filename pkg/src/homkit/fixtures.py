"""Worked two-dimensional examples used across the test suite and demos.

All three share the twist alpha(e1) = -e1, alpha(e2) = e1 + e2 (an
involution).  The associative table is e1.e2 = e2.e1 = -e1 and
e2.e2 = e1 + e2; the Leibniz table is [e1,e2] = -[e2,e1] = e1; the
Poisson example carries both over the same twist.

Two of these are deliberately imperfect and the checkers document that:
the associative example fails multiplicativity at (e2, e2), and the
combined example fails the Poisson compatibility at (e2, e2, e1).  They
are kept exactly as stated; the workbench audits rather than repairs.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import ASSOCIATIVE, LEIBNIZ, POISSON, HomAlgebra, StructureTensor
from .linalg import Matrix, frac

TWIST = Matrix([[-1, 1], [0, 1]])

_DOT = {
    (0, 1): [-1, 0],
    (1, 0): [-1, 0],
    (1, 1): [1, 1],
}

_BRACKET = {
    (0, 1): [1, 0],
    (1, 0): [-1, 0],
}


def two_dim_associative() -> HomAlgebra:
    return HomAlgebra(2, ASSOCIATIVE, TWIST,
                      dot=StructureTensor.from_products(2, _DOT))


def two_dim_leibniz() -> HomAlgebra:
    return HomAlgebra(2, LEIBNIZ, TWIST,
                      bracket=StructureTensor.from_products(2, _BRACKET))


def two_dim_poisson() -> HomAlgebra:
    return HomAlgebra(2, POISSON, TWIST,
                      dot=StructureTensor.from_products(2, _DOT),
                      bracket=StructureTensor.from_products(2, _BRACKET))


def leibniz_rbo(a12) -> Matrix:
    """The one-parameter family of relative Rota-Baxter operators on the
    Leibniz example with its regular representation:
    T e1 = 0, T e2 = a12 e1 + 2 a12 e2."""
    a = frac(a12)
    return Matrix([[Fraction(0), a], [Fraction(0), 2 * a]])
