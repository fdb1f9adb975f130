"""Small associative algebras used as test fixtures and CLI samples.

Associative algebras satisfy the q-flexible identity for every q, since
both sides of ``(x, y, z) = q (z, y, x)`` vanish.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import AlgebraSpec


def unit_line(q=0) -> AlgebraSpec:
    """One dimension, ``e0 e0 = e0``."""
    return AlgebraSpec.from_products(1, q, {(0, 0): {0: 1}})


def dual_numbers(q=0) -> AlgebraSpec:
    """``K[t]/(t^2)`` with basis ``u, t`` (u the unit)."""
    return AlgebraSpec.from_products(2, q, {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}}, ("u", "t"))


def null_square(q=0) -> AlgebraSpec:
    """Two dimensions, ``e0 e0 = e1`` and all other products zero."""
    return AlgebraSpec.from_products(2, q, {(0, 0): {1: 1}})


def diagonal_pair(q=0) -> AlgebraSpec:
    """``K x K`` with orthogonal idempotents."""
    return AlgebraSpec.from_products(2, q, {(0, 0): {0: 1}, (1, 1): {1: 1}}, ("p", "p'"))


def upper_triangular(q=0) -> AlgebraSpec:
    """Upper triangular 2x2 matrices on ``E11, E12, E22``."""
    return AlgebraSpec.from_products(3, q, {
        (0, 0): {0: 1}, (0, 1): {1: 1}, (1, 2): {1: 1}, (2, 2): {2: 1},
    }, ("E11", "E12", "E22"))


def matrix_algebra(q=0) -> AlgebraSpec:
    """All 2x2 matrices on ``E11, E12, E21, E22``."""
    units = [(0, 0), (0, 1), (1, 0), (1, 1)]
    products = {}
    for a, (i, j) in enumerate(units):
        for b, (k, l) in enumerate(units):
            if j == k:
                products[(a, b)] = {units.index((i, l)): 1}
    return AlgebraSpec.from_products(4, q, products, ("E11", "E12", "E21", "E22"))


def cyclic_group_algebra(q=0, n: int = 3) -> AlgebraSpec:
    """Group algebra of Z/n with basis ``g0, ..., g{n-1}``."""
    products = {(i, j): {(i + j) % n: 1} for i in range(n) for j in range(n)}
    return AlgebraSpec.from_products(n, q, products, tuple(f"g{i}" for i in range(n)))


ASSOCIATIVE_FIXTURES = {
    "unit-line": unit_line,
    "dual-numbers": dual_numbers,
    "null-square": null_square,
    "diagonal-pair": diagonal_pair,
    "upper-triangular": upper_triangular,
    "matrix-2x2": matrix_algebra,
    "cyclic-3": cyclic_group_algebra,
}

FIXTURE_QS = (Fraction(-1), Fraction(0), Fraction(1), Fraction(2), Fraction(1, 2))


def associative_corpus():
    """Every fixture at every q in :data:`FIXTURE_QS`, as ``(label, algebra)`` pairs."""
    return [(f"{name}@q={q}", make(q)) for name, make in ASSOCIATIVE_FIXTURES.items() for q in FIXTURE_QS]
