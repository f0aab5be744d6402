"""Exact linear algebra over cyclotomic-rational scalars."""

from hopfgalois.linalg.scalar import ONE, ZERO, Scalar
from hopfgalois.linalg.matrix import Mat, Vector, kron, swap
from hopfgalois.linalg.subspace import Subspace
from hopfgalois.linalg.elimination import (
    Quotient,
    RowReduction,
    kernel,
    quotient,
    rank,
    row_reduce,
    solve,
    solve_many,
    solve_sparse,
)

__all__ = [
    "ONE",
    "ZERO",
    "Mat",
    "Quotient",
    "RowReduction",
    "Scalar",
    "Subspace",
    "Vector",
    "kernel",
    "kron",
    "quotient",
    "rank",
    "row_reduce",
    "solve",
    "solve_many",
    "solve_sparse",
    "swap",
]
