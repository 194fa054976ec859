"""Kernels, minimal polynomials and eigenspace decompositions of multiplication operators."""

from ._decomposition import (
    EigenDecomposition,
    JointDecomposition,
    Side,
    eigen_decompose,
    joint_decompose,
    kernel,
    multiplication_operator,
)
from ._polynomial import Polynomial, min_poly
from ._roots import candidate_eigenvalues, split_roots

__all__ = [
    "EigenDecomposition",
    "JointDecomposition",
    "Polynomial",
    "Side",
    "candidate_eigenvalues",
    "eigen_decompose",
    "joint_decompose",
    "kernel",
    "min_poly",
    "multiplication_operator",
    "split_roots",
]
