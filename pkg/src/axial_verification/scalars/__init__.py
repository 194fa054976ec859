"""Exact scalars over Q, GF(p) and Q(t), with their text form."""

from ._domain import ScalarDomain, ScalarKind, characteristic
from ._globals import PARAMETER_SYMBOL
from ._parsing import canonical_fraction, parse_scalar, print_scalar, substitute
from ._scalar import Scalar, scalar_arith

__all__ = [
    "PARAMETER_SYMBOL",
    "Scalar",
    "ScalarDomain",
    "ScalarKind",
    "canonical_fraction",
    "characteristic",
    "parse_scalar",
    "print_scalar",
    "scalar_arith",
    "substitute",
]
