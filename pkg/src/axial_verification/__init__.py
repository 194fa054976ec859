"""
Axial verification
==================

Exact verification of the axis axioms, eigenspace decompositions and the classification of algebras generated
by two axes of Jordan type, over the rationals, prime fields and rational functions in one parameter.
"""

from . import utils
from ._algebra_file import (
    AlgebraDefinition,
    algebra_from_dict,
    algebra_to_dict,
    dump_algebra,
    read_algebra_file,
    write_algebra_file,
)
from ._command_line_interface._cli import axialverification_cli
from ._exceptions import (
    Char3Warning,
    CharTwoUnsupported,
    DimExceedsThree,
    DivisionByZero,
    DomainMismatch,
    EnumerationTooLarge,
    InfiniteField,
    NonCommutingOps,
    NotAnAxis,
    NotCommutativeCase,
    NotGeneratedByGivenAxes,
    NotJordanAxis,
    NotTwoDim,
    ParamOutOfRange,
    ParseError,
    ShapeError,
    TypeParamInvalid,
)

__all__ = [
    # Public methods
    "AlgebraDefinition",
    "algebra_from_dict",
    "algebra_to_dict",
    "axialverification_cli",
    "dump_algebra",
    "read_algebra_file",
    "write_algebra_file",
    # Exceptions and warnings
    "Char3Warning",
    "CharTwoUnsupported",
    "DimExceedsThree",
    "DivisionByZero",
    "DomainMismatch",
    "EnumerationTooLarge",
    "InfiniteField",
    "NonCommutingOps",
    "NotAnAxis",
    "NotCommutativeCase",
    "NotGeneratedByGivenAxes",
    "NotJordanAxis",
    "NotTwoDim",
    "ParamOutOfRange",
    "ParseError",
    "ShapeError",
    "TypeParamInvalid",
    # Public submodules
    "algebra",
    "axes",
    "catalog",
    "classify",
    "config",
    "idempotents",
    "scalars",
    "spectral",
    "testing",
    "utils",
]

# Trigger import of hidden submodule elements (only need to import one item to trigger the rest)
from ._hidden_top_level_imports import _hide
