"""Structure-constant algebras, their elements, operators and subspaces."""

from ._algebra import Algebra, build_algebra, left_op, multiply, right_op, specialize_algebra
from ._element import Element
from ._identities import center, is_commutative, is_flexible, subalgebra_closure
from ._operator import Operator
from ._subspace import Subspace, decompose_direct_sum

__all__ = [
    "Algebra",
    "Element",
    "Operator",
    "Subspace",
    "build_algebra",
    "center",
    "decompose_direct_sum",
    "is_commutative",
    "is_flexible",
    "left_op",
    "multiply",
    "right_op",
    "specialize_algebra",
    "subalgebra_closure",
]
