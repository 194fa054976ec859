import dataclasses
import enum

from ._polynomial import Polynomial, min_poly
from ._roots import candidate_eigenvalues, split_roots
from .._exceptions import NonCommutingOps
from ..algebra import Algebra, Element, Operator, Subspace, left_op, right_op
from ..scalars import Scalar, ScalarDomain, ScalarKind


class Side(enum.Enum):
    LEFT = "left"
    RIGHT = "right"


def multiplication_operator(algebra: Algebra, element: Element, side: Side) -> Operator:
    match side:
        case Side.LEFT:
            return left_op(algebra, element)
        case Side.RIGHT:
            return right_op(algebra, element)


def kernel(operator: Operator) -> Subspace:
    """The nullspace of an operator, in echelon form."""
    return operator.kernel()


@dataclasses.dataclass(frozen=True, eq=False)
class EigenDecomposition:
    """
    The eigenspaces of one multiplication operator.

    `complete` holds exactly when the minimal polynomial splits over the domain (`split`) and has no
    repeated roots (`semisimple`); the two flags are reported separately instead of raising.
    """

    side: Side
    parts: dict[Scalar, Subspace]
    minimal_polynomial: Polynomial
    split: bool
    semisimple: bool
    domain: ScalarDomain
    ambient_dim: int

    @property
    def complete(self) -> bool:
        return self.split and self.semisimple

    @property
    def eigenvalues(self) -> list[Scalar]:
        return sorted(self.parts, key=lambda value: value.sort_key())

    def part(self, value: Scalar | int) -> Subspace:
        value = value if isinstance(value, Scalar) else self.domain.from_int(value)
        return self.parts.get(value, Subspace.zero(domain=self.domain, ambient_dim=self.ambient_dim))


def eigen_decompose(algebra: Algebra, a: Element, side: Side) -> EigenDecomposition:
    """
    Decompose an algebra into eigenspaces of L_a (side LEFT) or R_a (side RIGHT).

    Parameters
    ----------
    algebra : Algebra
        The ambient algebra.
    a : Element
        The element whose multiplication operator is decomposed.
    side : Side
        Which multiplication operator to use.

    Returns
    -------
    EigenDecomposition
        One full eigenspace per root of the minimal polynomial lying in the domain.
    """
    operator = multiplication_operator(algebra=algebra, element=a, side=side)
    polynomial = min_poly(operator)
    candidates = (
        candidate_eigenvalues(algebra=algebra, operator=operator)
        if algebra.domain.kind is ScalarKind.RATIONAL_FUNCTION
        else None
    )
    roots, cofactor = split_roots(polynomial=polynomial, candidates=candidates)

    parts = {root: kernel(operator.shifted(value=root)) for root in roots}
    return EigenDecomposition(
        side=side,
        parts=parts,
        minimal_polynomial=polynomial,
        split=cofactor.degree == 0,
        semisimple=all(multiplicity == 1 for multiplicity in roots.values()),
        domain=algebra.domain,
        ambient_dim=algebra.dim,
    )


@dataclasses.dataclass(frozen=True, eq=False)
class JointDecomposition:
    """The joint eigenspaces A_{λ,δ}(a) = A_λ(L_a) ∩ A_δ(R_a); only nonzero parts are stored."""

    parts: dict[tuple[Scalar, Scalar], Subspace]
    left: EigenDecomposition
    right: EigenDecomposition
    domain: ScalarDomain
    ambient_dim: int

    @property
    def complete(self) -> bool:
        return sum(subspace.dim for subspace in self.parts.values()) == self.ambient_dim

    def part(self, left_value: Scalar | int, right_value: Scalar | int) -> Subspace:
        key = (self._as_scalar(left_value), self._as_scalar(right_value))
        return self.parts.get(key, Subspace.zero(domain=self.domain, ambient_dim=self.ambient_dim))

    def _as_scalar(self, value: Scalar | int) -> Scalar:
        return value if isinstance(value, Scalar) else self.domain.from_int(value)


def joint_decompose(algebra: Algebra, a: Element) -> JointDecomposition:
    """
    Intersect the left and right eigenspaces of `a`.

    Raises
    ------
    NonCommutingOps
        If L_a and R_a do not commute, in which case `a` cannot be a two-sided axis.
    """
    left_operator = left_op(algebra, a)
    right_operator = right_op(algebra, a)
    if left_operator @ right_operator != right_operator @ left_operator:
        message = f"L_a and R_a do not commute for a = {algebra.format_element(a)}."
        raise NonCommutingOps(message)

    left = eigen_decompose(algebra=algebra, a=a, side=Side.LEFT)
    right = eigen_decompose(algebra=algebra, a=a, side=Side.RIGHT)

    parts = {}
    for left_value in left.eigenvalues:
        for right_value in right.eigenvalues:
            intersection = left.parts[left_value].intersection(right.parts[right_value])
            if not intersection.is_zero:
                parts[(left_value, right_value)] = intersection

    return JointDecomposition(parts=parts, left=left, right=right, domain=algebra.domain, ambient_dim=algebra.dim)
