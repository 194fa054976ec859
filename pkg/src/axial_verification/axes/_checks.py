import dataclasses
import itertools

from ._globals import ANY, ANY_PLACEHOLDER, AnyType
from ._report import AxisReport, AxisType
from .._exceptions import NotAnAxis, TypeParamInvalid
from ..algebra import Algebra, Element, Subspace, left_op, multiply, right_op
from ..scalars import Scalar
from ..spectral import Side, eigen_decompose, joint_decompose, kernel, multiplication_operator

Sign = tuple[int, ...]


def resolve_type(algebra: Algebra, value: AxisType | int) -> Scalar:
    """A concrete scalar for a type, using the placeholder -1 for ANY."""
    if isinstance(value, AnyType):
        return algebra.domain.from_int(ANY_PLACEHOLDER)
    if isinstance(value, int):
        return algebra.domain.from_int(value)
    return value


def _validate_type(value: Scalar, name: str) -> None:
    if value.is_zero or value.is_one:
        message = f"The axis type {name} must not be 0 or 1, but received {value}."
        raise TypeParamInvalid(message)


def respects_grading(algebra: Algebra, graded_parts: dict[Sign, Subspace]) -> bool:
    """
    Check that multiplying graded parts multiplies their signs componentwise.

    Bilinearity makes it enough to test products of basis vectors of the parts.
    """
    for (first_sign, first_part), (second_sign, second_part) in itertools.product(graded_parts.items(), repeat=2):
        target = graded_parts[tuple(left * right for left, right in zip(first_sign, second_sign))]
        for left_vector, right_vector in itertools.product(first_part.basis, second_part.basis):
            if not target.contains(multiply(algebra, left_vector, right_vector)):
                return False
    return True


@dataclasses.dataclass(frozen=True, eq=False)
class SideCheck:
    """The one-sided axioms for L_a or R_a with a fixed nontrivial eigenvalue."""

    is_primitive: bool
    cubic_ok: bool
    grading_ok: bool
    zero_space: Subspace
    one_space: Subspace
    value_space: Subspace
    axis_type: AxisType

    @property
    def passed(self) -> bool:
        return self.is_primitive and self.cubic_ok and self.grading_ok


def check_side(algebra: Algebra, a: Element, value: Scalar, side: Side) -> SideCheck:
    operator = multiplication_operator(algebra=algebra, element=a, side=side)
    line = Subspace.span(domain=algebra.domain, ambient_dim=algebra.dim, vectors=[a])

    zero_space = kernel(operator)
    one_space = kernel(operator.shifted(value=1))
    value_space = kernel(operator.shifted(value=value))
    cubic = operator.shifted(value=value) @ operator.shifted(value=1) @ operator

    plus = zero_space.sum(one_space)
    spans_algebra = plus.dim + value_space.dim == algebra.dim and plus.sum(value_space).dim == algebra.dim
    grading_ok = spans_algebra and respects_grading(algebra=algebra, graded_parts={(1,): plus, (-1,): value_space})

    return SideCheck(
        is_primitive=one_space == line,
        cubic_ok=cubic.is_zero,
        grading_ok=grading_ok,
        zero_space=zero_space,
        one_space=one_space,
        value_space=value_space,
        axis_type=ANY if value_space.is_zero else value,
    )


def joint_part(algebra: Algebra, a: Element, left_value: Scalar | int, right_value: Scalar | int) -> Subspace:
    """A_{μ,ν}(a) = ker(L_a - μ) ∩ ker(R_a - ν) for given values μ, ν."""
    left_space = kernel(left_op(algebra, a).shifted(value=left_value))
    right_space = kernel(right_op(algebra, a).shifted(value=right_value))
    return left_space.intersection(right_space)


def check_left_axis(algebra: Algebra, a: Element, lambda_value: Scalar | int) -> AxisReport:
    """
    Check that `a` is a left axis of type λ.

    The checks are: a² = a; absolute left primitivity A_1(L_a) = Fa; the cubic law
    (L_a - λ)(L_a - 1)L_a = 0; and the ℤ₂-grading with even part A_0 ⊕ A_1 and odd part A_λ.
    A failed axiom is recorded in the report rather than raised.

    Raises
    ------
    TypeParamInvalid
        If λ is 0 or 1.
    NotAnAxis
        If `a` is zero.
    """
    lambda_value = resolve_type(algebra=algebra, value=lambda_value)
    _validate_type(value=lambda_value, name="λ")
    if a.is_zero:
        message = "The zero element is never an axis."
        raise NotAnAxis(message)

    left = check_side(algebra=algebra, a=a, value=lambda_value, side=Side.LEFT)
    return AxisReport(
        is_idempotent=multiply(algebra, a, a) == a,
        is_abs_left_primitive=left.is_primitive,
        cubic_ok=left.cubic_ok,
        z2_grading_ok=left.grading_ok,
        left_type=left.axis_type,
    )


def check_axis(
    algebra: Algebra,
    a: Element,
    lambda_value: Scalar | int,
    delta_value: Scalar | int,
    include_decomposition: bool = True,
) -> AxisReport:
    """
    Check that `a` is an axis of type (λ, δ): a left axis of type λ, a right axis of type δ, and L_a R_a = R_a L_a.

    When the operators commute, the joint eigenspaces must satisfy A_{1,1} = Fa and A_{1,δ} = A_{λ,1} = 0, and
    the ℤ₂×ℤ₂-grading with parts (+,+) = A_{1,1} ⊕ A_{0,0}, (+,-) = A_{0,δ}, (-,+) = A_{λ,0}
    and (-,-) = A_{λ,δ} must multiply signs componentwise.
    The axis is of Jordan type when moreover A_{λ,0} = A_{0,δ} = 0.

    Parameters
    ----------
    algebra : Algebra
        The ambient algebra.
    a : Element
        The candidate axis.
    lambda_value, delta_value : Scalar or int
        The left and right types; neither may be 0 or 1.
    include_decomposition : bool, default: True
        Whether to attach the full joint eigenspace decomposition to the report.

    Returns
    -------
    AxisReport
        Every axiom with its verdict.
    """
    delta_value = resolve_type(algebra=algebra, value=delta_value)
    _validate_type(value=delta_value, name="δ")
    left_report = check_left_axis(algebra=algebra, a=a, lambda_value=lambda_value)
    lambda_value = resolve_type(algebra=algebra, value=lambda_value)

    right = check_side(algebra=algebra, a=a, value=delta_value, side=Side.RIGHT)
    left_operator = left_op(algebra, a)
    right_operator = right_op(algebra, a)
    ops_commute = left_operator @ right_operator == right_operator @ left_operator

    decomposition = None
    z2xz2_grading_ok = False
    jordan_type_ok = False
    if ops_commute:
        if include_decomposition:
            decomposition = joint_decompose(algebra=algebra, a=a)

        left_values = (algebra.domain.one(), algebra.domain.zero(), lambda_value)
        right_values = (algebra.domain.one(), algebra.domain.zero(), delta_value)
        joint = {
            (left_value, right_value): joint_part(algebra=algebra, a=a, left_value=left_value, right_value=right_value)
            for left_value, right_value in itertools.product(left_values, right_values)
        }
        one, zero = algebra.domain.one(), algebra.domain.zero()
        line = Subspace.span(domain=algebra.domain, ambient_dim=algebra.dim, vectors=[a])

        structure_ok = (
            joint[(one, one)] == line
            and joint[(one, delta_value)].is_zero
            and joint[(lambda_value, one)].is_zero
            and sum(part.dim for part in joint.values()) == algebra.dim
        )
        graded_parts = {
            (1, 1): joint[(one, one)].sum(joint[(zero, zero)]),
            (1, -1): joint[(zero, delta_value)],
            (-1, 1): joint[(lambda_value, zero)],
            (-1, -1): joint[(lambda_value, delta_value)],
        }
        z2xz2_grading_ok = (
            left_report.is_left_axis
            and right.passed
            and structure_ok
            and respects_grading(algebra=algebra, graded_parts=graded_parts)
        )
        jordan_type_ok = (
            z2xz2_grading_ok and joint[(lambda_value, zero)].is_zero and joint[(zero, delta_value)].is_zero
        )

    return dataclasses.replace(
        left_report,
        is_abs_right_primitive=right.is_primitive,
        right_cubic_ok=right.cubic_ok,
        right_z2_grading_ok=right.grading_ok,
        ops_commute=ops_commute,
        z2xz2_grading_ok=z2xz2_grading_ok,
        jordan_type_ok=jordan_type_ok,
        right_type=right.axis_type,
        decomposition=decomposition,
    )


def jordan_type(algebra: Algebra, a: Element, lambda_value: Scalar | int, delta_value: Scalar | int) -> bool:
    """
    Whether the axis `a` of type (λ, δ) is of Jordan type, that is A_{λ,0} = A_{0,δ} = 0.

    Raises
    ------
    NotAnAxis
        If `a` does not pass `check_axis` through the ℤ₂×ℤ₂-grading.
    """
    report = check_axis(algebra=algebra, a=a, lambda_value=lambda_value, delta_value=delta_value)
    if not report.z2xz2_grading_ok:
        message = f"{algebra.format_element(a)} is not an axis; failed checks: {report.failures}."
        raise NotAnAxis(message)
    return bool(report.jordan_type_ok)


def detect_side_type(algebra: Algebra, a: Element, side: Side) -> AxisType:
    """
    Read the nontrivial eigenvalue of L_a or R_a alone, or ANY when the only eigenvalues are 0 and 1.

    Raises
    ------
    NotAnAxis
        If the operator on `side` is not diagonalizable over the domain or has two nontrivial eigenvalues.
    """
    decomposition = eigen_decompose(algebra=algebra, a=a, side=side)
    nontrivial = [value for value in decomposition.eigenvalues if not value.is_zero and not value.is_one]
    if not decomposition.complete or len(nontrivial) > 1:
        message = (
            f"The {side.value} multiplication by {algebra.format_element(a)} has minimal polynomial "
            f"{decomposition.minimal_polynomial}, which does not fit an axis."
        )
        raise NotAnAxis(message)
    return nontrivial[0] if nontrivial else ANY


def detect_axis_type(algebra: Algebra, a: Element) -> tuple[AxisType, AxisType]:
    """
    Read the type (λ, δ) of a candidate axis off the spectra of L_a and R_a.

    A side whose only eigenvalues are 0 and 1 reports ANY.

    Raises
    ------
    NotAnAxis
        If a multiplication operator is not diagonalizable over the domain or has two nontrivial eigenvalues.
    """
    return (
        detect_side_type(algebra=algebra, a=a, side=Side.LEFT),
        detect_side_type(algebra=algebra, a=a, side=Side.RIGHT),
    )
