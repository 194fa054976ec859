import itertools

from ._checks import check_axis, detect_axis_type, joint_part, resolve_type
from .._exceptions import NotAnAxis, NotJordanAxis
from ..algebra import Algebra, Element, Operator, decompose_direct_sum, multiply


def is_automorphism(algebra: Algebra, operator: Operator) -> bool:
    """Whether an invertible linear map preserves the product on every pair of basis vectors."""
    if operator.kernel().dim != 0:
        return False
    basis = algebra.basis()
    return all(
        operator.apply(multiply(algebra, x, y)) == multiply(algebra, operator.apply(x), operator.apply(y))
        for x, y in itertools.product(basis, repeat=2)
    )


def miyamoto(algebra: Algebra, a: Element) -> Operator:
    """
    The Miyamoto involution τ_a of a Jordan-type axis.

    τ_a fixes A_{1,1} ⊕ A_{0,0} and negates A_{λ,δ}; it is checked to be an involutive automorphism.

    Raises
    ------
    NotJordanAxis
        If `a` is not an axis of Jordan type, or the resulting map is not an involutive automorphism.
    """
    try:
        left_type, right_type = detect_axis_type(algebra=algebra, a=a)
    except NotAnAxis as exception:
        message = f"{algebra.format_element(a)} is not an axis of Jordan type."
        raise NotJordanAxis(message) from exception

    lambda_value = resolve_type(algebra=algebra, value=left_type)
    delta_value = resolve_type(algebra=algebra, value=right_type)
    report = check_axis(algebra=algebra, a=a, lambda_value=lambda_value, delta_value=delta_value)
    if not report.jordan_type_ok:
        message = f"{algebra.format_element(a)} is not an axis of Jordan type; failed checks: {report.failures}."
        raise NotJordanAxis(message)

    plus = joint_part(algebra=algebra, a=a, left_value=1, right_value=1).sum(
        joint_part(algebra=algebra, a=a, left_value=0, right_value=0)
    )
    minus = joint_part(algebra=algebra, a=a, left_value=lambda_value, right_value=delta_value)

    columns = []
    for basis_vector in algebra.basis():
        plus_part, minus_part = decompose_direct_sum(parts=[plus, minus], vector=basis_vector)
        columns.append(plus_part - minus_part)
    involution = Operator.from_columns(columns=columns)

    identity = Operator.identity(domain=algebra.domain, dim=algebra.dim)
    if involution @ involution != identity or not is_automorphism(algebra=algebra, operator=involution):
        message = f"The sign map of {algebra.format_element(a)} is not an involutive automorphism."
        raise NotJordanAxis(message)
    return involution
