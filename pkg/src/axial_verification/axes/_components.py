import dataclasses

from ._checks import check_side, detect_axis_type, detect_side_type, joint_part, resolve_type
from ._report import ComponentSplit
from .._exceptions import NotAnAxis
from ..algebra import Algebra, Element, Subspace, decompose_direct_sum, left_op, multiply, right_op
from ..scalars import Scalar
from ..spectral import Side


def _line_coefficient(a: Element, component: Element) -> Scalar:
    index = next(position for position, coordinate in enumerate(a.coords) if not coordinate.is_zero)
    return component[index] / a[index]


def component_split(algebra: Algebra, a: Element, y: Element, side: Side = Side.LEFT) -> ComponentSplit:
    """
    Split y = α_y·a + y_0 + y_λ along the eigenspaces of the multiplication by the axis `a`.

    Only the operator on `side` has to fit an axis. The joint refinement additionally needs L_a and R_a
    to commute and the other side to be diagonalizable.

    Parameters
    ----------
    algebra : Algebra
        The ambient algebra.
    a : Element
        An idempotent passing the one-sided axis checks on `side`.
    y : Element
        The element to split.
    side : Side, default: LEFT
        Split along L_a (y_0 ∈ A_0(L_a), y_λ ∈ A_λ(L_a)) or along R_a.

    Returns
    -------
    ComponentSplit
        The unique components; the joint refinement is filled in when it exists.

    Raises
    ------
    NotAnAxis
        If `a` fails idempotency, primitivity, the cubic law or the ℤ₂-grading on `side`.
    """
    value = resolve_type(algebra=algebra, value=detect_side_type(algebra=algebra, a=a, side=side))

    check = check_side(algebra=algebra, a=a, value=value, side=side)
    if multiply(algebra, a, a) != a or not check.passed:
        message = f"{algebra.format_element(a)} is not a {side.value} axis, so the component split is undefined."
        raise NotAnAxis(message)

    line = Subspace.span(domain=algebra.domain, ambient_dim=algebra.dim, vectors=[a])
    line_part, zero_part, value_part = decompose_direct_sum(parts=[line, check.zero_space, check.value_space], vector=y)
    alpha = _line_coefficient(a=a, component=line_part)
    split = ComponentSplit(alpha=alpha, y0=zero_part, ylambda=value_part, side=side)

    left_operator = left_op(algebra, a)
    right_operator = right_op(algebra, a)
    if left_operator @ right_operator != right_operator @ left_operator:
        return split

    try:
        left_type, right_type = detect_axis_type(algebra=algebra, a=a)
    except NotAnAxis:
        return split
    lambda_value = resolve_type(algebra=algebra, value=left_type)
    delta_value = resolve_type(algebra=algebra, value=right_type)

    joint_parts = [
        joint_part(algebra=algebra, a=a, left_value=left_value, right_value=right_value)
        for left_value, right_value in ((0, 0), (0, delta_value), (lambda_value, 0), (lambda_value, delta_value))
    ]
    try:
        y00, y0delta, ylambda0, ylambdadelta = decompose_direct_sum(parts=joint_parts, vector=y - alpha * a)
    except ValueError:
        return split

    return dataclasses.replace(split, y00=y00, y0delta=y0delta, ylambda0=ylambda0, ylambdadelta=ylambdadelta)
