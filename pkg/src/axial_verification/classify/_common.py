import typing
import warnings

from .._exceptions import Char3Warning, NotAnAxis, NotJordanAxis
from ..algebra import Algebra, Element, Subspace, left_op, multiply
from ..algebra._linear import solve_columns
from ..axes import AnyType, AxisReport, AxisType, check_axis, detect_axis_type, resolve_type
from ..scalars import Scalar, ScalarDomain
from ..spectral import kernel


def warn_if_char_three(domain: ScalarDomain) -> None:
    if domain.characteristic == 3:
        message = (
            "In characteristic 3 the values -1 and 1/2 coincide, so the two commutative dimension-2 cases merge."
        )
        warnings.warn(message=message, category=Char3Warning, stacklevel=3)


def require_axis(algebra: Algebra, element: Element, name: str) -> tuple[AxisType, AxisType, AxisReport]:
    """
    Detect the type of a generator and check it is an axis of that type.

    Raises
    ------
    NotAnAxis
        If the spectra do not fit an axis or some axiom fails.
    """
    left_type, right_type = detect_axis_type(algebra=algebra, a=element)
    report = check_axis(
        algebra=algebra,
        a=element,
        lambda_value=resolve_type(algebra=algebra, value=left_type),
        delta_value=resolve_type(algebra=algebra, value=right_type),
        include_decomposition=False,
    )
    if not report.is_axis:
        message = f"The generator {name} = {algebra.format_element(element)} is not an axis; failed: {report.failures}."
        raise NotAnAxis(message)
    return left_type, right_type, report


def require_jordan_axis(algebra: Algebra, element: Element, name: str) -> tuple[AxisType, AxisType]:
    try:
        left_type, right_type, report = require_axis(algebra=algebra, element=element, name=name)
    except NotAnAxis as exception:
        raise NotJordanAxis(str(exception)) from exception

    if not report.jordan_type_ok:
        message = f"The generator {name} = {algebra.format_element(element)} is an axis but not of Jordan type."
        raise NotJordanAxis(message)
    return left_type, right_type


def is_scalar_type(value: AxisType) -> typing.TypeGuard[Scalar]:
    return not isinstance(value, AnyType)


def coefficients(vectors: typing.Sequence[Element], target: Element) -> list[Scalar] | None:
    """Coordinates of `target` in the independent `vectors`, or None outside their span."""
    return solve_columns(
        columns=[list(vector.coords) for vector in vectors], target=list(target.coords), domain=target.domain
    )


def zero_eigenspace_closed(algebra: Algebra, a: Element) -> bool:
    """Whether A_0(L_a)·A_0(L_a) ⊆ A_0(L_a)."""
    zero_space = kernel(left_op(algebra, a))
    return all(
        zero_space.contains(multiply(algebra, first, second))
        for first in zero_space.basis
        for second in zero_space.basis
    )


def line(algebra: Algebra, element: Element) -> Subspace:
    return Subspace.span(domain=algebra.domain, ambient_dim=algebra.dim, vectors=[element])
