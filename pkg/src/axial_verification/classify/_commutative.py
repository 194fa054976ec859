import dataclasses

from ._common import is_scalar_type, require_axis
from ._sigma import sigma
from .._exceptions import NotCommutativeCase, ParamOutOfRange
from ..algebra import Algebra, Element, Subspace, is_commutative, left_op, multiply, subalgebra_closure
from ..axes import AxisReport, check_axis, miyamoto
from ..scalars import Scalar
from ..spectral import kernel


def bfamily_gamma(lambda_value: Scalar, lambda_prime: Scalar) -> Scalar | None:
    """
    The γ forced by the fusion rules on the commutative table a² = a, b² = b, ab = ba = λ′a + λb + σ,
    aσ = γa, bσ = γb, σ² = γσ.

    a of type λ and b of type λ′ are axes exactly when
    2γ(1 - 2λ) = λ(λ - 1 + 2λλ′) and 2γ(1 - 2λ′) = λ′(λ′ - 1 + 2λλ′).

    Returns
    -------
    Scalar or None
        The unique admissible γ, or None when λ = λ′ = 1/2 and every γ is admissible.

    Raises
    ------
    ParamOutOfRange
        If λ or λ′ is 0 or 1, or no γ satisfies both equations.
    """
    for name, value in (("λ", lambda_value), ("λ′", lambda_prime)):
        if value.is_zero or value.is_one:
            message = f"The type {name} must not be 0 or 1, but received {value}."
            raise ParamOutOfRange(message)

    lambda_is_half = (2 * lambda_value).is_one
    lambda_prime_is_half = (2 * lambda_prime).is_one
    if lambda_is_half and lambda_prime_is_half:
        return None
    if lambda_is_half or lambda_prime_is_half:
        message = f"No γ makes a, b axes of types λ={lambda_value}, λ′={lambda_prime}: only one of them is 1/2."
        raise ParamOutOfRange(message)

    cross = 2 * lambda_value * lambda_prime
    gamma = lambda_value * (lambda_value - 1 + cross) / (2 * (1 - 2 * lambda_value))
    other = lambda_prime * (lambda_prime - 1 + cross) / (2 * (1 - 2 * lambda_prime))
    if gamma != other:
        message = (
            f"No γ makes a, b axes of types λ={lambda_value}, λ′={lambda_prime}: "
            f"the two fusion equations force γ={gamma} and γ={other}."
        )
        raise ParamOutOfRange(message)
    return gamma


@dataclasses.dataclass(frozen=True, eq=False)
class UnitAndCoaxis:
    """
    The unit σ/γ of a commutative three-dimensional algebra generated by two axes, and the axis 1 - a.

    Both are None when γ = 0. The witnesses hold the checked facts: for γ ≠ 0 that the unit is two-sided,
    that 1 - a is a Jordan axis of type (1 - λ, 1 - λ) and that A_0(a) and A_0(b) are lines; for γ = 0
    that λ = λ′.
    """

    gamma: Scalar
    unit: Element | None
    coaxis: Element | None
    coaxis_report: AxisReport | None
    witnesses: dict[str, bool]


def unit_and_coaxis(algebra: Algebra, a: Element, b: Element) -> UnitAndCoaxis:
    """
    Find the unit and the axis 1 - a in the commutative three-dimensional case.

    Raises
    ------
    NotCommutativeCase
        If the algebra is not commutative of dimension 3 with a of type (λ, λ) and b of type (λ′, λ′).
    NotAnAxis
        If a or b is not an axis.
    """
    if algebra.dim != 3 or not is_commutative(algebra=algebra):
        message = "The unit and co-axis are defined for commutative three-dimensional algebras only."
        raise NotCommutativeCase(message)

    a_left, a_right, _ = require_axis(algebra=algebra, element=a, name="a")
    b_left, b_right, _ = require_axis(algebra=algebra, element=b, name="b")
    types = (a_left, a_right, b_left, b_right)
    if not all(is_scalar_type(value) for value in types) or a_left != a_right or b_left != b_right:
        message = f"The generators must have types (λ, λ) and (λ′, λ′), not {types[:2]} and {types[2:]}."
        raise NotCommutativeCase(message)
    lambda_value, lambda_prime = a_left, b_left

    data = sigma(algebra=algebra, a=a, b=b, lambda_value=lambda_value, lambda_prime=lambda_prime)
    gamma = data.gamma
    if gamma.is_zero:
        return UnitAndCoaxis(
            gamma=gamma,
            unit=None,
            coaxis=None,
            coaxis_report=None,
            witnesses={"gamma_zero_forces_equal_types": lambda_value == lambda_prime},
        )

    unit = gamma.inverse() * data.sigma
    coaxis = unit - a
    coaxis_type = 1 - lambda_value
    report = check_axis(algebra=algebra, a=coaxis, lambda_value=coaxis_type, delta_value=coaxis_type)
    witnesses = {
        "unit_is_two_sided": all(
            multiply(algebra, unit, vector) == vector == multiply(algebra, vector, unit) for vector in algebra.basis()
        ),
        "coaxis_is_jordan_axis": report.is_axis and bool(report.jordan_type_ok),
        "zero_eigenspaces_are_lines": (
            kernel(left_op(algebra, a)).dim == 1 and kernel(left_op(algebra, b)).dim == 1
        ),
    }
    return UnitAndCoaxis(gamma=gamma, unit=unit, coaxis=coaxis, coaxis_report=report, witnesses=witnesses)


def a_prime_subalgebra(algebra: Algebra, c: Element, d: Element) -> Subspace:
    """
    The subalgebra A′(c, d) generated by c and its image under the Miyamoto involution of d.

    Raises
    ------
    NotJordanAxis
        If c or d is not an axis of Jordan type.
    """
    miyamoto(algebra=algebra, a=c)
    involution = miyamoto(algebra=algebra, a=d)
    return subalgebra_closure(algebra=algebra, generators=[c, involution.apply(c)])
