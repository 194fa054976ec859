from ._common import line
from ._results import SigmaData
from .._exceptions import NotAnAxis
from ..algebra import Algebra, Element, is_commutative, multiply
from ..axes import AxisType, component_split, resolve_type
from ..scalars import Scalar


def _line_coefficient(algebra: Algebra, axis: Element, y: Element) -> Scalar | None:
    try:
        return component_split(algebra=algebra, a=axis, y=y).alpha
    except NotAnAxis:
        return None


def sigma(
    algebra: Algebra,
    a: Element,
    b: Element,
    lambda_value: AxisType | Scalar | int,
    lambda_prime: AxisType | Scalar | int,
    delta_prime: AxisType | Scalar | int | None = None,
) -> SigmaData:
    """
    Compute σ = ab - λ′a - λb for idempotents a, b with left types λ and λ′.

    γ is the scalar with a·σ = γa coming from the split b = α_b·a + b_0 + b_λ, namely
    γ = α_b(1 - λ) - λ′; it is undefined when b has no split with respect to a.

    Parameters
    ----------
    algebra : Algebra
        The ambient algebra.
    a, b : Element
        Idempotents of `algebra`.
    lambda_value, lambda_prime : Scalar or int or ANY
        The left types of a and b.
    delta_prime : Scalar or int or ANY, optional
        The right type of b; when given, `sigma_right` = ab - δ′a - λb is also computed.

    Returns
    -------
    SigmaData
        σ with γ, the line coefficients α_a and α_b, and the checked identities a·σ ∈ Fa and b·σ ∈ Fb.
        In the commutative three-dimensional case the identities a·σ = γa, b·σ = γb and σ² = γσ are added.

    Raises
    ------
    NotAnAxis
        If a or b is not idempotent.
    """
    for name, element in (("a", a), ("b", b)):
        if multiply(algebra, element, element) != element:
            message = f"The element {name} = {algebra.format_element(element)} is not idempotent."
            raise NotAnAxis(message)

    lambda_value = resolve_type(algebra=algebra, value=lambda_value)
    lambda_prime = resolve_type(algebra=algebra, value=lambda_prime)
    product = multiply(algebra, a, b)
    sigma_element = product - lambda_prime * a - lambda_value * b

    alpha_b = _line_coefficient(algebra=algebra, axis=a, y=b)
    alpha_a = _line_coefficient(algebra=algebra, axis=b, y=a)
    gamma = None if alpha_b is None else alpha_b * (1 - lambda_value) - lambda_prime

    a_sigma = multiply(algebra, a, sigma_element)
    b_sigma = multiply(algebra, b, sigma_element)
    witnesses = {
        "a_sigma_in_line_of_a": line(algebra=algebra, element=a).contains(a_sigma),
        "b_sigma_in_line_of_b": line(algebra=algebra, element=b).contains(b_sigma),
    }
    if gamma is not None and algebra.dim == 3 and is_commutative(algebra=algebra):
        witnesses["a_sigma_equals_gamma_a"] = a_sigma == gamma * a
        witnesses["b_sigma_equals_gamma_b"] = b_sigma == gamma * b
        witnesses["sigma_square_equals_gamma_sigma"] = (
            multiply(algebra, sigma_element, sigma_element) == gamma * sigma_element
        )
        if alpha_a is not None:
            witnesses["gamma_agrees_from_both_axes"] = alpha_a * (1 - lambda_prime) - lambda_value == gamma

    sigma_right = None
    if delta_prime is not None:
        delta_prime = resolve_type(algebra=algebra, value=delta_prime)
        sigma_right = product - delta_prime * a - lambda_value * b

    return SigmaData(
        sigma=sigma_element,
        gamma=gamma,
        alpha_a=alpha_a,
        alpha_b=alpha_b,
        sigma_right=sigma_right,
        witnesses=witnesses,
    )
