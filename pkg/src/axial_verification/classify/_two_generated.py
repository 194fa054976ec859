from ._common import (
    is_scalar_type,
    require_jordan_axis,
    warn_if_char_three,
    zero_eigenspace_closed,
)
from ._dim2 import classify_dim2
from ._results import Case, ClassificationResult, verdict
from ._sigma import sigma
from .._exceptions import DimExceedsThree, NotGeneratedByGivenAxes
from ..algebra import Algebra, Element, Subspace, is_commutative, is_flexible, multiply, subalgebra_closure


def classify_2gen(algebra: Algebra, a: Element, b: Element) -> ClassificationResult:
    """
    Classify an algebra generated by two axes of Jordan type.

    Such an algebra is spanned by a, b and ab, so it has dimension at most 3. Dimension 2 is handled by
    `classify_dim2`. In dimension 3 a noncommutative algebra must be FLEX2(λ, δ), with b of type (δ, λ) and
    ab = λy, ba = δy for a single element y; a commutative one must be B_FAMILY(λ, λ′, γ), determined by
    a·σ = γa, b·σ = γb and σ² = γσ.

    Raises
    ------
    NotGeneratedByGivenAxes
        If a and b do not generate the algebra.
    DimExceedsThree
        If the algebra has dimension above 3, which no pair of Jordan axes can generate.
    NotJordanAxis
        If a or b is not an axis of Jordan type.
    """
    warn_if_char_three(domain=algebra.domain)
    if subalgebra_closure(algebra=algebra, generators=[a, b]).dim != algebra.dim:
        message = "The given elements do not generate the algebra."
        raise NotGeneratedByGivenAxes(message)
    if algebra.dim > 3:
        message = f"Two Jordan axes generate at most 3 dimensions, but the algebra has dimension {algebra.dim}."
        raise DimExceedsThree(message)

    a_left, a_right = require_jordan_axis(algebra=algebra, element=a, name="a")
    b_left, b_right = require_jordan_axis(algebra=algebra, element=b, name="b")

    if algebra.dim == 1:
        return ClassificationResult(
            case=Case.NOT_CLASSIFIABLE, dim=1, commutative=True, diagnostic="generators_span_a_line"
        )
    if algebra.dim == 2:
        return classify_dim2(algebra=algebra, a=a, b=b)

    product = multiply(algebra, a, b)
    reverse = multiply(algebra, b, a)
    commutative = is_commutative(algebra=algebra)
    witnesses = {
        "spanned_by_a_b_and_ab": Subspace.span(
            domain=algebra.domain, ambient_dim=algebra.dim, vectors=[a, b, product]
        ).dim
        == 3,
        "zero_eigenspace_of_a_closed": zero_eigenspace_closed(algebra=algebra, a=a),
        "zero_eigenspace_of_b_closed": zero_eigenspace_closed(algebra=algebra, a=b),
        "flexible": is_flexible(algebra=algebra),
    }

    types = (a_left, a_right, b_left, b_right)
    if not all(is_scalar_type(value) for value in types):
        witnesses["generators_have_nontrivial_types"] = False
        return verdict(case=Case.NOT_CLASSIFIABLE, dim=3, commutative=commutative, params={}, witnesses=witnesses)
    lambda_value, delta_value, lambda_prime, delta_prime = types

    if not commutative:
        y = lambda_value.inverse() * product
        witnesses.update(
            {
                "lambda_plus_delta_is_one": lambda_value + delta_value == 1,
                "lambda_differs_from_delta": lambda_value != delta_value,
                "b_left_type_is_delta": lambda_prime == delta_value,
                "b_right_type_is_lambda": delta_prime == lambda_value,
                "ba_equals_delta_y": reverse == delta_value * y,
                "a_y_equals_lambda_y": multiply(algebra, a, y) == lambda_value * y,
                "y_b_equals_lambda_y": multiply(algebra, y, b) == lambda_value * y,
                "b_y_equals_delta_y": multiply(algebra, b, y) == delta_value * y,
                "y_a_equals_delta_y": multiply(algebra, y, a) == delta_value * y,
                "y_squares_to_zero": multiply(algebra, y, y).is_zero,
            }
        )
        return verdict(
            case=Case.FLEX2,
            dim=3,
            commutative=False,
            params={"lambda": lambda_value, "delta": delta_value},
            witnesses=witnesses,
        )

    data = sigma(algebra=algebra, a=a, b=b, lambda_value=lambda_value, lambda_prime=lambda_prime)
    witnesses.update(
        {
            "a_type_is_symmetric": lambda_value == delta_value,
            "b_type_is_symmetric": lambda_prime == delta_prime,
            "gamma_defined": data.gamma is not None,
        }
    )
    witnesses.update(data.witnesses)

    details = {}
    if data.alpha_a is not None and data.alpha_b is not None:
        details = {"alpha_a": data.alpha_a, "alpha_b": data.alpha_b}
        if lambda_value == lambda_prime:
            witnesses["line_coefficients_agree_for_equal_types"] = data.alpha_a == data.alpha_b
            details["phi"] = data.alpha_a

    params = {"lambda": lambda_value, "lambda_prime": lambda_prime}
    if data.gamma is not None:
        params["gamma"] = data.gamma
    return verdict(
        case=Case.B_FAMILY, dim=3, commutative=True, params=params, witnesses=witnesses, details=details
    )
