from ._common import coefficients, is_scalar_type, require_axis, warn_if_char_three
from ._results import Case, ClassificationResult, verdict
from .._exceptions import NotGeneratedByGivenAxes, NotTwoDim
from ..algebra import Algebra, Element, is_commutative, is_flexible, multiply, subalgebra_closure
from ..axes import component_split


def classify_dim2(algebra: Algebra, a: Element, b: Element) -> ClassificationResult:
    """
    Classify a two-dimensional algebra generated by the axes a and b.

    The cases are TWO_B (ab = ba = 0), HSS_DIM2(λ) (ab = ba = λ(a + b) with λ ∈ {-1, 1/2}) and
    FLEX1(λ, δ) (ab = δa + λb, ba = λa + δb with λ + δ = 1 and λ ≠ δ). A table with λ = δ is commutative
    and therefore only ever matches HSS_DIM2.

    Parameters
    ----------
    algebra : Algebra
        A two-dimensional algebra.
    a, b : Element
        Axes generating `algebra`; their types are read off their spectra.

    Returns
    -------
    ClassificationResult
        The case, or NOT_CLASSIFIABLE naming the first failed witness.

    Raises
    ------
    NotTwoDim
        If the algebra is not two-dimensional.
    NotGeneratedByGivenAxes
        If a and b do not generate the algebra.
    NotAnAxis
        If a or b is not an axis.
    """
    if algebra.dim != 2:
        message = f"Expected a two-dimensional algebra, but the algebra has dimension {algebra.dim}."
        raise NotTwoDim(message)
    warn_if_char_three(domain=algebra.domain)

    if subalgebra_closure(algebra=algebra, generators=[a, b]).dim != 2:
        message = "The given elements do not generate the algebra."
        raise NotGeneratedByGivenAxes(message)

    a_left, a_right, _ = require_axis(algebra=algebra, element=a, name="a")
    b_left, b_right, _ = require_axis(algebra=algebra, element=b, name="b")

    product = multiply(algebra, a, b)
    reverse = multiply(algebra, b, a)
    commutative = is_commutative(algebra=algebra)
    flexible = is_flexible(algebra=algebra)

    if product.is_zero and reverse.is_zero:
        witnesses = {"products_vanish": True, "flexible": flexible}
        return verdict(case=Case.TWO_B, dim=2, commutative=commutative, params={}, witnesses=witnesses)

    p1, q1 = coefficients(vectors=[a, b], target=product)
    p2, q2 = coefficients(vectors=[a, b], target=reverse)
    alpha_b = component_split(algebra=algebra, a=a, y=b).alpha
    alpha_a = component_split(algebra=algebra, a=b, y=a).alpha

    if commutative:
        lambda_value = p1
        witnesses = {
            "product_is_symmetric_in_a_and_b": p1 == q1,
            "product_coefficient_is_minus_one_or_half": lambda_value == -1 or 2 * lambda_value == 1,
            "a_has_type_of_product_coefficient": a_left == lambda_value and a_right == lambda_value,
            "b_has_type_of_product_coefficient": b_left == lambda_value and b_right == lambda_value,
            "alpha_b_is_inverse_of_twice_lambda": 2 * lambda_value * alpha_b == 1,
            "alpha_a_equals_alpha_b": alpha_a == alpha_b,
            "flexible": flexible,
        }
        return verdict(
            case=Case.HSS_DIM2, dim=2, commutative=True, params={"lambda": lambda_value}, witnesses=witnesses
        )

    types = (a_left, a_right, b_left, b_right)
    if not all(is_scalar_type(value) for value in types):
        witnesses = {"generators_have_nontrivial_types": False}
        return verdict(case=Case.FLEX1, dim=2, commutative=False, params={}, witnesses=witnesses)

    lambda_value, delta_value, lambda_prime, delta_prime = types
    cross = lambda_value * lambda_prime - delta_value * delta_prime
    a_sum = lambda_value + delta_value
    b_sum = lambda_prime + delta_prime
    witnesses = {
        "ab_equals_delta_a_plus_lambda_b": p1 == delta_value and q1 == lambda_value,
        "ba_equals_lambda_a_plus_delta_b": p2 == lambda_value and q2 == delta_value,
        "lambda_plus_delta_is_one": a_sum == 1,
        "lambda_differs_from_delta": lambda_value != delta_value,
        # α_b(1 - λ) = δ', α_b(1 - δ) = λ' and α_b(λ + δ) = 1; likewise for α_a with the roles swapped.
        "alpha_b_is_inverse_of_type_sum": alpha_b * a_sum == 1,
        "alpha_a_is_inverse_of_type_sum": alpha_a * b_sum == 1,
        "cross_products_match_b_types": cross == lambda_prime - delta_prime,
        "cross_products_match_a_types": cross == lambda_value - delta_value,
        "alpha_b_balances_lambda_prime": lambda_prime * a_sum == 1 - delta_value,
        "alpha_a_balances_lambda": lambda_value * b_sum == 1 - delta_prime,
        "alpha_a_balances_delta": delta_value * b_sum == 1 - lambda_prime,
        "alpha_b_balances_delta_prime": delta_prime * a_sum == 1 - lambda_value,
        "flexible": flexible,
    }
    return verdict(
        case=Case.FLEX1,
        dim=2,
        commutative=False,
        params={"lambda": lambda_value, "delta": delta_value},
        witnesses=witnesses,
    )
