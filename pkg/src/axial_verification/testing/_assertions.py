import itertools

from ..algebra import Algebra, Element, Operator, Subspace, multiply
from ..axes import AxisReport


def assert_elements_equal(algebra: Algebra, actual: Element, expected: Element) -> None:
    """Compare two elements coordinate by coordinate and name both in the failure message."""
    message = (
        f"Element mismatch:\n\n"
        f"actual   = {algebra.format_element(actual)}\n"
        f"expected = {algebra.format_element(expected)}\n"
    )
    assert actual == expected, message


def assert_subspaces_equal(algebra: Algebra, actual: Subspace, expected: Subspace) -> None:
    actual_basis = [algebra.format_element(vector) for vector in actual.basis]
    expected_basis = [algebra.format_element(vector) for vector in expected.basis]
    assert actual == expected, f"Subspace mismatch: span{actual_basis} != span{expected_basis}"


def assert_is_automorphism(algebra: Algebra, operator: Operator) -> None:
    """Check that `operator` is invertible and name the first pair of basis vectors whose product it breaks."""
    assert operator.kernel().dim == 0, "The operator is not invertible."

    for x, y in itertools.product(algebra.basis(), repeat=2):
        image_of_product = operator.apply(multiply(algebra, x, y))
        product_of_images = multiply(algebra, operator.apply(x), operator.apply(y))
        assert image_of_product == product_of_images, (
            f"The product {algebra.format_element(x)}·{algebra.format_element(y)} is not preserved: "
            f"{algebra.format_element(image_of_product)} != {algebra.format_element(product_of_images)}"
        )


def assert_report_passes(report: AxisReport) -> None:
    assert report.passed, f"Axis checks failed: {report.failures}"
