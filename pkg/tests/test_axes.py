"""Tests for the axis axioms, component splits and Miyamoto involutions."""

import pytest

import axial_verification

RATIONAL = axial_verification.scalars.ScalarDomain.rational()
GF5 = axial_verification.scalars.ScalarDomain.prime_field(p=5)
THIRD = RATIONAL.from_fraction(1, 3)
TWO_THIRDS = RATIONAL.from_fraction(2, 3)

ANY = axial_verification.axes.ANY


def _flex2(domain=RATIONAL, lambda_value="1/3"):
    return axial_verification.catalog.make_flex2(domain=domain, lambda_value=lambda_value).algebra


@pytest.mark.ai_generated
def test_flex2_generators_are_jordan_axes() -> None:
    algebra = _flex2()
    a, b, _ = algebra.basis()

    report = axial_verification.axes.check_axis(algebra=algebra, a=a, lambda_value=THIRD, delta_value=TWO_THIRDS)
    axial_verification.testing.assert_report_passes(report=report)
    assert report.is_axis is True
    assert report.jordan_type_ok is True
    assert (report.left_type, report.right_type) == (THIRD, TWO_THIRDS)
    assert report.decomposition is not None

    report = axial_verification.axes.check_axis(algebra=algebra, a=b, lambda_value=TWO_THIRDS, delta_value=THIRD)
    axial_verification.testing.assert_report_passes(report=report)


@pytest.mark.ai_generated
def test_detect_axis_type() -> None:
    algebra = _flex2()
    a, b, x = algebra.basis()

    assert axial_verification.axes.detect_axis_type(algebra=algebra, a=a) == (THIRD, TWO_THIRDS)
    assert axial_verification.axes.detect_axis_type(algebra=algebra, a=b) == (TWO_THIRDS, THIRD)
    assert axial_verification.axes.detect_axis_type(algebra=algebra, a=a + b - x) == (ANY, ANY)

    two_b = axial_verification.catalog.make_2B(domain=RATIONAL).algebra
    assert axial_verification.axes.detect_axis_type(algebra=two_b, a=two_b.basis_element("a")) == (ANY, ANY)


@pytest.mark.ai_generated
def test_unit_of_flex2_is_not_primitive() -> None:
    algebra = _flex2()
    unit = algebra.element(coords=[1, 1, -1])

    report = axial_verification.axes.check_axis(
        algebra=algebra, a=unit, lambda_value=THIRD, delta_value=TWO_THIRDS, include_decomposition=False
    )
    assert report.is_idempotent is True
    assert report.is_abs_left_primitive is False
    assert report.is_axis is False
    assert "is_abs_left_primitive" in report.failures
    assert report.decomposition is None


@pytest.mark.ai_generated
def test_left_axis_report_leaves_right_checks_unset() -> None:
    algebra = _flex2()

    report = axial_verification.axes.check_left_axis(algebra=algebra, a=algebra.basis_element("a"), lambda_value=THIRD)
    assert report.is_left_axis is True
    assert report.right_type is None
    assert set(report.checks()) == {"is_idempotent", "is_abs_left_primitive", "cubic_ok", "z2_grading_ok"}


@pytest.mark.ai_generated
def test_invalid_inputs() -> None:
    algebra = _flex2()

    with pytest.raises(axial_verification.NotAnAxis, match="zero element"):
        axial_verification.axes.check_axis(algebra=algebra, a=algebra.zero(), lambda_value=THIRD, delta_value=THIRD)
    with pytest.raises(axial_verification.TypeParamInvalid):
        axial_verification.axes.check_axis(
            algebra=algebra, a=algebra.basis_element("a"), lambda_value=1, delta_value=THIRD
        )
    with pytest.raises(axial_verification.TypeParamInvalid):
        axial_verification.axes.check_left_axis(algebra=algebra, a=algebra.basis_element("a"), lambda_value=0)


@pytest.mark.ai_generated
@pytest.mark.parametrize("family, lambda_value", [("hss_dim2", "1/2"), ("hss_dim2", -1), ("flex1", "1/3")])
def test_two_dimensional_generators_are_jordan_axes(family: str, lambda_value) -> None:
    entry = axial_verification.catalog.build_entry(family=family, domain=RATIONAL, params={"lambda": lambda_value})
    algebra = entry.algebra

    for name in entry.generators:
        left_type, right_type = entry.axis_types[name]
        report = axial_verification.axes.check_axis(
            algebra=algebra, a=algebra.basis_element(name), lambda_value=left_type, delta_value=right_type
        )
        assert report.jordan_type_ok is True
        assert axial_verification.axes.jordan_type(
            algebra=algebra, a=algebra.basis_element(name), lambda_value=left_type, delta_value=right_type
        )


@pytest.mark.ai_generated
def test_component_split_of_b_along_a() -> None:
    algebra = _flex2()
    a, b, x = algebra.basis()

    split = axial_verification.axes.component_split(algebra=algebra, a=a, y=b)
    assert split.alpha == 0
    assert split.y0 == b - x
    assert split.ylambda == x
    assert split.has_refinement is True
    assert split.y00 == b - x
    assert split.ylambdadelta == x
    assert split.ylambda0.is_zero
    assert split.y0delta.is_zero

    right_split = axial_verification.axes.component_split(
        algebra=algebra, a=a, y=a + b, side=axial_verification.spectral.Side.RIGHT
    )
    assert right_split.alpha == 1
    assert right_split.ylambda == x

    with pytest.raises(axial_verification.NotAnAxis):
        axial_verification.axes.component_split(algebra=algebra, a=a + b - x, y=b)


@pytest.mark.ai_generated
def test_left_split_ignores_a_non_semisimple_right_multiplication() -> None:
    # L_a = diag(1, 1/3, 0) while R_a sends c to a + c.
    algebra = axial_verification.algebra.build_algebra(
        domain=RATIONAL,
        dim=3,
        basis_names=["a", "b", "c"],
        table=[
            [[1, 0, 0], [0, "1/3", 0], [0, 0, 0]],
            [[0, 0, 0], [0, 0, 0], [0, 0, 0]],
            [[1, 0, 1], [0, 0, 0], [0, 0, 0]],
        ],
    )
    a, b, c = algebra.basis()

    left_report = axial_verification.axes.check_left_axis(algebra=algebra, a=a, lambda_value=THIRD)
    axial_verification.testing.assert_report_passes(report=left_report)
    with pytest.raises(axial_verification.NotAnAxis, match="minimal polynomial"):
        axial_verification.axes.detect_axis_type(algebra=algebra, a=a)

    split = axial_verification.axes.component_split(algebra=algebra, a=a, y=a + b + c)
    assert split.alpha == 1
    assert split.y0 == c
    assert split.ylambda == b
    assert split.has_refinement is False

    with pytest.raises(axial_verification.NotAnAxis):
        axial_verification.axes.component_split(
            algebra=algebra, a=a, y=b, side=axial_verification.spectral.Side.RIGHT
        )


@pytest.mark.ai_generated
def test_miyamoto_involution_of_flex2() -> None:
    algebra = _flex2()
    a, b, x = algebra.basis()

    involution = axial_verification.axes.miyamoto(algebra=algebra, a=a)
    axial_verification.testing.assert_elements_equal(algebra=algebra, actual=involution.apply(b), expected=b - 2 * x)
    axial_verification.testing.assert_elements_equal(algebra=algebra, actual=involution.apply(a), expected=a)
    axial_verification.testing.assert_is_automorphism(algebra=algebra, operator=involution)
    assert involution @ involution == axial_verification.algebra.Operator.identity(domain=RATIONAL, dim=3)

    with pytest.raises(axial_verification.NotJordanAxis):
        axial_verification.axes.miyamoto(algebra=algebra, a=a + b - x)


@pytest.mark.ai_generated
def test_is_automorphism() -> None:
    algebra = _flex2()
    Operator = axial_verification.algebra.Operator

    assert axial_verification.axes.is_automorphism(algebra=algebra, operator=Operator.identity(domain=RATIONAL, dim=3))
    assert not axial_verification.axes.is_automorphism(
        algebra=algebra, operator=Operator.scalar(domain=RATIONAL, dim=3, value=0)
    )
    assert not axial_verification.axes.is_automorphism(
        algebra=algebra, operator=Operator.scalar(domain=RATIONAL, dim=3, value=2)
    )


@pytest.mark.ai_generated
def test_find_axes_of_flex2_over_gf5() -> None:
    algebra = _flex2(domain=GF5, lambda_value=2)
    a, b, x = algebra.basis()

    found = axial_verification.axes.find_axes_ff(algebra=algebra)
    axes = {axis for axis, _ in found}
    assert axes == {generator + value * x for generator in (a, b) for value in GF5.elements()}
    assert all(report.jordan_type_ok for _, report in found)
