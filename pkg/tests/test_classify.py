"""Tests for the classification of algebras generated by two axes and its supporting identities."""

import pytest

import axial_verification

RATIONAL = axial_verification.scalars.ScalarDomain.rational()
Case = axial_verification.classify.Case


def _q(text: str):
    return axial_verification.scalars.parse_scalar(text=text, domain=RATIONAL)


@pytest.mark.ai_generated
@pytest.mark.parametrize(
    "entry", axial_verification.catalog.shipped_catalog(), ids=lambda entry: entry.name
)
def test_shipped_entries_classify_as_catalogued(entry) -> None:
    a, b = entry.generator_elements()

    result = axial_verification.classify.classify_2gen(algebra=entry.algebra, a=a, b=b)
    assert result.matches(entry.expected), result.label
    assert result.dim == entry.algebra.dim


@pytest.mark.ai_generated
@pytest.mark.parametrize(
    "family, params, expected_label",
    [
        ("2B", {}, "TWO_B"),
        ("hss_dim2", {"lambda": "1/2"}, "HSS_DIM2(λ=1/2)"),
        ("hss_dim2", {"lambda": -1}, "HSS_DIM2(λ=-1)"),
        ("flex1", {"lambda": "1/3"}, "FLEX1(λ=1/3, δ=2/3)"),
        ("flex2", {"lambda": "1/3"}, "FLEX2(λ=1/3, δ=2/3)"),
        ("bfamily", {"lambda": "1/3", "lambda_prime": "2/3", "gamma": "-1/9"}, "B_FAMILY(λ=1/3, λ′=2/3, γ=-1/9)"),
    ],
)
def test_classification_labels(family: str, params: dict, expected_label: str) -> None:
    entry = axial_verification.catalog.build_entry(family=family, domain=RATIONAL, params=params)
    a, b = entry.generator_elements()

    result = axial_verification.classify.classify_2gen(algebra=entry.algebra, a=a, b=b)
    assert result.label == expected_label
    assert all(result.witnesses.values())
    assert result.to_dict()["label"] == expected_label


@pytest.mark.ai_generated
def test_dimension_two_witnesses_cover_every_type_relation() -> None:
    entry = axial_verification.catalog.make_flex1(domain=RATIONAL, lambda_value="1/4")
    a, b = entry.generator_elements()

    result = axial_verification.classify.classify_dim2(algebra=entry.algebra, a=a, b=b)
    assert result.label == "FLEX1(λ=1/4, δ=3/4)"
    relations = {
        "cross_products_match_a_types",
        "cross_products_match_b_types",
        "alpha_b_balances_lambda_prime",
        "alpha_b_balances_delta_prime",
        "alpha_a_balances_lambda",
        "alpha_a_balances_delta",
        "alpha_b_is_inverse_of_type_sum",
        "alpha_a_is_inverse_of_type_sum",
    }
    assert relations <= set(result.witnesses)
    assert all(result.witnesses[name] for name in relations)


@pytest.mark.ai_generated
@pytest.mark.parametrize("lambda_value", ["1/2", -1])
def test_commutative_dimension_two_witnesses_alpha(lambda_value) -> None:
    entry = axial_verification.catalog.make_hss_dim2(domain=RATIONAL, lambda_value=lambda_value)
    a, b = entry.generator_elements()

    result = axial_verification.classify.classify_dim2(algebra=entry.algebra, a=a, b=b)
    assert result.case is Case.HSS_DIM2
    assert result.witnesses["alpha_b_is_inverse_of_twice_lambda"] is True
    assert result.witnesses["alpha_a_equals_alpha_b"] is True


@pytest.mark.ai_generated
def test_classify_2gen_errors() -> None:
    algebra = axial_verification.catalog.make_flex2(domain=RATIONAL, lambda_value="1/3").algebra
    a, b, x = algebra.basis()

    with pytest.raises(axial_verification.NotGeneratedByGivenAxes):
        axial_verification.classify.classify_2gen(algebra=algebra, a=a, b=a + b - x)
    with pytest.raises(axial_verification.NotTwoDim):
        axial_verification.classify.classify_dim2(algebra=algebra, a=a, b=b)


@pytest.mark.ai_generated
def test_characteristic_three_warns() -> None:
    with pytest.warns(axial_verification.Char3Warning):
        entry = axial_verification.catalog.make_hss_dim2(domain="GF:3", lambda_value=-1)
    a, b = entry.generator_elements()

    with pytest.warns(axial_verification.Char3Warning):
        result = axial_verification.classify.classify_2gen(algebra=entry.algebra, a=a, b=b)
    assert result.case is Case.HSS_DIM2


@pytest.mark.ai_generated
def test_not_classifiable_label() -> None:
    result = axial_verification.classify.ClassificationResult(
        case=Case.NOT_CLASSIFIABLE, dim=3, commutative=False, diagnostic="flexible"
    )

    assert result.label == "NOT_CLASSIFIABLE(flexible)"
    other = axial_verification.classify.ClassificationResult(case=Case.FLEX2, dim=3, commutative=False)
    assert not result.matches(other)


@pytest.mark.ai_generated
@pytest.mark.parametrize(
    "lambda_value, lambda_prime, expected",
    [
        ("1/3", "2/3", "-1/9"),
        ("2/3", "1/3", "-1/9"),
        ("2", "2", "-3"),
        ("-1", "-1", "0"),
    ],
)
def test_bfamily_gamma(lambda_value: str, lambda_prime: str, expected: str) -> None:
    gamma = axial_verification.classify.bfamily_gamma(lambda_value=_q(lambda_value), lambda_prime=_q(lambda_prime))
    assert gamma == _q(expected)


@pytest.mark.ai_generated
def test_bfamily_gamma_edge_cases() -> None:
    bfamily_gamma = axial_verification.classify.bfamily_gamma

    assert bfamily_gamma(lambda_value=_q("1/2"), lambda_prime=_q("1/2")) is None
    with pytest.raises(axial_verification.ParamOutOfRange, match="only one of them"):
        bfamily_gamma(lambda_value=_q("1/2"), lambda_prime=_q("1/3"))
    with pytest.raises(axial_verification.ParamOutOfRange, match="force"):
        bfamily_gamma(lambda_value=_q("1/3"), lambda_prime=_q("1/4"))
    with pytest.raises(axial_verification.ParamOutOfRange):
        bfamily_gamma(lambda_value=_q("0"), lambda_prime=_q("1/3"))


@pytest.mark.ai_generated
def test_sigma_of_flex2() -> None:
    algebra = axial_verification.catalog.make_flex2(domain=RATIONAL, lambda_value="1/3").algebra
    a, b, x = algebra.basis()
    third, two_thirds = _q("1/3"), _q("2/3")

    data = axial_verification.classify.sigma(algebra=algebra, a=a, b=b, lambda_value=third, lambda_prime=two_thirds)
    assert data.sigma == third * x - two_thirds * a - third * b
    assert data.alpha_b == 0
    assert data.alpha_a == 0
    assert data.gamma == -two_thirds
    assert data.witnesses["a_sigma_in_line_of_a"] is True
    assert data.sigma_right is None

    with pytest.raises(axial_verification.NotAnAxis):
        axial_verification.classify.sigma(algebra=algebra, a=a + b, b=b, lambda_value=third, lambda_prime=third)


@pytest.mark.ai_generated
def test_sigma_right_vanishes_for_flex1() -> None:
    algebra = axial_verification.catalog.make_flex1(domain=RATIONAL, lambda_value="1/3").algebra
    a, b = algebra.basis()
    third, two_thirds = _q("1/3"), _q("2/3")

    data = axial_verification.classify.sigma(
        algebra=algebra, a=a, b=b, lambda_value=third, lambda_prime=third, delta_prime=two_thirds
    )
    assert data.sigma_right.is_zero


@pytest.mark.ai_generated
def test_unit_and_coaxis() -> None:
    entry = axial_verification.catalog.make_bfamily(
        domain=RATIONAL, lambda_value="1/3", lambda_prime="2/3", gamma="-1/9"
    )
    algebra = entry.algebra
    a, b = entry.generator_elements()

    result = axial_verification.classify.unit_and_coaxis(algebra=algebra, a=a, b=b)
    assert result.gamma == _q("-1/9")
    assert all(result.witnesses.values())
    for vector in algebra.basis():
        assert axial_verification.algebra.multiply(algebra, result.unit, vector) == vector
    assert result.coaxis == result.unit - a
    assert result.coaxis_report.jordan_type_ok is True


@pytest.mark.ai_generated
def test_unit_and_coaxis_without_unit() -> None:
    entry = axial_verification.catalog.make_bfamily(domain=RATIONAL, lambda_value=-1, lambda_prime=-1, gamma=0)
    a, b = entry.generator_elements()

    result = axial_verification.classify.unit_and_coaxis(algebra=entry.algebra, a=a, b=b)
    assert result.unit is None
    assert result.witnesses == {"gamma_zero_forces_equal_types": True}

    flex2 = axial_verification.catalog.make_flex2(domain=RATIONAL, lambda_value="1/3")
    flex2_a, flex2_b = flex2.generator_elements()
    with pytest.raises(axial_verification.NotCommutativeCase):
        axial_verification.classify.unit_and_coaxis(algebra=flex2.algebra, a=flex2_a, b=flex2_b)


@pytest.mark.ai_generated
def test_a_prime_subalgebra_of_flex2() -> None:
    algebra = axial_verification.catalog.make_flex2(domain=RATIONAL, lambda_value="1/3").algebra
    a, b, x = algebra.basis()

    generated = axial_verification.classify.a_prime_subalgebra(algebra=algebra, c=a, d=b)
    assert generated == axial_verification.algebra.Subspace.span(domain=RATIONAL, ambient_dim=3, vectors=[a, x])


@pytest.mark.ai_generated
@pytest.mark.parametrize("family, params", [("flex2", {"lambda": "1/3"}), ("hss_dim2", {"lambda": "1/2"})])
def test_seress_identities(family: str, params: dict) -> None:
    entry = axial_verification.catalog.build_entry(family=family, domain=RATIONAL, params=params)
    a, b = entry.generator_elements()

    assert axial_verification.classify.check_seress(algebra=entry.algebra, a=a)
    assert axial_verification.classify.check_seress(algebra=entry.algebra, a=b)
