"""Tests for replaying the checked statements on catalog algebras."""

import pytest

import axial_verification

RATIONAL = axial_verification.scalars.ScalarDomain.rational()
THIRD = RATIONAL.from_fraction(1, 3)
TWO_THIRDS = RATIONAL.from_fraction(2, 3)


@pytest.mark.ai_generated
def test_statements_hold_on_flex2() -> None:
    entry = axial_verification.catalog.make_flex2(domain=RATIONAL, lambda_value="1/3")

    report = axial_verification.classify.verify_paper_suite(catalog=[entry])
    failures = [result for result in report if not result["passed"]]
    assert failures == []
    assert axial_verification.classify.suite_passed(report=report)
    assert {result["subject"] for result in report} == {entry.name}
    assert "σ = λx - δa - λb" in {result["statement"] for result in report}


@pytest.mark.ai_generated
def test_mutated_entry_fails_without_raising() -> None:
    entry = axial_verification.catalog.make_flex2(domain=RATIONAL, lambda_value="1/3")
    mutant = axial_verification.catalog.mutate_entry(entry=entry, row=1, column=0, new_product=[0, 0, "1/3"])

    report = axial_verification.classify.verify_paper_suite(catalog=[mutant])
    assert not axial_verification.classify.suite_passed(report=report)

    verdicts = {result["statement"]: result["passed"] for result in report}
    assert verdicts["algebra is flexible"] is False


@pytest.mark.ai_generated
def test_report_to_frame() -> None:
    entry = axial_verification.catalog.make_2B(domain=RATIONAL)

    report = axial_verification.classify.verify_paper_suite(catalog=[entry])
    frame = axial_verification.classify.report_to_frame(report=report)
    assert list(frame.columns) == ["statement", "subject", "passed", "detail"]
    assert len(frame) == len(report)
    assert frame["passed"].all()


@pytest.mark.slow
@pytest.mark.ai_generated
def test_full_suite_passes() -> None:
    report = axial_verification.classify.verify_paper_suite()

    failures = [result for result in report if not result["passed"]]
    assert failures == []
    subjects = {result["subject"] for result in report}
    assert "all tables over GF(5)" in subjects
    assert {"flex2(2) over GF(5)", "flex2(2) over GF(7)"} <= subjects


@pytest.mark.ai_generated
@pytest.mark.parametrize(
    "family, params",
    [
        ("2B", {}),
        ("hss_dim2", {"lambda": -1}),
        ("flex1", {"lambda": "1/3"}),
        ("flex2", {"lambda": "1/3"}),
        ("bfamily", {"lambda": "1/3", "lambda_prime": "2/3", "gamma": "-1/9"}),
    ],
)
def test_generator_statements_run_on_both_axes(family: str, params: dict) -> None:
    entry = axial_verification.catalog.build_entry(family=family, domain=RATIONAL, params=params)

    report = axial_verification.classify.verify_paper_suite(catalog=[entry])
    verdicts = {result["statement"]: result["passed"] for result in report}
    for statement in (
        "an axis absorbs its zero eigenspace",
        "a is central exactly when its types agree",
        "b is central exactly when its types agree",
        "a product of axes vanishes or the λ-part survives",
        "σ = (α_b(1 - λ) - λ′)a - λb_0 and σ′ = (α_a(1 - δ′) - λ)b - δ′·₀a",
        "commutative exactly when the types agree",
    ):
        assert verdicts[statement] is True, statement


@pytest.mark.ai_generated
@pytest.mark.parametrize(
    "lambda_value, lambda_prime, gamma", [("1/3", "2/3", "-1/9"), ("1/2", "1/2", 1), (2, 2, -3), (-1, -1, 0)]
)
def test_commutative_three_dimensional_statements(lambda_value, lambda_prime, gamma) -> None:
    entry = axial_verification.catalog.make_bfamily(
        domain=RATIONAL, lambda_value=lambda_value, lambda_prime=lambda_prime, gamma=gamma
    )

    report = axial_verification.classify.verify_paper_suite(catalog=[entry])
    verdicts = {result["statement"]: result for result in report}
    assert verdicts["σ = (α_b(1 - λ) - λ′)a - λb_0 = (α_a(1 - λ′) - λ)b - λ′a_0"]["passed"] is True
    assert verdicts["generated by two axes of one Jordan type"]["passed"] is True
    assert axial_verification.classify.suite_passed(report=report)


@pytest.mark.ai_generated
def test_distinct_types_need_a_full_a_prime_subalgebra() -> None:
    entry = axial_verification.catalog.make_bfamily(
        domain=RATIONAL, lambda_value="1/3", lambda_prime="2/3", gamma="-1/9"
    )

    report = axial_verification.classify.verify_paper_suite(catalog=[entry])
    (result,) = [result for result in report if result["statement"] == "generated by two axes of one Jordan type"]
    assert result["detail"] == "dim A′(a, b) = 3, dim A′(b, a) = 3"


@pytest.mark.ai_generated
def test_noncommutative_check_covers_b() -> None:
    # a is an axis of type (1/3, 2/3) while b, with ab = ba = 0, has equal types.
    algebra = axial_verification.algebra.build_algebra(
        domain=RATIONAL,
        dim=3,
        basis_names=["a", "b", "x"],
        table=[
            [[1, 0, 0], [0, 0, 0], [0, 0, "1/3"]],
            [[0, 0, 0], [0, 1, 0], [0, 0, 0]],
            [[0, 0, "2/3"], [0, 0, 0], [0, 0, 0]],
        ],
    )
    entry = axial_verification.catalog.CatalogEntry(
        name="a beside a 2B axis",
        family="custom",
        params={},
        constraints=(),
        algebra=algebra,
        expected=axial_verification.classify.ClassificationResult(
            case=axial_verification.classify.Case.NOT_CLASSIFIABLE, dim=3, commutative=False
        ),
        axis_types={"a": (THIRD, TWO_THIRDS), "b": (axial_verification.axes.ANY, axial_verification.axes.ANY)},
    )

    report = axial_verification.classify.verify_paper_suite(catalog=[entry])
    (result,) = [result for result in report if result["statement"] == "commutative exactly when the types agree"]
    assert result["passed"] is False
    assert "commutative=False" in result["detail"]


@pytest.mark.ai_generated
@pytest.mark.parametrize("family", ["flex1", "flex2"])
def test_generic_flexible_entries_pass(family: str) -> None:
    generic = axial_verification.scalars.ScalarDomain.rational_function()
    entry = axial_verification.catalog.build_entry(family=family, domain=generic, params={"lambda": "t"})

    report = axial_verification.classify.verify_paper_suite(catalog=[entry])
    failures = [result for result in report if not result["passed"]]
    assert failures == []
    statements = {result["statement"] for result in report}
    assert "algebra is flexible" in statements
    assert "idempotent families hold identically in t" in statements
    assert "σ = (α_b(1 - λ) - λ′)a - λb_0 and σ′ = (α_a(1 - δ′) - λ)b - δ′·₀a" in statements
    if family == "flex2":
        assert "σ = λx - δa - λb" in statements
