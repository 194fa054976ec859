import itertools

import pytest

import axial_verification


@pytest.mark.ai_generated
def test_search_over_gf5_matches_the_classification() -> None:
    report = axial_verification.classify.search_dim2_ff(p=5)

    assert report["table_count"] == 625
    assert report["matches_prediction"] is True
    assert report["all_flexible"] is True

    labels = {survivor["table"]: survivor["label"] for survivor in report["survivors"]}
    assert labels == {
        (0, 0, 0, 0): "TWO_B",
        (3, 3, 3, 3): "HSS_DIM2(λ=3)",
        (4, 4, 4, 4): "HSS_DIM2(λ=4)",
        (4, 2, 2, 4): "FLEX1(λ=2, δ=4)",
        (2, 4, 4, 2): "FLEX1(λ=4, δ=2)",
    }
    assert [survivor["table"] for survivor in report["survivors"]] == sorted(labels)


@pytest.mark.ai_generated
def test_predicted_tables_over_gf5() -> None:
    predicted = axial_verification.classify.predicted_dim2_tables(p=5)

    assert len(predicted) == 5
    assert predicted[(0, 0, 0, 0)] == "TWO_B"


@pytest.mark.ai_generated
def test_search_in_characteristic_three_warns() -> None:
    with pytest.warns(axial_verification.Char3Warning):
        report = axial_verification.classify.search_dim2_ff(p=3)

    assert len(report["survivors"]) == 2
    assert report["matches_prediction"] is True


@pytest.mark.ai_generated
def test_search_respects_the_enumeration_cap(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("AXIAL_ENUM_CAP", "100")

    with pytest.raises(axial_verification.EnumerationTooLarge):
        axial_verification.classify.search_dim2_ff(p=5)


@pytest.mark.ai_generated
def test_search_rejects_characteristic_two() -> None:
    with pytest.raises(axial_verification.CharTwoUnsupported):
        axial_verification.classify.search_dim2_ff(p=2)


@pytest.mark.slow
@pytest.mark.ai_generated
def test_search_over_gf7_with_workers() -> None:
    report = axial_verification.classify.search_dim2_ff(p=7, workers=2)

    assert len(report["survivors"]) == 7
    assert report["matches_prediction"] is True
    assert report["all_flexible"] is True


@pytest.mark.ai_generated
def test_tables_with_a_coefficient_one_have_no_axis_pair() -> None:
    # ab = p1·a + q1·b and ba = p2·a + q2·b; a coefficient 1 repeats the eigenvalue 1 of some L or R.
    gf5 = axial_verification.scalars.ScalarDomain.prime_field(p=5)
    pruned = [coefficients for coefficients in itertools.product(range(5), repeat=4) if 1 in coefficients]
    assert len(pruned) == 5**4 - 4**4

    for p1, q1, p2, q2 in pruned:
        algebra = axial_verification.algebra.build_algebra(
            domain=gf5, dim=2, basis_names=["a", "b"], table=[[[1, 0], [p1, q1]], [[p2, q2], [0, 1]]]
        )
        a, b = algebra.basis()
        reports = []
        for generator in (a, b):
            try:
                left_type, right_type = axial_verification.axes.detect_axis_type(algebra=algebra, a=generator)
            except axial_verification.NotAnAxis:
                break
            reports.append(
                axial_verification.axes.check_axis(
                    algebra=algebra,
                    a=generator,
                    lambda_value=axial_verification.axes.resolve_type(algebra=algebra, value=left_type),
                    delta_value=axial_verification.axes.resolve_type(algebra=algebra, value=right_type),
                )
            )
        else:
            assert not all(report.is_axis for report in reports), (p1, q1, p2, q2)
