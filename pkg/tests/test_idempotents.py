import pytest

import axial_verification

GF5 = axial_verification.scalars.ScalarDomain.prime_field(p=5)
GENERIC = axial_verification.scalars.ScalarDomain.rational_function()


@pytest.mark.ai_generated
@pytest.mark.parametrize("workers", [1, 2])
def test_flex2_over_gf5_has_twelve_idempotents(workers: int) -> None:
    algebra = axial_verification.catalog.make_flex2(domain=GF5, lambda_value=2).algebra
    a, b, x = algebra.basis()

    idempotents = axial_verification.idempotents.enumerate_idempotents_ff(algebra=algebra, workers=workers)
    assert idempotents.complete is True
    assert len(idempotents) == 2 * 5 + 2
    assert algebra.zero() in idempotents
    assert a + b - x in idempotents
    assert len(idempotents.nonzero) == 11
    assert list(idempotents) == sorted(idempotents, key=lambda element: element.sort_key())


@pytest.mark.ai_generated
@pytest.mark.parametrize("p", [5, 7, pytest.param(11, marks=pytest.mark.slow)])
def test_flex2_census_over_prime_fields(p: int) -> None:
    domain = axial_verification.scalars.ScalarDomain.prime_field(p=p)
    algebra = axial_verification.catalog.make_flex2(domain=domain, lambda_value=2).algebra
    a, b, x = algebra.basis()

    idempotents = axial_verification.idempotents.enumerate_idempotents_ff(algebra=algebra)
    assert len(idempotents) == 2 * p + 2
    assert {algebra.zero(), a + b - x} <= set(idempotents)

    axes = {axis for axis, _ in axial_verification.axes.find_axes_ff(algebra=algebra)}
    assert axes == {generator + value * x for generator in (a, b) for value in domain.elements()}


@pytest.mark.ai_generated
def test_zero_workers_is_rejected() -> None:
    algebra = axial_verification.catalog.make_2B(domain=GF5).algebra

    with pytest.raises(ValueError, match="nonzero"):
        axial_verification.idempotents.enumerate_idempotents_ff(algebra=algebra, workers=0)
    assert len(axial_verification.idempotents.enumerate_idempotents_ff(algebra=algebra, workers=-1)) == 4


@pytest.mark.ai_generated
def test_idempotents_of_2B() -> None:
    algebra = axial_verification.catalog.make_2B(domain=GF5).algebra
    a, b = algebra.basis()

    idempotents = axial_verification.idempotents.enumerate_idempotents_ff(algebra=algebra)
    assert set(idempotents) == {algebra.zero(), a, b, a + b}


@pytest.mark.ai_generated
def test_enumeration_needs_a_finite_field() -> None:
    algebra = axial_verification.catalog.make_flex2(domain="Q", lambda_value="1/3").algebra

    with pytest.raises(axial_verification.InfiniteField):
        axial_verification.idempotents.enumerate_idempotents_ff(algebra=algebra)


@pytest.mark.ai_generated
def test_enumeration_cap(monkeypatch: pytest.MonkeyPatch) -> None:
    algebra = axial_verification.catalog.make_flex2(domain=GF5, lambda_value=2).algebra
    monkeypatch.setenv("AXIAL_ENUM_CAP", "100")

    assert axial_verification.idempotents.check_enumeration_size(algebra=algebra, exponent=2) == 25
    with pytest.raises(axial_verification.EnumerationTooLarge, match="enumeration cap of 100"):
        axial_verification.idempotents.enumerate_idempotents_ff(algebra=algebra)


@pytest.mark.ai_generated
def test_idempotent_families_over_rational_functions() -> None:
    algebra = axial_verification.catalog.make_flex2(domain=GENERIC, lambda_value="1/3").algebra
    a, b, x = algebra.basis()
    t = GENERIC.parameter()

    assert axial_verification.idempotents.verify_idempotent_family(algebra=algebra, y=a + t * x)
    assert axial_verification.idempotents.verify_idempotent_family(algebra=algebra, y=b + t * x)
    assert not axial_verification.idempotents.verify_idempotent_family(algebra=algebra, y=t * a)

    rational = axial_verification.catalog.make_flex2(domain="Q", lambda_value="1/3").algebra
    with pytest.raises(axial_verification.DomainMismatch):
        axial_verification.idempotents.verify_idempotent_family(algebra=rational, y=rational.basis_element("a"))
