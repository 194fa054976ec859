"""Tests for exact scalars over Q, GF(p) and Q(t): parsing, printing and arithmetic."""

import fractions

import hypothesis
import hypothesis.strategies
import pytest

import axial_verification

RATIONAL = axial_verification.scalars.ScalarDomain.rational()
GF5 = axial_verification.scalars.ScalarDomain.prime_field(p=5)
GF7 = axial_verification.scalars.ScalarDomain.prime_field(p=7)
GENERIC = axial_verification.scalars.ScalarDomain.rational_function()


def _parse(text: str, domain=RATIONAL):
    return axial_verification.scalars.parse_scalar(text=text, domain=domain)


@pytest.mark.ai_generated
@pytest.mark.parametrize(
    "text, domain, expected",
    [
        ("1/3", RATIONAL, "1/3"),
        ("-2/4", RATIONAL, "-1/2"),
        (" 6 / 3 ", RATIONAL, "2"),
        ("1/2", GF5, "3"),
        ("-1", GF5, "4"),
        ("(2*t-1)/(t+3)", GENERIC, "(2*t - 1)/(t + 3)"),
        ("(t^2-1)/(t-1)", GENERIC, "t + 1"),
        ("1/(1-t)", GENERIC, "(-1)/(t - 1)"),
    ],
)
def test_print_scalar_is_canonical(text: str, domain, expected: str) -> None:
    scalar = _parse(text=text, domain=domain)
    assert axial_verification.scalars.print_scalar(scalar) == expected
    assert _parse(text=expected, domain=domain) == scalar


@pytest.mark.ai_generated
@pytest.mark.parametrize(
    "text, position",
    [
        ("", 0),
        ("1/x", 2),
        ("3/", 2),
    ],
)
def test_parse_error_reports_position(text: str, position: int) -> None:
    with pytest.raises(axial_verification.ParseError) as error_info:
        _parse(text=text)
    assert error_info.value.position == position


@pytest.mark.ai_generated
def test_unbalanced_parenthesis_over_rational_functions() -> None:
    with pytest.raises(axial_verification.ParseError, match="Unbalanced parenthesis") as error_info:
        _parse(text="(t+1", domain=GENERIC)
    assert error_info.value.position == 0


@pytest.mark.ai_generated
@pytest.mark.parametrize(
    "text, domain",
    [
        ("1/0", RATIONAL),
        ("1/5", GF5),
        ("1/(t-t)", GENERIC),
    ],
)
def test_zero_denominator(text: str, domain) -> None:
    with pytest.raises(axial_verification.DivisionByZero):
        _parse(text=text, domain=domain)


@pytest.mark.ai_generated
def test_domain_labels() -> None:
    ScalarDomain = axial_verification.scalars.ScalarDomain

    assert ScalarDomain.from_text(text="GF(7)") == GF7
    assert ScalarDomain.from_text(text="GF:7").label == "GF:7"
    assert ScalarDomain.from_text(text="Q(t)") == GENERIC
    assert axial_verification.scalars.characteristic(domain=GF5) == 5
    assert axial_verification.scalars.characteristic(domain=GENERIC) == 0

    with pytest.raises(axial_verification.CharTwoUnsupported):
        ScalarDomain.from_text(text="GF:2")
    with pytest.raises(ValueError, match="odd prime"):
        ScalarDomain.prime_field(p=9)
    with pytest.raises(ValueError, match="Unknown scalar domain"):
        ScalarDomain.from_text(text="R")


@pytest.mark.ai_generated
def test_mixing_domains_raises() -> None:
    with pytest.raises(axial_verification.DomainMismatch):
        _parse(text="1/2") + _parse(text="1/2", domain=GF5)
    with pytest.raises(axial_verification.DomainMismatch):
        axial_verification.scalars.scalar_arith(domain=GF5, op="add", x=_parse(text="1"), y=_parse(text="2"))


@pytest.mark.ai_generated
def test_scalar_arith() -> None:
    scalar_arith = axial_verification.scalars.scalar_arith
    x, y = _parse(text="2", domain=GF7), _parse(text="5", domain=GF7)

    assert scalar_arith(domain=GF7, op="add", x=x, y=y) == 0
    assert scalar_arith(domain=GF7, op="mul", x=x, y=y) == 3
    assert scalar_arith(domain=GF7, op="div", x=x, y=y) * y == x
    with pytest.raises(axial_verification.DivisionByZero):
        scalar_arith(domain=GF7, op="div", x=x, y=GF7.zero())


@pytest.mark.ai_generated
def test_canonical_fraction_normalises_content_and_sign() -> None:
    scalar = _parse(text="(-2*t-2)/(-4)", domain=GENERIC)
    assert axial_verification.scalars.canonical_fraction(scalar) == ([1, 1], [2])

    with pytest.raises(axial_verification.DomainMismatch):
        axial_verification.scalars.canonical_fraction(_parse(text="1/2"))


@pytest.mark.ai_generated
def test_substitute() -> None:
    scalar = _parse(text="(2*t-1)/(t+3)", domain=GENERIC)

    assert axial_verification.scalars.substitute(scalar=scalar, value=RATIONAL.one()) == _parse(text="1/4")
    assert axial_verification.scalars.substitute(scalar=scalar, value=GF5.from_int(1)) == GF5.from_int(4).inverse()
    with pytest.raises(axial_verification.DivisionByZero, match="pole"):
        axial_verification.scalars.substitute(scalar=scalar, value=RATIONAL.from_int(-3))


@pytest.mark.ai_generated
@hypothesis.given(value=hypothesis.strategies.fractions(max_denominator=10_000))
def test_rationals_print_like_fractions(value: fractions.Fraction) -> None:
    scalar = RATIONAL.from_fraction(value.numerator, value.denominator)

    assert axial_verification.scalars.print_scalar(scalar) == str(value)
    assert scalar.as_fraction() == value


@pytest.mark.ai_generated
@hypothesis.given(
    x=hypothesis.strategies.integers(min_value=0, max_value=6),
    y=hypothesis.strategies.integers(min_value=0, max_value=6),
    z=hypothesis.strategies.integers(min_value=0, max_value=6),
)
def test_prime_field_axioms(x: int, y: int, z: int) -> None:
    first, second, third = (GF7.from_int(value) for value in (x, y, z))

    assert first * (second + third) == first * second + first * third
    assert (first - second) + second == first
    if not first.is_zero:
        assert first * first.inverse() == 1
