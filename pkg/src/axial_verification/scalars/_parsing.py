import math
import re
import tokenize

import sympy
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from ._domain import ScalarDomain, ScalarKind
from ._globals import (
    _INTEGER_FRACTION_CHARACTERS,
    _INTEGER_FRACTION_PATTERN,
    _RATIONAL_FUNCTION_CHARACTERS,
    PARAMETER_SYMBOL,
)
from ._scalar import Scalar
from .._exceptions import DivisionByZero, DomainMismatch, ParseError

_INTEGER_FRACTION_PREFIX = re.compile(pattern=r"[+-]?\d*(?:/[+-]?\d*)?")


def _compact(text: str) -> tuple[str, list[int]]:
    """Drop whitespace, remembering where every kept character sat in the original text."""
    positions = [position for position, character in enumerate(text) if not character.isspace()]
    return "".join(text[position] for position in positions), positions


def _first_invalid_position(text: str, allowed: frozenset[str]) -> int | None:
    for position, character in enumerate(text):
        if not character.isspace() and character not in allowed:
            return position
    return None


def _unbalanced_parenthesis_position(text: str) -> int | None:
    open_positions = []
    for position, character in enumerate(text):
        if character == "(":
            open_positions.append(position)
        elif character == ")":
            if not open_positions:
                return position
            open_positions.pop()
    return open_positions[0] if open_positions else None


def parse_scalar(text: str, domain: ScalarDomain) -> Scalar:
    """
    Parse the text form of a scalar.

    Integers and 'n/d' fractions are accepted in every domain. Over Q(t) the text may also be a
    rational function of `t` such as '(2*t-1)/(t+3)', with '^' for powers. Whitespace is ignored.

    Parameters
    ----------
    text : str
        The text to parse.
    domain : ScalarDomain
        The field the scalar belongs to.

    Returns
    -------
    Scalar
        The parsed scalar in canonical form.

    Raises
    ------
    ParseError
        If the text does not match the grammar; `position` points at the offending character.
    DivisionByZero
        If a denominator is zero in the domain.
    """
    compact_text, positions = _compact(text)
    if not compact_text:
        message = "Cannot parse a scalar from empty text."
        raise ParseError(message, position=0)

    match domain.kind:
        case ScalarKind.RATIONAL | ScalarKind.PRIME_FIELD:
            return _parse_integer_fraction(text=text, compact_text=compact_text, positions=positions, domain=domain)
        case ScalarKind.RATIONAL_FUNCTION:
            return _parse_rational_function(text=text, compact_text=compact_text, positions=positions, domain=domain)


def _parse_integer_fraction(*, text: str, compact_text: str, positions: list[int], domain: ScalarDomain) -> Scalar:
    invalid_position = _first_invalid_position(text=text, allowed=_INTEGER_FRACTION_CHARACTERS)
    if invalid_position is not None:
        message = f"Unexpected character {text[invalid_position]!r} at position {invalid_position} in '{text}'."
        raise ParseError(message, position=invalid_position)

    match = _INTEGER_FRACTION_PATTERN.match(compact_text)
    if match is None:
        prefix_end = _INTEGER_FRACTION_PREFIX.match(compact_text).end()
        position = positions[prefix_end] if prefix_end < len(compact_text) else len(text)
        message = f"Expected an integer or a fraction 'n/d' but found '{text}' (error at position {position})."
        raise ParseError(message, position=position)

    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    return domain.from_fraction(numerator, denominator)


def _parse_rational_function(*, text: str, compact_text: str, positions: list[int], domain: ScalarDomain) -> Scalar:
    invalid_position = _first_invalid_position(text=text, allowed=_RATIONAL_FUNCTION_CHARACTERS)
    if invalid_position is not None:
        message = f"Unexpected character {text[invalid_position]!r} at position {invalid_position} in '{text}'."
        raise ParseError(message, position=invalid_position)

    unbalanced_position = _unbalanced_parenthesis_position(text=text)
    if unbalanced_position is not None:
        message = f"Unbalanced parenthesis at position {unbalanced_position} in '{text}'."
        raise ParseError(message, position=unbalanced_position)

    try:
        expression = parse_expr(
            compact_text,
            local_dict={"t": PARAMETER_SYMBOL},
            transformations=standard_transformations + (convert_xor,),
        )
    except (SyntaxError, tokenize.TokenError) as exception:
        offset = getattr(exception, "offset", None) or len(compact_text)
        position = positions[min(offset, len(compact_text)) - 1]
        message = f"Could not parse '{text}' as a rational function of t (near position {position})."
        raise ParseError(message, position=position) from exception

    if expression.has(sympy.zoo, sympy.nan, sympy.oo):
        message = f"The scalar '{text}' has a zero denominator."
        raise DivisionByZero(message)
    if expression.free_symbols - {PARAMETER_SYMBOL} or not expression.is_rational_function(PARAMETER_SYMBOL):
        message = f"The text '{text}' is not a rational function of t."
        raise ParseError(message, position=0)

    return Scalar(domain=domain, raw=domain.field.from_sympy(expression))


def canonical_fraction(scalar: Scalar) -> tuple[list[int], list[int]]:
    """
    Return the integer coefficient lists (highest degree first) of the canonical numerator and denominator.

    The two polynomials are coprime, their joint integer content is 1, and the leading
    coefficient of the denominator is positive.
    """
    if scalar.domain.kind is not ScalarKind.RATIONAL_FUNCTION:
        message = f"Canonical fractions are defined for Q(t) scalars, not {scalar.domain.label}."
        raise DomainMismatch(message)

    numerator_expression, denominator_expression = sympy.fraction(sympy.cancel(scalar.to_sympy()))
    numerator = sympy.Poly(numerator_expression, PARAMETER_SYMBOL, domain=sympy.QQ).all_coeffs()
    denominator = sympy.Poly(denominator_expression, PARAMETER_SYMBOL, domain=sympy.QQ).all_coeffs()

    scale = math.lcm(*(int(sympy.Rational(coefficient).q) for coefficient in numerator + denominator))
    integer_numerator = [int(coefficient * scale) for coefficient in numerator]
    integer_denominator = [int(coefficient * scale) for coefficient in denominator]

    content = math.gcd(*integer_numerator, *integer_denominator)
    sign = -1 if integer_denominator[0] < 0 else 1
    integer_numerator = [sign * coefficient // content for coefficient in integer_numerator]
    integer_denominator = [sign * coefficient // content for coefficient in integer_denominator]

    return integer_numerator, integer_denominator


def _format_polynomial(coefficients: list[int]) -> str:
    expression = sympy.Poly(coefficients, PARAMETER_SYMBOL).as_expr()
    return str(expression).replace("**", "^")


def print_scalar(scalar: Scalar) -> str:
    """
    Render a scalar in the canonical text form read back by `parse_scalar`.

    Rationals print as 'n' or 'n/d', prime-field elements as their residue in [0, p), and
    rational functions as 'N' or '(N)/(D)' with `N`, `D` from `canonical_fraction`.
    """
    match scalar.domain.kind:
        case ScalarKind.RATIONAL:
            value = scalar.as_fraction()
            return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
        case ScalarKind.PRIME_FIELD:
            return str(scalar.residue)
        case ScalarKind.RATIONAL_FUNCTION:
            numerator, denominator = canonical_fraction(scalar)
            if denominator == [1]:
                return _format_polynomial(numerator)
            if len(numerator) == 1 and len(denominator) == 1:
                return f"{numerator[0]}/{denominator[0]}"
            return f"({_format_polynomial(numerator)})/({_format_polynomial(denominator)})"


def _evaluate_polynomial(coefficients: list[int], value: Scalar) -> Scalar:
    result = value.domain.zero()
    for coefficient in coefficients:
        result = result * value + coefficient
    return result


def substitute(scalar: Scalar, value: Scalar) -> Scalar:
    """
    Specialise a Q(t) scalar at t = `value`.

    Parameters
    ----------
    scalar : Scalar
        A rational function of t.
    value : Scalar
        The point to evaluate at; the result lives in `value.domain`.

    Raises
    ------
    DivisionByZero
        If `value` is a pole of `scalar` (in the target domain).
    """
    numerator, denominator = canonical_fraction(scalar)
    denominator_value = _evaluate_polynomial(coefficients=denominator, value=value)
    if denominator_value.is_zero:
        message = f"t = {value} is a pole of {scalar} over {value.domain.label}."
        raise DivisionByZero(message)
    return _evaluate_polynomial(coefficients=numerator, value=value) / denominator_value
