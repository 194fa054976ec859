import dataclasses
import re

import sympy

from ..algebra import Operator
from ..algebra._linear import solve_columns
from ..scalars import Scalar, ScalarDomain, ScalarKind

_VARIABLE_NAME = "x"
_SIMPLE_NUMBER = re.compile(pattern=r"^\d+(/\d+)?$")


@dataclasses.dataclass(frozen=True, eq=False)
class Polynomial:
    """
    A univariate polynomial with exact coefficients, constant term first.

    Parameters
    ----------
    coefficients : tuple of Scalar
        `coefficients[k]` multiplies x^k; the last coefficient is nonzero unless the polynomial is zero.
    """

    coefficients: tuple[Scalar, ...]

    @classmethod
    def linear_factors(cls, domain: ScalarDomain, roots: list[Scalar]) -> "Polynomial":
        """The monic product of (x - r) over `roots`."""
        result = cls(coefficients=(domain.one(),))
        for root in roots:
            result = result.times_linear(root=root)
        return result

    @property
    def domain(self) -> ScalarDomain:
        return self.coefficients[0].domain

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def evaluate(self, value: Scalar) -> Scalar:
        result = self.domain.zero()
        for coefficient in reversed(self.coefficients):
            result = result * value + coefficient
        return result

    def evaluate_operator(self, operator: Operator) -> Operator:
        result = Operator.scalar(domain=operator.domain, dim=operator.dim, value=0)
        for coefficient in reversed(self.coefficients):
            result = result @ operator + Operator.scalar(domain=operator.domain, dim=operator.dim, value=coefficient)
        return result

    def times_linear(self, root: Scalar) -> "Polynomial":
        """The product of this polynomial with (x - root)."""
        shifted = (self.domain.zero(),) + self.coefficients
        scaled = tuple(root * coefficient for coefficient in self.coefficients) + (self.domain.zero(),)
        return Polynomial(coefficients=tuple(high - low for high, low in zip(shifted, scaled)))

    def divide_linear(self, root: Scalar) -> tuple["Polynomial", Scalar]:
        """Synthetic division by (x - root): returns the quotient and the remainder."""
        quotient = []
        carry = self.domain.zero()
        for coefficient in reversed(self.coefficients):
            carry = carry * root + coefficient
            quotient.append(carry)
        remainder = quotient.pop()
        quotient_coefficients = tuple(reversed(quotient)) or (self.domain.zero(),)
        return Polynomial(coefficients=quotient_coefficients), remainder

    def to_sympy(self) -> sympy.Poly:
        """The polynomial as a sympy `Poly` in x over the matching sympy domain."""
        variable = sympy.Symbol(_VARIABLE_NAME)
        expression = sum(
            (coefficient.to_sympy() * variable**power for power, coefficient in enumerate(self.coefficients)),
            sympy.Integer(0),
        )
        match self.domain.kind:
            case ScalarKind.PRIME_FIELD:
                return sympy.Poly(expression, variable, modulus=self.domain.p)
            case _:
                return sympy.Poly(expression, variable, domain=self.domain.field)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial) or other.degree != self.degree:
            return False
        return all(left == right for left, right in zip(self.coefficients, other.coefficients))

    __hash__ = None

    def __str__(self) -> str:
        terms = []
        for power, coefficient in reversed(list(enumerate(self.coefficients))):
            if coefficient.is_zero:
                continue
            monomial = {0: "", 1: _VARIABLE_NAME}.get(power, f"{_VARIABLE_NAME}^{power}")
            text = str(coefficient)
            if not monomial:
                terms.append(f"+ {text}")
            elif coefficient.is_one:
                terms.append(f"+ {monomial}")
            elif (-coefficient).is_one:
                terms.append(f"- {monomial}")
            elif _SIMPLE_NUMBER.match(text.lstrip("-")):
                terms.append(f"+ {text}*{monomial}")
            else:
                terms.append(f"+ ({text})*{monomial}")

        if not terms:
            return "0"
        rendered = " ".join(terms).replace("+ -", "- ")
        return rendered[2:] if rendered.startswith("+ ") else rendered


def min_poly(operator: Operator) -> Polynomial:
    """
    The monic minimal polynomial of an operator.

    Found as the first linear dependence among the vectorized powers I, M, M², ...

    Parameters
    ----------
    operator : Operator
        A square matrix over a field.

    Returns
    -------
    Polynomial
        The monic polynomial of least degree that annihilates `operator`.
    """
    domain = operator.domain
    power = Operator.identity(domain=domain, dim=operator.dim)
    powers = [power.vectorized()]
    while True:
        power = power @ operator
        target = power.vectorized()
        combination = solve_columns(
            columns=[list(vector.coords) for vector in powers], target=list(target.coords), domain=domain
        )
        if combination is not None:
            return Polynomial(coefficients=tuple(-coefficient for coefficient in combination) + (domain.one(),))
        powers.append(target)
