import dataclasses
import fractions
import typing

from ._domain import ScalarDomain, ScalarKind
from .._exceptions import DivisionByZero, DomainMismatch

ScalarLike = typing.Union["Scalar", int]


@dataclasses.dataclass(frozen=True, eq=False)
class Scalar:
    """
    An exact field element tagged with its domain.

    Scalars are immutable. Arithmetic with a plain `int` coerces the integer into the same domain;
    arithmetic between different domains raises `DomainMismatch`.

    Parameters
    ----------
    domain : ScalarDomain
        The field this element belongs to.
    raw : object
        The sympy domain element carrying the value.
    """

    domain: ScalarDomain
    raw: typing.Any

    def _coerce(self, other: object) -> "Scalar | None":
        if isinstance(other, Scalar):
            if other.domain != self.domain:
                message = f"Cannot combine a scalar over {self.domain.label} with one over {other.domain.label}."
                raise DomainMismatch(message)
            return other
        if isinstance(other, int):
            return self.domain.from_int(other)

        return None

    def _new(self, raw: typing.Any) -> "Scalar":
        return Scalar(domain=self.domain, raw=raw)

    def __add__(self, other: ScalarLike) -> "Scalar":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._new(self.raw + other.raw)

    def __radd__(self, other: ScalarLike) -> "Scalar":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + self

    def __sub__(self, other: ScalarLike) -> "Scalar":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._new(self.raw - other.raw)

    def __rsub__(self, other: ScalarLike) -> "Scalar":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other: ScalarLike) -> "Scalar":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._new(self.raw * other.raw)

    def __rmul__(self, other: ScalarLike) -> "Scalar":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self

    def __truediv__(self, other: ScalarLike) -> "Scalar":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            message = f"Division by zero in {self.domain.label}."
            raise DivisionByZero(message)
        return self._new(self.raw / other.raw)

    def __rtruediv__(self, other: ScalarLike) -> "Scalar":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __neg__(self) -> "Scalar":
        return self._new(-self.raw)

    def __pow__(self, exponent: int) -> "Scalar":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.domain.one()
        for _ in range(exponent):
            result = result * self
        return result

    def inverse(self) -> "Scalar":
        return self.domain.one() / self

    @property
    def is_zero(self) -> bool:
        return bool(self.domain.field.is_zero(self.raw))

    @property
    def is_one(self) -> bool:
        return (self - 1).is_zero

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = self.domain.from_int(other)
        if not isinstance(other, Scalar) or other.domain != self.domain:
            return False
        return (self - other).is_zero

    def __hash__(self) -> int:
        return hash((self.domain, self.sort_key()))

    @property
    def residue(self) -> int:
        """The representative in [0, p) of a prime-field element."""
        if self.domain.kind is not ScalarKind.PRIME_FIELD:
            message = f"Only prime-field scalars have a residue, not {self.domain.label}."
            raise DomainMismatch(message)
        return int(self.domain.field.to_int(self.raw)) % self.domain.p

    def as_fraction(self) -> fractions.Fraction:
        """The value of a rational scalar as a `fractions.Fraction`."""
        if self.domain.kind is not ScalarKind.RATIONAL:
            message = f"Only rational scalars convert to fractions, not {self.domain.label}."
            raise DomainMismatch(message)
        field = self.domain.field
        return fractions.Fraction(int(field.numer(self.raw)), int(field.denom(self.raw)))

    def to_sympy(self) -> typing.Any:
        return self.domain.field.to_sympy(self.raw)

    def sort_key(self) -> fractions.Fraction | int | str:
        """A deterministic key; keys of scalars over one domain are mutually comparable."""
        match self.domain.kind:
            case ScalarKind.RATIONAL:
                return self.as_fraction()
            case ScalarKind.PRIME_FIELD:
                return self.residue
            case ScalarKind.RATIONAL_FUNCTION:
                from ._parsing import print_scalar

                return print_scalar(self)

    def to_domain(self, domain: ScalarDomain) -> "Scalar":
        """
        Map this scalar into another domain along the canonical embedding or reduction.

        Rationals embed into Q(t) and reduce into GF(p); any other change of domain raises `DomainMismatch`.
        """
        if domain == self.domain:
            return self
        if self.domain.kind is ScalarKind.RATIONAL and domain.kind is not ScalarKind.RATIONAL:
            value = self.as_fraction()
            return domain.from_fraction(value.numerator, value.denominator)

        message = f"There is no canonical map from {self.domain.label} to {domain.label}."
        raise DomainMismatch(message)

    def __str__(self) -> str:
        from ._parsing import print_scalar

        return print_scalar(self)

    def __repr__(self) -> str:
        return f"Scalar({self.domain.label}, {self})"


def scalar_arith(
    domain: ScalarDomain, op: typing.Literal["add", "sub", "mul", "div"], x: Scalar, y: Scalar
) -> Scalar:
    """
    Apply one field operation to two scalars of `domain`.

    Raises
    ------
    DomainMismatch
        If `x` or `y` does not belong to `domain`.
    DivisionByZero
        If `op` is 'div' and `y` is zero.
    """
    for operand in (x, y):
        if operand.domain != domain:
            message = f"The operand {operand!r} does not belong to {domain.label}."
            raise DomainMismatch(message)

    match op:
        case "add":
            return x + y
        case "sub":
            return x - y
        case "mul":
            return x * y
        case "div":
            return x / y
        case _:
            message = f"Unknown operation '{op}'; expected one of 'add', 'sub', 'mul' or 'div'."
            raise ValueError(message)
