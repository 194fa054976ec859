import dataclasses
import enum
import functools
import typing

import sympy

from ._globals import PARAMETER_SYMBOL
from .._exceptions import CharTwoUnsupported, DivisionByZero, InfiniteField


class ScalarKind(enum.Enum):
    RATIONAL = "Q"
    PRIME_FIELD = "GF"
    RATIONAL_FUNCTION = "Qt"


@dataclasses.dataclass(frozen=True)
class ScalarDomain:
    """
    An exact field: the rationals, a prime field GF(p) with p odd, or the rational functions Q(t).

    Parameters
    ----------
    kind : ScalarKind
        Which of the three supported fields this is.
    p : int, optional
        The prime modulus; required for `ScalarKind.PRIME_FIELD` and forbidden otherwise.
    """

    kind: ScalarKind
    p: int | None = None

    def __post_init__(self) -> None:
        if self.kind is not ScalarKind.PRIME_FIELD:
            if self.p is not None:
                message = f"Only prime fields carry a modulus, but {self.kind.name} was given p={self.p}."
                raise ValueError(message)
            return

        if self.p is None:
            message = "A prime field requires the modulus `p`."
            raise ValueError(message)
        if self.p == 2:
            message = "Characteristic 2 is not supported: every construction assumes char(F) != 2."
            raise CharTwoUnsupported(message)
        if self.p < 2 or not sympy.isprime(self.p):
            message = f"The modulus of a prime field must be an odd prime, but received {self.p}."
            raise ValueError(message)

    @classmethod
    def rational(cls) -> typing.Self:
        return cls(kind=ScalarKind.RATIONAL)

    @classmethod
    def prime_field(cls, p: int) -> typing.Self:
        return cls(kind=ScalarKind.PRIME_FIELD, p=p)

    @classmethod
    def rational_function(cls) -> typing.Self:
        return cls(kind=ScalarKind.RATIONAL_FUNCTION)

    @classmethod
    def from_text(cls, text: str) -> typing.Self:
        """
        Parse a domain label such as 'Q', 'GF:5' or 'Qt'.

        The file format also spells prime fields as 'GF5' or 'GF(5)'; both are accepted.
        """
        label = text.strip().replace(" ", "")
        match label:
            case "Q" | "QQ":
                return cls.rational()
            case "Qt" | "Q(t)":
                return cls.rational_function()
            case _ if label.upper().startswith("GF"):
                modulus_text = label[2:].strip(":()")
                if not modulus_text.isdigit():
                    message = f"Could not read the modulus of the prime field from '{text}'."
                    raise ValueError(message)
                return cls.prime_field(p=int(modulus_text))
            case _:
                message = f"Unknown scalar domain '{text}'; expected one of 'Q', 'GF:p' or 'Qt'."
                raise ValueError(message)

    @property
    def label(self) -> str:
        match self.kind:
            case ScalarKind.PRIME_FIELD:
                return f"GF:{self.p}"
            case _:
                return self.kind.value

    @property
    def characteristic(self) -> int:
        return self.p if self.kind is ScalarKind.PRIME_FIELD else 0

    @property
    def is_finite(self) -> bool:
        return self.kind is ScalarKind.PRIME_FIELD

    @property
    def size(self) -> int:
        if not self.is_finite:
            message = f"The field {self.label} is infinite."
            raise InfiniteField(message)
        return self.p

    @functools.cached_property
    def field(self) -> typing.Any:
        """The underlying sympy domain doing the arithmetic."""
        match self.kind:
            case ScalarKind.RATIONAL:
                return sympy.QQ
            case ScalarKind.PRIME_FIELD:
                return sympy.GF(self.p, symmetric=False)
            case ScalarKind.RATIONAL_FUNCTION:
                return sympy.QQ.frac_field(PARAMETER_SYMBOL)

    def from_int(self, value: int) -> "Scalar":
        from ._scalar import Scalar

        return Scalar(domain=self, raw=self.field.convert(int(value)))

    def from_fraction(self, numerator: int, denominator: int = 1) -> "Scalar":
        if denominator == 0 or (self.is_finite and denominator % self.p == 0):
            message = f"The denominator {denominator} vanishes in {self.label}."
            raise DivisionByZero(message)
        return self.from_int(numerator) / self.from_int(denominator)

    def parameter(self) -> "Scalar":
        """The indeterminate t of Q(t)."""
        from ._scalar import Scalar

        if self.kind is not ScalarKind.RATIONAL_FUNCTION:
            message = f"Only Q(t) has a parameter, not {self.label}."
            raise ValueError(message)
        return Scalar(domain=self, raw=self.field.from_sympy(PARAMETER_SYMBOL))

    def zero(self) -> "Scalar":
        return self.from_int(0)

    def one(self) -> "Scalar":
        return self.from_int(1)

    def elements(self) -> typing.Iterator["Scalar"]:
        """Iterate over every element of a prime field in residue order 0, 1, ..., p - 1."""
        for residue in range(self.size):
            yield self.from_int(residue)

    def __str__(self) -> str:
        return self.label


def characteristic(domain: ScalarDomain) -> int:
    """Return 0 for Q and Q(t), and p for GF(p)."""
    return domain.characteristic
