import dataclasses
import typing

from .._exceptions import DomainMismatch, ShapeError
from ..scalars import Scalar, ScalarDomain, parse_scalar


@dataclasses.dataclass(frozen=True, eq=False)
class Element:
    """
    A coordinate vector of an algebra element in the basis of its ambient algebra.

    Parameters
    ----------
    coords : tuple of Scalar
        The coordinates, all over one domain.
    """

    coords: tuple[Scalar, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(self.coords))
        if len(self.coords) == 0:
            message = "An element needs at least one coordinate."
            raise ShapeError(message)

        domains = {coordinate.domain for coordinate in self.coords}
        if len(domains) != 1:
            labels = sorted(domain.label for domain in domains)
            message = f"All coordinates of an element must share one domain, but found {labels}."
            raise DomainMismatch(message)

    @classmethod
    def zero(cls, domain: ScalarDomain, dim: int) -> typing.Self:
        return cls(coords=tuple(domain.zero() for _ in range(dim)))

    @classmethod
    def basis(cls, domain: ScalarDomain, dim: int, index: int) -> typing.Self:
        return cls(coords=tuple(domain.one() if position == index else domain.zero() for position in range(dim)))

    @classmethod
    def from_values(cls, domain: ScalarDomain, values: typing.Iterable[Scalar | int | str]) -> typing.Self:
        """Build an element from scalars, integers or scalar text such as '1/3'."""
        coords = []
        for value in values:
            match value:
                case Scalar():
                    coords.append(value)
                case int():
                    coords.append(domain.from_int(value))
                case str():
                    coords.append(parse_scalar(text=value, domain=domain))
                case _:
                    message = f"Cannot read a coordinate from {value!r}."
                    raise TypeError(message)
        return cls(coords=tuple(coords))

    @property
    def domain(self) -> ScalarDomain:
        return self.coords[0].domain

    @property
    def dim(self) -> int:
        return len(self.coords)

    @property
    def is_zero(self) -> bool:
        return all(coordinate.is_zero for coordinate in self.coords)

    def _check_compatible(self, other: "Element") -> None:
        if other.domain != self.domain:
            message = f"Cannot combine an element over {self.domain.label} with one over {other.domain.label}."
            raise DomainMismatch(message)
        if other.dim != self.dim:
            message = f"Cannot combine elements of dimensions {self.dim} and {other.dim}."
            raise ShapeError(message)

    def __add__(self, other: "Element") -> "Element":
        self._check_compatible(other)
        return Element(coords=tuple(left + right for left, right in zip(self.coords, other.coords)))

    def __sub__(self, other: "Element") -> "Element":
        self._check_compatible(other)
        return Element(coords=tuple(left - right for left, right in zip(self.coords, other.coords)))

    def __neg__(self) -> "Element":
        return Element(coords=tuple(-coordinate for coordinate in self.coords))

    def __rmul__(self, scalar: Scalar | int) -> "Element":
        if not isinstance(scalar, (Scalar, int)):
            return NotImplemented
        return Element(coords=tuple(scalar * coordinate for coordinate in self.coords))

    def __mul__(self, scalar: Scalar | int) -> "Element":
        return self.__rmul__(scalar)

    def __getitem__(self, index: int) -> Scalar:
        return self.coords[index]

    def __iter__(self) -> typing.Iterator[Scalar]:
        return iter(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element) or other.domain != self.domain or other.dim != self.dim:
            return False
        return (self - other).is_zero

    def __hash__(self) -> int:
        return hash(tuple(self.coords))

    def sort_key(self) -> tuple:
        return tuple(coordinate.sort_key() for coordinate in self.coords)

    def __str__(self) -> str:
        return "(" + ", ".join(str(coordinate) for coordinate in self.coords) + ")"

    def __repr__(self) -> str:
        return f"Element{self}"
