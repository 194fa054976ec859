import dataclasses
import typing

from ._element import Element
from ._subspace import Subspace
from .._exceptions import DomainMismatch, ShapeError
from ..scalars import Scalar, ScalarDomain


@dataclasses.dataclass(frozen=True, eq=False)
class Operator:
    """
    A linear map of F^n given by its square matrix; column j is the image of the j-th basis vector.

    Composition `first @ second` applies `second` first, matching the matrix product.
    """

    matrix: tuple[tuple[Scalar, ...], ...]

    def __post_init__(self) -> None:
        matrix = tuple(tuple(row) for row in self.matrix)
        object.__setattr__(self, "matrix", matrix)
        if not matrix or any(len(row) != len(matrix) for row in matrix):
            message = f"An operator needs a non-empty square matrix, got {len(matrix)} rows of lengths "
            message += f"{sorted({len(row) for row in matrix})}."
            raise ShapeError(message)

    @classmethod
    def from_columns(cls, columns: typing.Sequence[Element]) -> typing.Self:
        dim = len(columns)
        return cls(matrix=tuple(tuple(columns[column][row] for column in range(dim)) for row in range(dim)))

    @classmethod
    def scalar(cls, domain: ScalarDomain, dim: int, value: Scalar | int) -> typing.Self:
        value = value if isinstance(value, Scalar) else domain.from_int(value)
        return cls(
            matrix=tuple(
                tuple(value if row == column else domain.zero() for column in range(dim)) for row in range(dim)
            )
        )

    @classmethod
    def identity(cls, domain: ScalarDomain, dim: int) -> typing.Self:
        return cls.scalar(domain=domain, dim=dim, value=1)

    @property
    def dim(self) -> int:
        return len(self.matrix)

    @property
    def domain(self) -> ScalarDomain:
        return self.matrix[0][0].domain

    def entry(self, row: int, column: int) -> Scalar:
        return self.matrix[row][column]

    def columns(self) -> list[Element]:
        return [Element(coords=tuple(row[column] for row in self.matrix)) for column in range(self.dim)]

    def _check_compatible(self, other: "Operator") -> None:
        if other.domain != self.domain:
            message = f"Cannot combine operators over {self.domain.label} and {other.domain.label}."
            raise DomainMismatch(message)
        if other.dim != self.dim:
            message = f"Cannot combine operators of sizes {self.dim} and {other.dim}."
            raise ShapeError(message)

    def apply(self, element: Element) -> Element:
        if element.domain != self.domain:
            message = f"Cannot apply an operator over {self.domain.label} to an element over {element.domain.label}."
            raise DomainMismatch(message)
        if element.dim != self.dim:
            message = f"Cannot apply an operator of size {self.dim} to an element of length {element.dim}."
            raise ShapeError(message)

        coords = []
        for row in self.matrix:
            total = self.domain.zero()
            for entry, coordinate in zip(row, element.coords):
                total = total + entry * coordinate
            coords.append(total)
        return Element(coords=tuple(coords))

    def __call__(self, element: Element) -> Element:
        return self.apply(element=element)

    def __matmul__(self, other: "Operator") -> "Operator":
        self._check_compatible(other)
        return Operator.from_columns(columns=[self.apply(element=column) for column in other.columns()])

    def __add__(self, other: "Operator") -> "Operator":
        self._check_compatible(other)
        return Operator(
            matrix=tuple(
                tuple(left + right for left, right in zip(self_row, other_row))
                for self_row, other_row in zip(self.matrix, other.matrix)
            )
        )

    def __sub__(self, other: "Operator") -> "Operator":
        return self + (-other)

    def __neg__(self) -> "Operator":
        return Operator(matrix=tuple(tuple(-entry for entry in row) for row in self.matrix))

    def __rmul__(self, value: Scalar | int) -> "Operator":
        if not isinstance(value, (Scalar, int)):
            return NotImplemented
        return Operator(matrix=tuple(tuple(value * entry for entry in row) for row in self.matrix))

    def shifted(self, value: Scalar | int) -> "Operator":
        """The operator M - value·I."""
        return self - Operator.scalar(domain=self.domain, dim=self.dim, value=value)

    def power(self, exponent: int) -> "Operator":
        result = Operator.identity(domain=self.domain, dim=self.dim)
        for _ in range(exponent):
            result = result @ self
        return result

    def vectorized(self) -> Element:
        """The columns stacked into one vector of length n²."""
        return Element(coords=tuple(entry for column in self.columns() for entry in column.coords))

    @property
    def is_zero(self) -> bool:
        return all(entry.is_zero for row in self.matrix for entry in row)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Operator) or other.domain != self.domain or other.dim != self.dim:
            return False
        return (self - other).is_zero

    __hash__ = None

    def kernel(self) -> Subspace:
        return Subspace.solutions(domain=self.domain, ambient_dim=self.dim, equations=self.matrix)

    def image(self) -> Subspace:
        return Subspace.span(domain=self.domain, ambient_dim=self.dim, vectors=self.columns())

    def __str__(self) -> str:
        return "[" + "; ".join(", ".join(str(entry) for entry in row) for row in self.matrix) + "]"
