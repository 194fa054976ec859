import dataclasses
import typing

from ._element import Element
from ._linear import nullspace_rows, row_reduce, solve_columns
from .._exceptions import DomainMismatch, ShapeError
from ..scalars import Scalar, ScalarDomain


@dataclasses.dataclass(frozen=True, eq=False)
class Subspace:
    """
    A linear subspace of F^n stored by its reduced row echelon basis.

    The echelon basis is canonical, so two subspaces are equal exactly when their bases agree.
    Construct instances through `Subspace.span`, `Subspace.zero` or `Subspace.whole`.
    """

    domain: ScalarDomain
    ambient_dim: int
    basis: tuple[Element, ...]
    pivots: tuple[int, ...]

    @classmethod
    def span(cls, domain: ScalarDomain, ambient_dim: int, vectors: typing.Iterable[Element]) -> typing.Self:
        rows = []
        for vector in vectors:
            if vector.domain != domain:
                message = f"Cannot span a subspace of {domain.label}^{ambient_dim} with a vector over {vector.domain}."
                raise DomainMismatch(message)
            if vector.dim != ambient_dim:
                message = f"Expected vectors of length {ambient_dim}, got {vector.dim}."
                raise ShapeError(message)
            rows.append(list(vector.coords))

        reduced_rows, pivots = row_reduce(rows=rows)
        basis = tuple(Element(coords=tuple(row)) for row in reduced_rows)
        return cls(domain=domain, ambient_dim=ambient_dim, basis=basis, pivots=tuple(pivots))

    @classmethod
    def zero(cls, domain: ScalarDomain, ambient_dim: int) -> typing.Self:
        return cls(domain=domain, ambient_dim=ambient_dim, basis=(), pivots=())

    @classmethod
    def whole(cls, domain: ScalarDomain, ambient_dim: int) -> typing.Self:
        vectors = [Element.basis(domain=domain, dim=ambient_dim, index=index) for index in range(ambient_dim)]
        return cls.span(domain=domain, ambient_dim=ambient_dim, vectors=vectors)

    @classmethod
    def solutions(
        cls, domain: ScalarDomain, ambient_dim: int, equations: typing.Sequence[typing.Sequence[Scalar]]
    ) -> typing.Self:
        """The subspace of vectors v with `equation · v = 0` for every equation row."""
        vectors = [
            Element(coords=tuple(vector))
            for vector in nullspace_rows(rows=equations, column_count=ambient_dim, domain=domain)
        ]
        return cls.span(domain=domain, ambient_dim=ambient_dim, vectors=vectors)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def is_zero(self) -> bool:
        return self.dim == 0

    def _check_compatible(self, other: "Subspace") -> None:
        if other.domain != self.domain or other.ambient_dim != self.ambient_dim:
            message = (
                f"Subspaces of {self.domain.label}^{self.ambient_dim} and "
                f"{other.domain.label}^{other.ambient_dim} cannot be combined."
            )
            raise DomainMismatch(message)

    def reduce(self, vector: Element) -> Element:
        """The remainder of `vector` after clearing its pivot entries with the echelon basis."""
        remainder = vector
        for row, pivot in zip(self.basis, self.pivots):
            coefficient = remainder[pivot]
            if not coefficient.is_zero:
                remainder = remainder - coefficient * row
        return remainder

    def contains(self, vector: Element) -> bool:
        return self.reduce(vector=vector).is_zero

    def __contains__(self, vector: Element) -> bool:
        return self.contains(vector=vector)

    def coordinates(self, vector: Element) -> tuple[Scalar, ...]:
        """Coordinates of `vector` with respect to the echelon basis; raises `ValueError` if outside."""
        if not self.contains(vector=vector):
            message = f"The vector {vector} does not lie in the subspace."
            raise ValueError(message)
        return tuple(vector[pivot] for pivot in self.pivots)

    def sum(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        return Subspace.span(domain=self.domain, ambient_dim=self.ambient_dim, vectors=self.basis + other.basis)

    def intersection(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        if self.is_zero or other.is_zero:
            return Subspace.zero(domain=self.domain, ambient_dim=self.ambient_dim)

        # Solve sum(c_i u_i) - sum(d_j w_j) = 0; each solution yields sum(c_i u_i) in both spaces.
        columns = [list(vector.coords) for vector in self.basis] + [list((-vector).coords) for vector in other.basis]
        equations = [[column[row] for column in columns] for row in range(self.ambient_dim)]
        combinations = nullspace_rows(rows=equations, column_count=len(columns), domain=self.domain)

        vectors = []
        for combination in combinations:
            vector = Element.zero(domain=self.domain, dim=self.ambient_dim)
            for coefficient, basis_vector in zip(combination[: self.dim], self.basis):
                vector = vector + coefficient * basis_vector
            vectors.append(vector)
        return Subspace.span(domain=self.domain, ambient_dim=self.ambient_dim, vectors=vectors)

    def is_subspace_of(self, other: "Subspace") -> bool:
        self._check_compatible(other)
        return all(other.contains(vector=vector) for vector in self.basis)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return False
        if other.domain != self.domain or other.ambient_dim != self.ambient_dim or other.dim != self.dim:
            return False
        return self.is_subspace_of(other)

    __hash__ = None

    def __str__(self) -> str:
        return "span{" + ", ".join(str(vector) for vector in self.basis) + "}"


def decompose_direct_sum(parts: typing.Sequence[Subspace], vector: Element) -> list[Element]:
    """
    Split `vector` into its components along subspaces whose sum is direct.

    Returns
    -------
    list of Element
        One component per part, summing to `vector`.

    Raises
    ------
    ValueError
        If the sum is not direct or does not contain `vector`.
    """
    columns = [list(basis_vector.coords) for part in parts for basis_vector in part.basis]
    solution = solve_columns(columns=columns, target=list(vector.coords), domain=vector.domain)
    if solution is None:
        message = f"The vector {vector} is not in the sum of the given subspaces."
        raise ValueError(message)

    components = []
    offset = 0
    for part in parts:
        component = Element.zero(domain=vector.domain, dim=vector.dim)
        for coefficient, basis_vector in zip(solution[offset : offset + part.dim], part.basis):
            component = component + coefficient * basis_vector
        components.append(component)
        offset += part.dim
    return components
