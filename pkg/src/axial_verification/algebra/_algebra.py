import dataclasses
import re
import typing

from ._element import Element
from ._operator import Operator
from .._exceptions import DomainMismatch, ShapeError
from ..scalars import Scalar, ScalarDomain, ScalarKind, substitute

TableEntry = Element | typing.Sequence[Scalar | int | str]

_SIMPLE_NUMBER = re.compile(pattern=r"^\d+(/\d+)?$")


@dataclasses.dataclass(frozen=True, eq=False)
class Algebra:
    """
    A finite-dimensional algebra given by structure constants.

    Nothing is assumed about associativity, commutativity or a unit.
    `table[i][j]` is the product of the i-th and j-th basis vectors. Build instances with `build_algebra`.
    """

    domain: ScalarDomain
    dim: int
    basis_names: tuple[str, ...]
    table: tuple[tuple[Element, ...], ...]

    def basis(self) -> list[Element]:
        return [Element.basis(domain=self.domain, dim=self.dim, index=index) for index in range(self.dim)]

    def basis_element(self, name_or_index: str | int) -> Element:
        index = self.basis_names.index(name_or_index) if isinstance(name_or_index, str) else name_or_index
        return Element.basis(domain=self.domain, dim=self.dim, index=index)

    def zero(self) -> Element:
        return Element.zero(domain=self.domain, dim=self.dim)

    def element(self, coords: typing.Iterable[Scalar | int | str]) -> Element:
        element = Element.from_values(domain=self.domain, values=coords)
        if element.dim != self.dim:
            message = f"Expected {self.dim} coordinates but received {element.dim}."
            raise ShapeError(message)
        return element

    def element_from_terms(self, terms: typing.Mapping[str, Scalar | int | str]) -> Element:
        """Build an element from basis names and coefficients, e.g. `{"a": 1, "x": -1}` for a - x."""
        values: list[Scalar | int | str] = [0] * self.dim
        for name, coefficient in terms.items():
            if name not in self.basis_names:
                message = f"Unknown basis element '{name}'; the basis is {list(self.basis_names)}."
                raise ValueError(message)
            values[self.basis_names.index(name)] = coefficient
        return self.element(coords=values)

    def format_element(self, element: Element) -> str:
        """Render an element as a combination of basis names, such as 'a + b - x'."""
        terms = []
        for coefficient, name in zip(element.coords, self.basis_names):
            if coefficient.is_zero:
                continue

            text = str(coefficient)
            if coefficient.is_one:
                terms.append(("+", name))
            elif (-coefficient).is_one:
                terms.append(("-", name))
            elif _SIMPLE_NUMBER.match(text[1:] if text.startswith("-") else text):
                terms.append(("-", f"{text[1:]}*{name}") if text.startswith("-") else ("+", f"{text}*{name}"))
            else:
                terms.append(("+", f"({text})*{name}"))

        if not terms:
            return "0"
        first_sign, first_term = terms[0]
        rendered = first_term if first_sign == "+" else f"-{first_term}"
        return " ".join([rendered] + [f"{sign} {term}" for sign, term in terms[1:]])


def _read_entry(entry: TableEntry, domain: ScalarDomain, dim: int, position: tuple[int, int]) -> Element:
    if isinstance(entry, Element):
        if entry.domain != domain:
            message = f"Table entry {position} is over {entry.domain.label}, but the algebra is over {domain.label}."
            raise DomainMismatch(message)
        element = entry
    else:
        element = Element.from_values(domain=domain, values=entry)

    if element.dim != dim:
        message = f"Table entry {position} has length {element.dim}, but the algebra has dimension {dim}."
        raise ShapeError(message)
    return element


def build_algebra(
    domain: ScalarDomain | str,
    dim: int,
    basis_names: typing.Sequence[str],
    table: typing.Sequence[typing.Sequence[TableEntry]],
) -> Algebra:
    """
    Validate structure constants and build an immutable `Algebra`.

    Parameters
    ----------
    domain : ScalarDomain or str
        The scalar field, or its label ('Q', 'GF:p', 'Qt').
    dim : int
        The dimension n >= 1.
    basis_names : sequence of str
        n distinct names for the basis vectors.
    table : n x n nested sequence
        `table[i][j]` is the product of basis vectors i and j, as an `Element` or as n coordinates.

    Raises
    ------
    ShapeError
        If the table or the basis names do not match the dimension.
    DomainMismatch
        If an entry lives over a different domain.
    CharTwoUnsupported
        If the domain label names a field of characteristic 2.
    """
    if isinstance(domain, str):
        domain = ScalarDomain.from_text(text=domain)

    if dim < 1:
        message = f"The dimension of an algebra must be at least 1, got {dim}."
        raise ShapeError(message)
    if len(basis_names) != dim or len(set(basis_names)) != dim:
        message = f"Expected {dim} distinct basis names, got {list(basis_names)}."
        raise ShapeError(message)
    if len(table) != dim or any(len(row) != dim for row in table):
        message = f"The multiplication table must be {dim} x {dim}."
        raise ShapeError(message)

    checked_table = tuple(
        tuple(
            _read_entry(entry=entry, domain=domain, dim=dim, position=(row_index, column_index))
            for column_index, entry in enumerate(row)
        )
        for row_index, row in enumerate(table)
    )
    return Algebra(domain=domain, dim=dim, basis_names=tuple(basis_names), table=checked_table)


def _check_member(algebra: Algebra, element: Element) -> None:
    if element.domain != algebra.domain:
        message = f"The element {element} is over {element.domain.label}, but the algebra is over {algebra.domain}."
        raise DomainMismatch(message)
    if element.dim != algebra.dim:
        message = f"The element {element} has length {element.dim}, but the algebra has dimension {algebra.dim}."
        raise ShapeError(message)


def multiply(algebra: Algebra, x: Element, y: Element) -> Element:
    """The product x·y, extending the multiplication table bilinearly."""
    _check_member(algebra=algebra, element=x)
    _check_member(algebra=algebra, element=y)

    result = algebra.zero()
    for i, x_coordinate in enumerate(x.coords):
        if x_coordinate.is_zero:
            continue
        for j, y_coordinate in enumerate(y.coords):
            if y_coordinate.is_zero:
                continue
            result = result + (x_coordinate * y_coordinate) * algebra.table[i][j]
    return result


def left_op(algebra: Algebra, x: Element) -> Operator:
    """The matrix of L_x : y ↦ x·y."""
    _check_member(algebra=algebra, element=x)
    return Operator.from_columns(columns=[multiply(algebra, x, basis_vector) for basis_vector in algebra.basis()])


def right_op(algebra: Algebra, x: Element) -> Operator:
    """The matrix of R_x : y ↦ y·x."""
    _check_member(algebra=algebra, element=x)
    return Operator.from_columns(columns=[multiply(algebra, basis_vector, x) for basis_vector in algebra.basis()])


def specialize_algebra(algebra: Algebra, value: Scalar) -> Algebra:
    """
    Substitute t = `value` into every structure constant of an algebra over Q(t).

    The result lives over `value.domain`; poles of the structure constants raise `DivisionByZero`.
    """
    if algebra.domain.kind is not ScalarKind.RATIONAL_FUNCTION:
        message = f"Only algebras over Q(t) can be specialised, not over {algebra.domain.label}."
        raise DomainMismatch(message)

    table = [
        [Element(coords=tuple(substitute(scalar=coordinate, value=value) for coordinate in entry)) for entry in row]
        for row in algebra.table
    ]
    return build_algebra(domain=value.domain, dim=algebra.dim, basis_names=algebra.basis_names, table=table)
