"""Reading and writing the JSON algebra file format."""

import dataclasses
import json
import pathlib
import typing

from ._exceptions import ParseError
from .algebra import Algebra, Element, build_algebra
from .axes import ANY, AnyType, AxisType
from .scalars import ScalarDomain, parse_scalar, print_scalar

_REQUIRED_KEYS = ("field", "dim", "basis", "table")


@dataclasses.dataclass(frozen=True, eq=False)
class AlgebraDefinition:
    """
    The contents of an algebra file.

    Attributes
    ----------
    algebra : Algebra
        The algebra given by the structure constants.
    generators : tuple of str
        Basis names of the designated generators; empty when the file names none.
    axis_types : dict of str to (AxisType, AxisType)
        Declared (λ, δ) per generator name.
    """

    algebra: Algebra
    generators: tuple[str, ...] = ()
    axis_types: dict[str, tuple[AxisType, AxisType]] = dataclasses.field(default_factory=dict)

    def generator_elements(self) -> list[Element]:
        return [self.algebra.basis_element(name) for name in self.generators]


def format_axis_type(value: AxisType) -> str:
    return str(value) if isinstance(value, AnyType) else print_scalar(value)


def parse_axis_type(text: str, domain: ScalarDomain) -> AxisType:
    return ANY if text.strip().upper() == "ANY" else parse_scalar(text=text, domain=domain)


def algebra_to_dict(
    algebra: Algebra,
    generators: typing.Sequence[str] = (),
    axis_types: typing.Mapping[str, tuple[AxisType, AxisType]] | None = None,
) -> dict[str, typing.Any]:
    """Structure constants as printed scalar strings, plus the optional generators and declared types."""
    data: dict[str, typing.Any] = {
        "field": algebra.domain.label,
        "dim": algebra.dim,
        "basis": list(algebra.basis_names),
        "table": [[[print_scalar(coordinate) for coordinate in entry] for entry in row] for row in algebra.table],
    }
    if generators:
        data["generators"] = list(generators)
    if axis_types:
        data["axis_types"] = {name: [format_axis_type(value) for value in pair] for name, pair in axis_types.items()}
    return data


def algebra_from_dict(data: typing.Mapping[str, typing.Any]) -> AlgebraDefinition:
    """
    Build an algebra definition from parsed file contents.

    Raises
    ------
    ParseError
        If a required key is missing, a generator is not a basis name, or a scalar string does not parse.
    ShapeError
        If the table does not match the dimension.
    """
    missing = [key for key in _REQUIRED_KEYS if key not in data]
    if missing:
        message = f"The algebra file is missing the keys {missing}."
        raise ParseError(message)

    try:
        domain = ScalarDomain.from_text(text=str(data["field"]))
    except ValueError as exception:
        raise ParseError(str(exception)) from exception

    algebra = build_algebra(domain=domain, dim=int(data["dim"]), basis_names=data["basis"], table=data["table"])

    generators = tuple(data.get("generators", ()))
    unknown = [name for name in generators if name not in algebra.basis_names]
    if unknown:
        message = f"The generators {unknown} are not basis names; the basis is {list(algebra.basis_names)}."
        raise ParseError(message)

    axis_types = {
        name: tuple(parse_axis_type(text=str(text), domain=domain) for text in pair)
        for name, pair in data.get("axis_types", {}).items()
    }
    if any(len(pair) != 2 for pair in axis_types.values()):
        message = "Each declared axis type must be a pair [λ, δ]."
        raise ParseError(message)
    return AlgebraDefinition(algebra=algebra, generators=generators, axis_types=axis_types)


def read_algebra_file(file_path: str | pathlib.Path) -> AlgebraDefinition:
    """
    Read an algebra file.

    Raises
    ------
    ParseError
        If the file is not valid JSON (the message names the line and column) or its contents are invalid.
    """
    file_path = pathlib.Path(file_path)
    try:
        data = json.loads(file_path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exception:
        message = (
            f"{file_path} is not valid JSON: {exception.msg} "
            f"at line {exception.lineno}, column {exception.colno}."
        )
        raise ParseError(message, position=exception.pos) from exception

    if not isinstance(data, dict):
        message = f"{file_path} must contain a JSON object."
        raise ParseError(message)
    return algebra_from_dict(data=data)


def dump_algebra(data: typing.Mapping[str, typing.Any]) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def write_algebra_file(file_path: str | pathlib.Path, definition: AlgebraDefinition) -> None:
    data = algebra_to_dict(
        algebra=definition.algebra, generators=definition.generators, axis_types=definition.axis_types
    )
    pathlib.Path(file_path).write_text(dump_algebra(data=data), encoding="utf-8")
