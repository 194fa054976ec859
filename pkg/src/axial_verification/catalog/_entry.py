import dataclasses
import typing

from .._algebra_file import algebra_to_dict
from ..algebra import Algebra, Element
from ..axes import AxisType
from ..classify import ClassificationResult
from ..scalars import Scalar


@dataclasses.dataclass(frozen=True, eq=False)
class Constraint:
    """A named condition on the parameters of a catalog family, such as 'λ ≠ 1/2'."""

    description: str
    predicate: typing.Callable[[dict[str, Scalar]], bool]

    def holds(self, params: dict[str, Scalar]) -> bool:
        return bool(self.predicate(params))


@dataclasses.dataclass(frozen=True, eq=False)
class CatalogEntry:
    """
    A named algebra generated by two axes, with the classification it must receive.

    Attributes
    ----------
    name : str
        A unique, human-readable name such as 'flex2(1/3) over Q'.
    family : str
        The constructor family: '2B', 'hss_dim2', 'flex1', 'flex2' or 'bfamily'.
    params : dict of str to Scalar
        The parameters, including derived ones such as δ = 1 - λ.
    constraints : tuple of Constraint
        Conditions the parameters satisfy; over Q(t) they hold as rational-function statements.
    algebra : Algebra
        The algebra.
    expected : ClassificationResult
        The classification of the algebra with its designated generators.
    generators : tuple of str
        Basis names of the designated generators.
    axis_types : dict of str to (AxisType, AxisType)
        The (λ, δ) type of each generator.
    """

    name: str
    family: str
    params: dict[str, Scalar]
    constraints: tuple[Constraint, ...]
    algebra: Algebra
    expected: ClassificationResult
    generators: tuple[str, str] = ("a", "b")
    axis_types: dict[str, tuple[AxisType, AxisType]] = dataclasses.field(default_factory=dict)

    def generator_elements(self) -> tuple[Element, Element]:
        first, second = (self.algebra.basis_element(name) for name in self.generators)
        return first, second

    def failed_constraints(self) -> list[str]:
        return [constraint.description for constraint in self.constraints if not constraint.holds(self.params)]


def entry_to_file(entry: CatalogEntry) -> dict[str, typing.Any]:
    """The algebra file contents of an entry, with its generators and their types."""
    return algebra_to_dict(algebra=entry.algebra, generators=entry.generators, axis_types=entry.axis_types)
