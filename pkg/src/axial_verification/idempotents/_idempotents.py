import dataclasses
import typing

import beartype

from .._exceptions import DomainMismatch, EnumerationTooLarge, InfiniteField
from ..algebra import Algebra, Element, multiply
from ..config import get_enumeration_cap
from ..scalars import ScalarKind
from ..utils import (
    ResidueTable,
    _map_in_batches,
    element_from_residues,
    residue_product,
    residue_table,
    residues_from_index,
)

_BATCH_SIZE = 5_000


@dataclasses.dataclass(frozen=True, eq=False)
class IdempotentList:
    """
    Idempotents of an algebra in canonical order.

    Attributes
    ----------
    elements : tuple of Element
        Distinct idempotents, sorted by coordinates.
    complete : bool
        True only when the list comes from an exhaustive scan of a finite field.
    """

    elements: tuple[Element, ...]
    complete: bool

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> typing.Iterator[Element]:
        return iter(self.elements)

    def __contains__(self, element: Element) -> bool:
        return element in self.elements

    @property
    def nonzero(self) -> list[Element]:
        return [element for element in self.elements if not element.is_zero]


def is_idempotent(algebra: Algebra, y: Element) -> bool:
    return multiply(algebra, y, y) == y


def check_enumeration_size(algebra: Algebra, exponent: int | None = None) -> int:
    """
    Return p^exponent (default p^dim) after checking it against the enumeration cap.

    Raises
    ------
    InfiniteField
        If the algebra is not over a prime field.
    EnumerationTooLarge
        If the scan would exceed the configured cap.
    """
    if not algebra.domain.is_finite:
        message = f"Exhaustive enumeration needs a finite field, but the algebra is over {algebra.domain.label}."
        raise InfiniteField(message)

    exponent = algebra.dim if exponent is None else exponent
    size = algebra.domain.p**exponent
    cap = get_enumeration_cap()
    if size > cap:
        message = (
            f"Scanning {algebra.domain.p}^{exponent} = {size} elements exceeds the enumeration cap of {cap}. "
            "Raise the cap with `axialverification config cap set` or the AXIAL_ENUM_CAP environment variable."
        )
        raise EnumerationTooLarge(message)
    return size


def _idempotent_indices(indices: typing.Sequence[int], *, p: int, table: ResidueTable) -> list[int]:
    dim = len(table)
    found = []
    for index in indices:
        residues = residues_from_index(p=p, dim=dim, index=index)
        if residue_product(p=p, table=table, x=residues, y=residues) == residues:
            found.append(index)
    return found


@beartype.beartype
def enumerate_idempotents_ff(algebra: Algebra, workers: int = 1, display_progress: bool = False) -> IdempotentList:
    """
    List every idempotent of an algebra over GF(p) by scanning all p^n elements.

    Parameters
    ----------
    algebra : Algebra
        An algebra over a prime field.
    workers : int, default: 1
        The number of worker processes; negative values use slicing semantics.
    display_progress : bool, default: False
        Whether to show a progress bar.

    Returns
    -------
    IdempotentList
        The complete, canonically sorted list.
    """
    size = check_enumeration_size(algebra=algebra)
    p = algebra.domain.p
    indices = _map_in_batches(
        function=_idempotent_indices,
        items=range(size),
        batch_size=_BATCH_SIZE,
        workers=workers,
        description="Scanning for idempotents",
        display_progress=display_progress,
        p=p,
        table=residue_table(algebra=algebra),
    )

    elements = tuple(
        element_from_residues(domain=algebra.domain, residues=residues_from_index(p=p, dim=algebra.dim, index=index))
        for index in sorted(indices)
    )
    return IdempotentList(elements=elements, complete=True)


def verify_idempotent_family(algebra: Algebra, y: Element) -> bool:
    """
    Check that a parametric element y(t) is idempotent as an identity of rational functions in t.

    A True result proves y(t)² = y(t) for every value of t that is not a pole.

    Raises
    ------
    DomainMismatch
        If the algebra or the element is not over Q(t), or their domains differ.
    """
    if algebra.domain.kind is not ScalarKind.RATIONAL_FUNCTION or y.domain != algebra.domain:
        message = (
            f"Family verification needs an algebra and element over Q(t), got {algebra.domain.label} "
            f"and {y.domain.label}."
        )
        raise DomainMismatch(message)
    return is_idempotent(algebra=algebra, y=y)

