import typing
import warnings

import beartype

from ._common import require_axis, warn_if_char_three
from ._dim2 import classify_dim2
from ._results import Dim2SearchReport, SurvivorRecord
from .._exceptions import Char3Warning, EnumerationTooLarge, NotAnAxis
from ..algebra import is_flexible
from ..config import get_enumeration_cap
from ..scalars import ScalarDomain
from ..utils import _map_in_batches, algebra_from_residues, residues_from_index

_BATCH_SIZE = 50
_TABLE_COEFFICIENTS = 4

Table = tuple[int, int, int, int]


def _dim2_table(p1: int, q1: int, p2: int, q2: int) -> tuple:
    return (((1, 0), (p1, q1)), ((p2, q2), (0, 1)))


def _surviving_tables(indices: typing.Sequence[int], *, p: int) -> list[tuple[int, str, bool]]:
    survivors = []
    for index in indices:
        coefficients = residues_from_index(p=p, dim=_TABLE_COEFFICIENTS, index=index)

        # An eigenvalue 1 of multiplicity two in L_a, R_a, L_b or R_b rules out an axis.
        if 1 in coefficients:
            continue

        algebra = algebra_from_residues(p=p, table=_dim2_table(*coefficients), basis_names=("a", "b"))
        a, b = algebra.basis()
        try:
            require_axis(algebra=algebra, element=a, name="a")
            require_axis(algebra=algebra, element=b, name="b")
        except NotAnAxis:
            continue

        with warnings.catch_warnings():
            warnings.simplefilter(action="ignore", category=Char3Warning)
            result = classify_dim2(algebra=algebra, a=a, b=b)
        survivors.append((index, result.label, is_flexible(algebra=algebra)))
    return survivors


def predicted_dim2_tables(p: int) -> dict[Table, str]:
    """
    The dimension-2 tables over GF(p) on which both generators are axes, with their labels.

    They are 2B, ab = ba = λ(a + b) for λ ∈ {-1, 1/2}, and ab = δa + λb, ba = λa + δb for every
    λ ∉ {0, 1, 1/2} with δ = 1 - λ.
    """
    domain = ScalarDomain.prime_field(p=p)
    predicted = {(0, 0, 0, 0): "TWO_B"}
    for value in (domain.from_int(-1), domain.from_fraction(1, 2)):
        residue = value.residue
        predicted[(residue, residue, residue, residue)] = f"HSS_DIM2(λ={value})"
    for value in domain.elements():
        if value.is_zero or value.is_one or (2 * value).is_one:
            continue
        delta = 1 - value
        predicted[(delta.residue, value.residue, value.residue, delta.residue)] = f"FLEX1(λ={value}, δ={delta})"
    return predicted


@beartype.beartype
def search_dim2_ff(p: int, workers: int = 1, display_progress: bool = False) -> Dim2SearchReport:
    """
    Exhaustively check the classification of two-dimensional algebras generated by two axes over GF(p).

    Every table a² = a, b² = b, ab = p1·a + q1·b, ba = p2·a + q2·b is enumerated. A table survives when a and
    b are both axes of the types read off their spectra. The survivors are compared with
    `predicted_dim2_tables`, label by label, and each one is tested for flexibility.

    Parameters
    ----------
    p : int
        An odd prime. In characteristic 3 a `Char3Warning` is emitted, as -1 = 1/2 there.
    workers : int, default: 1
        Worker processes over batches of tables.
    display_progress : bool, default: False
        Whether to show a progress bar.

    Returns
    -------
    Dim2SearchReport
        Survivors sorted by (p1, q1, p2, q2), the prediction, and the agreement flags.

    Raises
    ------
    CharTwoUnsupported
        If p = 2.
    EnumerationTooLarge
        If p^4 exceeds the enumeration cap.
    """
    domain = ScalarDomain.prime_field(p=p)
    warn_if_char_three(domain=domain)

    table_count = p**_TABLE_COEFFICIENTS
    cap = get_enumeration_cap()
    if table_count > cap:
        message = f"Searching {p}^4 = {table_count} tables exceeds the enumeration cap of {cap}."
        raise EnumerationTooLarge(message)

    found = _map_in_batches(
        function=_surviving_tables,
        items=range(table_count),
        batch_size=_BATCH_SIZE,
        workers=workers,
        description=f"Searching dimension-2 tables over GF({p})",
        display_progress=display_progress,
        p=p,
    )

    survivors: list[SurvivorRecord] = []
    for index, label, flexible in sorted(found):
        table = residues_from_index(p=p, dim=_TABLE_COEFFICIENTS, index=index)
        survivors.append(SurvivorRecord(table=table, label=label, flexible=flexible))

    predicted = predicted_dim2_tables(p=p)
    observed = {survivor["table"]: survivor["label"] for survivor in survivors}
    return Dim2SearchReport(
        p=p,
        table_count=table_count,
        survivors=survivors,
        predicted=sorted(predicted),
        matches_prediction=observed == predicted,
        all_flexible=all(survivor["flexible"] for survivor in survivors),
    )
