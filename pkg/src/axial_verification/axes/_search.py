import beartype
import tqdm

from ._checks import check_axis, detect_axis_type, resolve_type
from ._report import AxisReport
from .._exceptions import NotAnAxis
from ..algebra import Algebra, Element
from ..idempotents import enumerate_idempotents_ff


@beartype.beartype
def find_axes_ff(
    algebra: Algebra, workers: int = 1, display_progress: bool = False
) -> list[tuple[Element, AxisReport]]:
    """
    Find every axis of an algebra over GF(p).

    Each nonzero idempotent is tested with the type (λ, δ) read off its own one-sided spectra.

    Parameters
    ----------
    algebra : Algebra
        An algebra over a prime field.
    workers : int, default: 1
        Worker processes for the idempotent scan.
    display_progress : bool, default: False
        Whether to show progress bars.

    Returns
    -------
    list of (Element, AxisReport)
        The axes in canonical order with their reports.

    Raises
    ------
    InfiniteField
        If the algebra is not over a prime field.
    EnumerationTooLarge
        If p^n exceeds the enumeration cap.
    """
    idempotents = enumerate_idempotents_ff(algebra=algebra, workers=workers, display_progress=display_progress)

    axes = []
    for idempotent in tqdm.tqdm(
        iterable=idempotents.nonzero,
        desc="Testing idempotents as axes",
        unit="idempotents",
        smoothing=0,
        disable=not display_progress,
    ):
        try:
            left_type, right_type = detect_axis_type(algebra=algebra, a=idempotent)
        except NotAnAxis:
            continue

        report = check_axis(
            algebra=algebra,
            a=idempotent,
            lambda_value=resolve_type(algebra=algebra, value=left_type),
            delta_value=resolve_type(algebra=algebra, value=right_type),
        )
        if report.is_axis:
            axes.append((idempotent, report))
    return axes
