"""Classification of algebras generated by two axes, with the replayable verification suite."""

from ._commutative import UnitAndCoaxis, a_prime_subalgebra, bfamily_gamma, unit_and_coaxis
from ._dim2 import classify_dim2
from ._results import (
    Case,
    ClassificationResult,
    Dim2SearchReport,
    SigmaData,
    StatementResult,
    SurvivorRecord,
)
from ._search import predicted_dim2_tables, search_dim2_ff
from ._seress import check_seress
from ._sigma import sigma
from ._suite import report_to_frame, suite_passed, verify_paper_suite
from ._two_generated import classify_2gen

__all__ = [
    "Case",
    "ClassificationResult",
    "Dim2SearchReport",
    "SigmaData",
    "StatementResult",
    "SurvivorRecord",
    "UnitAndCoaxis",
    "a_prime_subalgebra",
    "bfamily_gamma",
    "check_seress",
    "classify_2gen",
    "classify_dim2",
    "predicted_dim2_tables",
    "report_to_frame",
    "search_dim2_ff",
    "sigma",
    "suite_passed",
    "unit_and_coaxis",
    "verify_paper_suite",
]
