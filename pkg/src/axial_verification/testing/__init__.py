from ._assertions import assert_elements_equal, assert_is_automorphism, assert_report_passes, assert_subspaces_equal
from ._sampling import sample_family_parameters

__all__ = [
    "assert_elements_equal",
    "assert_is_automorphism",
    "assert_report_passes",
    "assert_subspaces_equal",
    "sample_family_parameters",
]
