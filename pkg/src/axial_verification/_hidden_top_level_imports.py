"""
Including these directly within the top-level `__init__.py` makes them visible to autocompletion.

But we only want the imports to trigger, not for them to actually be exposed.
"""

from ._command_line_interface._cli import axialverification_cli
from .algebra import Algebra
from .axes import check_axis
from .catalog import shipped_catalog
from .classify import classify_2gen
from .config import get_enumeration_cap
from .idempotents import enumerate_idempotents_ff
from .scalars import ScalarDomain
from .spectral import eigen_decompose
from .testing import assert_elements_equal

_hide = True
