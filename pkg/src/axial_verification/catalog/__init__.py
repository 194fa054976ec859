"""Constructors for the named algebras generated by two axes, with their expected classifications."""

from ._catalog import build_entry, instantiate, mutate_entry, shipped_catalog
from ._constructors import make_2B, make_bfamily, make_flex1, make_flex2, make_hss_dim2
from ._entry import CatalogEntry, Constraint, entry_to_file

__all__ = [
    "CatalogEntry",
    "Constraint",
    "build_entry",
    "entry_to_file",
    "instantiate",
    "make_2B",
    "make_bfamily",
    "make_flex1",
    "make_flex2",
    "make_hss_dim2",
    "mutate_entry",
    "shipped_catalog",
]
