from . import finite_field, parallel
from .finite_field import (
    ResidueTable,
    algebra_from_residues,
    element_from_residues,
    residue_product,
    residue_table,
    residues_from_index,
)
from .parallel import _map_in_batches

__all__ = [
    "_map_in_batches",
    "algebra_from_residues",
    "element_from_residues",
    "finite_field",
    "parallel",
    "residue_product",
    "residue_table",
    "residues_from_index",
    "ResidueTable",
]
