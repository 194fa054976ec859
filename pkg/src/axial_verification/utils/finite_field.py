"""Plain-integer views of algebras over GF(p), for exhaustive scans that cross process boundaries."""

from ..algebra import Algebra, Element, build_algebra
from ..scalars import ScalarDomain

ResidueTable = tuple[tuple[tuple[int, ...], ...], ...]


def residue_table(algebra: Algebra) -> ResidueTable:
    return tuple(tuple(tuple(coordinate.residue for coordinate in entry) for entry in row) for row in algebra.table)


def algebra_from_residues(p: int, table: ResidueTable, basis_names: tuple[str, ...]) -> Algebra:
    return build_algebra(domain=ScalarDomain.prime_field(p=p), dim=len(table), basis_names=basis_names, table=table)


def residues_from_index(p: int, dim: int, index: int) -> tuple[int, ...]:
    """The coordinates of the `index`-th vector of GF(p)^dim, first coordinate most significant."""
    digits = []
    for _ in range(dim):
        index, digit = divmod(index, p)
        digits.append(digit)
    return tuple(reversed(digits))


def element_from_residues(domain: ScalarDomain, residues: tuple[int, ...]) -> Element:
    return Element(coords=tuple(domain.from_int(residue) for residue in residues))


def residue_product(p: int, table: ResidueTable, x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
    """The product x·y computed on residues modulo p."""
    dim = len(x)
    product = [0] * dim
    for i, x_coordinate in enumerate(x):
        if x_coordinate == 0:
            continue
        for j, y_coordinate in enumerate(y):
            if y_coordinate == 0:
                continue
            weight = x_coordinate * y_coordinate
            for k, structure_constant in enumerate(table[i][j]):
                product[k] += weight * structure_constant
    return tuple(value % p for value in product)
