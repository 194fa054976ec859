import itertools
import typing

from ._algebra import Algebra, left_op, multiply, right_op
from ._element import Element
from ._subspace import Subspace


def subalgebra_closure(algebra: Algebra, generators: typing.Sequence[Element]) -> Subspace:
    """
    The smallest subspace that contains `generators` and is closed under multiplication.

    The span grows by all pairwise products of its current basis until the dimension stabilizes.

    Parameters
    ----------
    algebra : Algebra
        The ambient algebra.
    generators : sequence of Element
        A non-empty list of elements of `algebra`.

    Returns
    -------
    Subspace
        The generated subalgebra, in echelon form.
    """
    if len(generators) == 0:
        message = "The closure needs at least one generator."
        raise ValueError(message)

    subspace = Subspace.span(domain=algebra.domain, ambient_dim=algebra.dim, vectors=generators)
    while True:
        products = [multiply(algebra, left, right) for left, right in itertools.product(subspace.basis, repeat=2)]
        grown = subspace.sum(Subspace.span(domain=algebra.domain, ambient_dim=algebra.dim, vectors=products))
        if grown.dim == subspace.dim:
            return subspace
        subspace = grown


def is_commutative(algebra: Algebra) -> bool:
    return all(
        algebra.table[i][j] == algebra.table[j][i] for i, j in itertools.combinations(range(algebra.dim), r=2)
    )


def is_flexible(algebra: Algebra) -> bool:
    """
    Check the linearized flexible law (xy)z + (zy)x = x(yz) + z(yx) on all triples of basis vectors.

    Away from characteristic 2 this multilinear identity is equivalent to (xy)x = x(yx).
    """
    basis = algebra.basis()
    for x, y, z in itertools.product(basis, repeat=3):
        left_side = multiply(algebra, multiply(algebra, x, y), z) + multiply(algebra, multiply(algebra, z, y), x)
        right_side = multiply(algebra, x, multiply(algebra, y, z)) + multiply(algebra, z, multiply(algebra, y, x))
        if left_side != right_side:
            return False
    return True


def center(algebra: Algebra) -> Subspace:
    """The commutative center Z(A) = {x : xy = yx for all y}, as the kernel of x ↦ L_x - R_x."""
    commutators = [
        (left_op(algebra, basis_vector) - right_op(algebra, basis_vector)).vectorized()
        for basis_vector in algebra.basis()
    ]
    equations = [
        [commutator[row] for commutator in commutators] for row in range(algebra.dim * algebra.dim)
    ]
    return Subspace.solutions(domain=algebra.domain, ambient_dim=algebra.dim, equations=equations)
