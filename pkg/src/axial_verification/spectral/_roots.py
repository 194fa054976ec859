import typing

from ._polynomial import Polynomial
from ..algebra import Algebra, Operator
from ..scalars import Scalar, ScalarKind


def candidate_eigenvalues(algebra: Algebra, operator: Operator) -> list[Scalar]:
    """
    Candidate roots over Q(t): 0, 1, every structure constant and operator entry c, and each 1 - c.

    Eigenvalues of multiplication operators by idempotents are always among these values.
    """
    values = [algebra.domain.zero(), algebra.domain.one()]
    values.extend(coordinate for row in algebra.table for entry in row for coordinate in entry.coords)
    values.extend(entry for row in operator.matrix for entry in row)
    values.extend([1 - value for value in values])

    unique_values = {value: None for value in values}
    return list(unique_values)


def split_roots(
    polynomial: Polynomial, candidates: typing.Iterable[Scalar] | None = None
) -> tuple[dict[Scalar, int], Polynomial]:
    """
    Find the roots of a polynomial lying in its coefficient field, with multiplicities.

    Over GF(p) every residue is tried; over Q the rational roots come from sympy's factorization
    over the ground field; over Q(t) only the given `candidates` are tried.

    Returns
    -------
    roots : dict
        Each root found, mapped to its multiplicity, in sorted order.
    cofactor : Polynomial
        What remains after dividing out every found linear factor; degree 0 iff the polynomial splits.
    """
    domain = polynomial.domain
    match domain.kind:
        case ScalarKind.PRIME_FIELD:
            candidates = list(domain.elements())
        case ScalarKind.RATIONAL:
            ground_roots = polynomial.to_sympy().ground_roots()
            candidates = [domain.from_fraction(int(root.p), int(root.q)) for root in ground_roots]
        case ScalarKind.RATIONAL_FUNCTION:
            if candidates is None:
                message = "Root finding over Q(t) needs an explicit list of candidate roots."
                raise ValueError(message)

    roots = {}
    cofactor = polynomial
    for candidate in sorted(set(candidates), key=lambda scalar: scalar.sort_key()):
        multiplicity = 0
        while cofactor.degree > 0:
            quotient, remainder = cofactor.divide_linear(root=candidate)
            if not remainder.is_zero:
                break
            cofactor = quotient
            multiplicity += 1
        if multiplicity > 0:
            roots[candidate] = multiplicity
    return roots, cofactor
