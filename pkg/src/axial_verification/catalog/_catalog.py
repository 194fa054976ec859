import dataclasses
import typing

import beartype

from ._constructors import make_2B, make_bfamily, make_flex1, make_flex2, make_hss_dim2
from ._entry import CatalogEntry
from .._exceptions import DomainMismatch, ShapeError
from ..algebra import Element, build_algebra
from ..scalars import PARAMETER_SYMBOL, Scalar, ScalarDomain, ScalarKind, parse_scalar, substitute

# The constructor of each family and the parameters it takes, in order.
_FAMILIES: dict[str, tuple[typing.Callable[..., CatalogEntry], tuple[str, ...]]] = {
    "2B": (make_2B, ()),
    "hss_dim2": (make_hss_dim2, ("lambda",)),
    "flex1": (make_flex1, ("lambda",)),
    "flex2": (make_flex2, ("lambda",)),
    "bfamily": (make_bfamily, ("lambda", "lambda_prime", "gamma")),
}
_KEYWORDS = {"lambda": "lambda_value", "lambda_prime": "lambda_prime", "gamma": "gamma"}


def build_entry(
    family: str, domain: ScalarDomain | str, params: typing.Mapping[str, Scalar | int | str]
) -> CatalogEntry:
    """Call the constructor of `family` with named parameters ('lambda', 'lambda_prime', 'gamma')."""
    if family not in _FAMILIES:
        message = f"Unknown catalog family '{family}'; expected one of {sorted(_FAMILIES)}."
        raise ValueError(message)

    constructor, names = _FAMILIES[family]
    return constructor(domain, **{_KEYWORDS[name]: params[name] for name in names})


def shipped_catalog() -> list[CatalogEntry]:
    """
    Every algebra the verification suite replays.

    Over Q: 2B, both commutative two-dimensional cases, the two flexible algebras at λ = 1/3 and one
    commutative three-dimensional algebra from each branch of the fusion equations (including γ = 0).
    Over GF(5): the flexible algebras at λ = 2 and the case λ = 1/2 = 3. Over Q(t): the flexible
    algebras and the branch λ = λ′ with λ = t, as identities in t.
    """
    t = PARAMETER_SYMBOL.name
    rational = ScalarDomain.rational()
    gf5 = ScalarDomain.prime_field(p=5)
    generic = ScalarDomain.rational_function()
    return [
        make_2B(domain=rational),
        make_hss_dim2(domain=rational, lambda_value="1/2"),
        make_hss_dim2(domain=rational, lambda_value=-1),
        make_flex1(domain=rational, lambda_value="1/3"),
        make_flex2(domain=rational, lambda_value="1/3"),
        make_bfamily(domain=rational, lambda_value="1/2", lambda_prime="1/2", gamma=1),
        make_bfamily(domain=rational, lambda_value="1/3", lambda_prime="2/3", gamma="-1/9"),
        make_bfamily(domain=rational, lambda_value=2, lambda_prime=2, gamma=-3),
        make_bfamily(domain=rational, lambda_value=-1, lambda_prime=-1, gamma=0),
        make_flex1(domain=gf5, lambda_value=2),
        make_flex2(domain=gf5, lambda_value=2),
        make_hss_dim2(domain=gf5, lambda_value=3),
        make_flex1(domain=generic, lambda_value=t),
        make_flex2(domain=generic, lambda_value=t),
        make_bfamily(domain=generic, lambda_value=t, lambda_prime=t, gamma=f"-{t}*({t}+1)/2"),
    ]


@beartype.beartype
def instantiate(entry: CatalogEntry, value: Scalar | int | str, domain: ScalarDomain | str) -> CatalogEntry:
    """
    Specialise a Q(t) entry at t = `value` over `domain`, re-checking the family constraints.

    Raises
    ------
    DomainMismatch
        If the entry is not over Q(t).
    DivisionByZero
        If `value` is a pole of a parameter.
    ParamOutOfRange
        If the specialised parameters violate a constraint.
    """
    if entry.algebra.domain.kind is not ScalarKind.RATIONAL_FUNCTION:
        message = (
            f"Only entries over Q(t) can be instantiated, but '{entry.name}' "
            f"is over {entry.algebra.domain.label}."
        )
        raise DomainMismatch(message)

    domain = ScalarDomain.from_text(text=domain) if isinstance(domain, str) else domain
    if isinstance(value, str):
        value = parse_scalar(text=value, domain=domain)
    elif isinstance(value, int):
        value = domain.from_int(value)

    params = {name: substitute(scalar=parameter, value=value) for name, parameter in entry.params.items()}
    return build_entry(family=entry.family, domain=domain, params=params)


def mutate_entry(
    entry: CatalogEntry, row: int, column: int, new_product: Element | typing.Sequence[Scalar | int | str]
) -> CatalogEntry:
    """
    Replace one product of basis vectors in an entry, keeping the expected classification.

    The result is a negative control: checks replayed on it should fail.
    """
    algebra = entry.algebra
    if not (0 <= row < algebra.dim and 0 <= column < algebra.dim):
        message = f"No product ({row}, {column}) in a table of dimension {algebra.dim}."
        raise ShapeError(message)

    table = [list(products) for products in algebra.table]
    table[row][column] = new_product
    mutant = build_algebra(domain=algebra.domain, dim=algebra.dim, basis_names=algebra.basis_names, table=table)
    product_name = f"{algebra.basis_names[row]}{algebra.basis_names[column]}"
    return dataclasses.replace(entry, name=f"{entry.name} with {product_name} mutated", algebra=mutant)
