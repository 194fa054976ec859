import warnings

import beartype

from ._entry import CatalogEntry, Constraint
from .._exceptions import Char3Warning, DomainMismatch, ParamOutOfRange
from ..algebra import build_algebra
from ..axes import ANY
from ..classify import Case, ClassificationResult, bfamily_gamma
from ..scalars import Scalar, ScalarDomain, parse_scalar

ParameterValue = Scalar | int | str


def _resolve_domain(domain: ScalarDomain | str) -> ScalarDomain:
    return ScalarDomain.from_text(text=domain) if isinstance(domain, str) else domain


def _read_parameter(domain: ScalarDomain, value: ParameterValue, name: str) -> Scalar:
    if isinstance(value, str):
        return parse_scalar(text=value, domain=domain)
    if isinstance(value, int):
        return domain.from_int(value)
    if value.domain != domain:
        try:
            return value.to_domain(domain)
        except DomainMismatch as exception:
            message = f"The parameter {name} = {value} lives over {value.domain.label}, not {domain.label}."
            raise DomainMismatch(message) from exception
    return value


def _not_zero_or_one(name: str, symbol: str) -> list[Constraint]:
    return [
        Constraint(description=f"{symbol} ≠ 0", predicate=lambda params: not params[name].is_zero),
        Constraint(description=f"{symbol} ≠ 1", predicate=lambda params: not params[name].is_one),
    ]


def _require(constraints: list[Constraint], params: dict[str, Scalar], family: str) -> tuple[Constraint, ...]:
    failed = [constraint.description for constraint in constraints if not constraint.holds(params)]
    if failed:
        rendered = ", ".join(f"{name}={value}" for name, value in params.items())
        message = f"The parameters {rendered} of {family} violate {failed}."
        raise ParamOutOfRange(message)
    return tuple(constraints)


def _label(family: str, values: list[Scalar], domain: ScalarDomain) -> str:
    rendered = ", ".join(str(value) for value in values)
    return f"{family}({rendered}) over {domain.label}" if values else f"{family} over {domain.label}"


@beartype.beartype
def make_2B(domain: ScalarDomain | str) -> CatalogEntry:
    """The algebra 2B: two idempotents a, b with ab = ba = 0."""
    domain = _resolve_domain(domain=domain)
    zero = [0, 0]
    algebra = build_algebra(domain=domain, dim=2, basis_names=("a", "b"), table=[[[1, 0], zero], [zero, [0, 1]]])
    return CatalogEntry(
        name=_label(family="2B", values=[], domain=domain),
        family="2B",
        params={},
        constraints=(),
        algebra=algebra,
        expected=ClassificationResult(case=Case.TWO_B, dim=2, commutative=True),
        axis_types={"a": (ANY, ANY), "b": (ANY, ANY)},
    )


@beartype.beartype
def make_hss_dim2(domain: ScalarDomain | str, lambda_value: ParameterValue) -> CatalogEntry:
    """
    The commutative two-dimensional algebra with ab = ba = λ(a + b), λ ∈ {-1, 1/2}.

    Raises
    ------
    ParamOutOfRange
        If λ is neither -1 nor 1/2.
    """
    domain = _resolve_domain(domain=domain)
    lambda_value = _read_parameter(domain=domain, value=lambda_value, name="λ")
    params = {"lambda": lambda_value}
    constraints = _require(
        constraints=[
            Constraint(
                description="λ ∈ {-1, 1/2}",
                predicate=lambda params: params["lambda"] == -1 or (2 * params["lambda"]).is_one,
            )
        ],
        params=params,
        family="hss_dim2",
    )
    if domain.characteristic == 3:
        message = "In characteristic 3 the values -1 and 1/2 coincide, so both commutative cases give this algebra."
        warnings.warn(message=message, category=Char3Warning, stacklevel=2)

    product = [lambda_value, lambda_value]
    algebra = build_algebra(
        domain=domain, dim=2, basis_names=("a", "b"), table=[[[1, 0], product], [product, [0, 1]]]
    )
    return CatalogEntry(
        name=_label(family="hss_dim2", values=[lambda_value], domain=domain),
        family="hss_dim2",
        params=params,
        constraints=constraints,
        algebra=algebra,
        expected=ClassificationResult(case=Case.HSS_DIM2, dim=2, commutative=True, params=params),
        axis_types={"a": (lambda_value, lambda_value), "b": (lambda_value, lambda_value)},
    )


def _flexible_constraints() -> list[Constraint]:
    return _not_zero_or_one(name="lambda", symbol="λ") + [
        Constraint(description="λ ≠ 1/2", predicate=lambda params: not (2 * params["lambda"]).is_one),
        Constraint(description="λ + δ = 1", predicate=lambda params: (params["lambda"] + params["delta"]).is_one),
    ]


@beartype.beartype
def make_flex1(domain: ScalarDomain | str, lambda_value: ParameterValue) -> CatalogEntry:
    """
    The noncommutative two-dimensional flexible algebra: ab = δa + λb and ba = λa + δb with δ = 1 - λ.

    Both a and b are axes of Jordan type (λ, δ), and (a - b)² = 0.

    Raises
    ------
    ParamOutOfRange
        If λ ∈ {0, 1, 1/2}.
    """
    domain = _resolve_domain(domain=domain)
    lambda_value = _read_parameter(domain=domain, value=lambda_value, name="λ")
    delta_value = 1 - lambda_value
    params = {"lambda": lambda_value, "delta": delta_value}
    constraints = _require(constraints=_flexible_constraints(), params=params, family="flex1")

    algebra = build_algebra(
        domain=domain,
        dim=2,
        basis_names=("a", "b"),
        table=[[[1, 0], [delta_value, lambda_value]], [[lambda_value, delta_value], [0, 1]]],
    )
    return CatalogEntry(
        name=_label(family="flex1", values=[lambda_value], domain=domain),
        family="flex1",
        params=params,
        constraints=constraints,
        algebra=algebra,
        expected=ClassificationResult(case=Case.FLEX1, dim=2, commutative=False, params=params),
        axis_types={"a": (lambda_value, delta_value), "b": (lambda_value, delta_value)},
    )


@beartype.beartype
def make_flex2(domain: ScalarDomain | str, lambda_value: ParameterValue) -> CatalogEntry:
    """
    The noncommutative three-dimensional flexible algebra on a, b, x with δ = 1 - λ:
    ab = ax = xb = λx, ba = xa = bx = δx and x² = 0.

    a is an axis of Jordan type (λ, δ) and b one of type (δ, λ).

    Raises
    ------
    ParamOutOfRange
        If λ ∈ {0, 1, 1/2}.
    """
    domain = _resolve_domain(domain=domain)
    lambda_value = _read_parameter(domain=domain, value=lambda_value, name="λ")
    delta_value = 1 - lambda_value
    params = {"lambda": lambda_value, "delta": delta_value}
    constraints = _require(constraints=_flexible_constraints(), params=params, family="flex2")

    zero = [0, 0, 0]
    lambda_x = [0, 0, lambda_value]
    delta_x = [0, 0, delta_value]
    table = [
        [[1, 0, 0], lambda_x, lambda_x],
        [delta_x, [0, 1, 0], delta_x],
        [delta_x, lambda_x, zero],
    ]
    algebra = build_algebra(domain=domain, dim=3, basis_names=("a", "b", "x"), table=table)
    return CatalogEntry(
        name=_label(family="flex2", values=[lambda_value], domain=domain),
        family="flex2",
        params=params,
        constraints=constraints,
        algebra=algebra,
        expected=ClassificationResult(case=Case.FLEX2, dim=3, commutative=False, params=params),
        axis_types={"a": (lambda_value, delta_value), "b": (delta_value, lambda_value)},
    )


def _fusion_compatible(params: dict[str, Scalar]) -> bool:
    try:
        forced = bfamily_gamma(lambda_value=params["lambda"], lambda_prime=params["lambda_prime"])
    except ParamOutOfRange:
        return False
    return forced is None or forced == params["gamma"]


@beartype.beartype
def make_bfamily(
    domain: ScalarDomain | str,
    lambda_value: ParameterValue,
    lambda_prime: ParameterValue,
    gamma: ParameterValue,
) -> CatalogEntry:
    """
    The commutative three-dimensional algebra on a, b, σ with ab = ba = λ′a + λb + σ, aσ = σa = γa,
    bσ = σb = γb and σ² = γσ.

    a and b are axes of Jordan types (λ, λ) and (λ′, λ′) only when γ satisfies the fusion equations
    solved by `bfamily_gamma`; other parameter choices are rejected.

    Raises
    ------
    ParamOutOfRange
        If λ or λ′ is 0 or 1, or γ is not the value the fusion rules force.
    """
    domain = _resolve_domain(domain=domain)
    lambda_value = _read_parameter(domain=domain, value=lambda_value, name="λ")
    lambda_prime = _read_parameter(domain=domain, value=lambda_prime, name="λ′")
    gamma = _read_parameter(domain=domain, value=gamma, name="γ")
    params = {"lambda": lambda_value, "lambda_prime": lambda_prime, "gamma": gamma}
    constraints = _require(
        constraints=_not_zero_or_one(name="lambda", symbol="λ")
        + _not_zero_or_one(name="lambda_prime", symbol="λ′")
        + [Constraint(description="γ solves the fusion equations", predicate=_fusion_compatible)],
        params=params,
        family="bfamily",
    )

    product = [lambda_prime, lambda_value, 1]
    gamma_a = [gamma, 0, 0]
    gamma_b = [0, gamma, 0]
    table = [
        [[1, 0, 0], product, gamma_a],
        [product, [0, 1, 0], gamma_b],
        [gamma_a, gamma_b, [0, 0, gamma]],
    ]
    algebra = build_algebra(domain=domain, dim=3, basis_names=("a", "b", "sigma"), table=table)
    return CatalogEntry(
        name=_label(family="bfamily", values=[lambda_value, lambda_prime, gamma], domain=domain),
        family="bfamily",
        params=params,
        constraints=constraints,
        algebra=algebra,
        expected=ClassificationResult(case=Case.B_FAMILY, dim=3, commutative=True, params=params),
        axis_types={"a": (lambda_value, lambda_value), "b": (lambda_prime, lambda_prime)},
    )
