import functools
import typing

import pandas
import tqdm

from ._commutative import a_prime_subalgebra, unit_and_coaxis
from ._common import is_scalar_type, line, require_axis, zero_eigenspace_closed
from ._results import Case, StatementResult
from ._search import search_dim2_ff
from ._seress import check_seress
from ._sigma import sigma
from ._two_generated import classify_2gen
from ..algebra import (
    Algebra,
    Element,
    Subspace,
    center,
    is_commutative,
    is_flexible,
    left_op,
    multiply,
    subalgebra_closure,
)
from ..axes import check_axis, component_split, find_axes_ff, miyamoto, resolve_type
from ..idempotents import enumerate_idempotents_ff, verify_idempotent_family
from ..scalars import ScalarDomain, ScalarKind
from ..spectral import Side, kernel

if typing.TYPE_CHECKING:
    from ..catalog import CatalogEntry

Check = typing.Callable[[], bool | tuple[bool, str]]

_REPLAY_ERRORS = (ValueError, ArithmeticError, RuntimeError)
CENSUS_PRIMES = (5, 7)


def _replay(statement: str, subject: str, check: Check) -> StatementResult:
    """Run one check; an exception counts as a failure and is described in the detail."""
    try:
        outcome = check()
    except _REPLAY_ERRORS as exception:
        return StatementResult(
            statement=statement, subject=subject, passed=False, detail=f"{type(exception).__name__}: {exception}"
        )

    passed, detail = outcome if isinstance(outcome, tuple) else (outcome, "")
    return StatementResult(statement=statement, subject=subject, passed=bool(passed), detail=detail)


def _types(algebra: Algebra, element: Element):
    left_type, right_type, _ = require_axis(algebra=algebra, element=element, name="generator")
    return left_type, right_type


def _classification_matches(entry: "CatalogEntry") -> tuple[bool, str]:
    a, b = entry.generator_elements()
    result = classify_2gen(algebra=entry.algebra, a=a, b=b)
    return result.matches(entry.expected), result.label


def _product_formulas_hold(algebra: Algebra, axis: Element) -> bool:
    left_type, _ = _types(algebra=algebra, element=axis)
    lambda_value = resolve_type(algebra=algebra, value=left_type)
    for y in algebra.basis():
        split = component_split(algebra=algebra, a=axis, y=y)
        product = multiply(algebra, axis, y)
        if product != split.alpha * axis + lambda_value * split.ylambda:
            return False
        square = multiply(algebra, axis, product)
        if square != split.alpha * (1 - lambda_value) * axis + lambda_value * product:
            return False
    return True


def _axis_absorbs_its_zero_space(algebra: Algebra, axis: Element) -> bool:
    """a(Fa + A_0(L_a)) = Fa."""
    axis_line = line(algebra=algebra, element=axis)
    even = axis_line.sum(kernel(left_op(algebra, axis)))
    images = [multiply(algebra, axis, vector) for vector in even.basis]
    return Subspace.span(domain=algebra.domain, ambient_dim=algebra.dim, vectors=images) == axis_line


def _product_vanishes_or_value_part_survives(algebra: Algebra, a: Element, b: Element) -> tuple[bool, str]:
    for axis, other in ((a, b), (b, a)):
        split = component_split(algebra=algebra, a=axis, y=other)
        if not multiply(algebra, axis, other).is_zero and split.ylambda.is_zero:
            return False, f"{algebra.format_element(axis)} times {algebra.format_element(other)} is nonzero"
    return True, ""


def _sigma_from_components(algebra: Algebra, a: Element, b: Element) -> tuple[bool, str]:
    a_left, _ = _types(algebra=algebra, element=a)
    b_left, b_right = _types(algebra=algebra, element=b)
    data = sigma(algebra=algebra, a=a, b=b, lambda_value=a_left, lambda_prime=b_left, delta_prime=b_right)
    lambda_value = resolve_type(algebra=algebra, value=a_left)
    lambda_prime = resolve_type(algebra=algebra, value=b_left)
    delta_prime = resolve_type(algebra=algebra, value=b_right)

    # b split along L_a, a split along R_b.
    b_split = component_split(algebra=algebra, a=a, y=b)
    a_split = component_split(algebra=algebra, a=b, y=a, side=Side.RIGHT)
    from_a = (b_split.alpha * (1 - lambda_value) - lambda_prime) * a - lambda_value * b_split.y0
    from_b = (a_split.alpha * (1 - delta_prime) - lambda_value) * b - delta_prime * a_split.y0
    passed = data.sigma == from_a and data.sigma_right == from_b
    return passed, f"σ = {algebra.format_element(data.sigma)}, σ′ = {algebra.format_element(data.sigma_right)}"


def _right_products_in_span(algebra: Algebra, axis: Element) -> bool:
    for y in algebra.basis():
        span = Subspace.span(domain=algebra.domain, ambient_dim=algebra.dim, vectors=[axis, multiply(algebra, axis, y)])
        if not span.contains(multiply(algebra, y, axis)):
            return False
    return True


def _central_iff_equal_types(algebra: Algebra, axis: Element) -> tuple[bool, str]:
    left_type, right_type = _types(algebra=algebra, element=axis)
    central = center(algebra=algebra).contains(axis)
    return central == (left_type == right_type), f"central={central}, types=({left_type}, {right_type})"


def _products_outside_axis_lines(algebra: Algebra, a: Element, b: Element) -> bool:
    for product in (multiply(algebra, a, b), multiply(algebra, b, a)):
        if product.is_zero:
            continue
        if line(algebra=algebra, element=a).contains(product) or line(algebra=algebra, element=b).contains(product):
            return False
    return True


def _mixed_parts_square_to_zero(algebra: Algebra, a: Element, b: Element) -> tuple[bool, str]:
    for axis, other in ((a, b), (b, a)):
        left_type, right_type = _types(algebra=algebra, element=axis)
        if not (is_scalar_type(left_type) and is_scalar_type(right_type)) or left_type == right_type:
            continue
        split = component_split(algebra=algebra, a=axis, y=other)
        if not split.has_refinement:
            return False, "no joint refinement"
        if not multiply(algebra, split.ylambdadelta, split.ylambdadelta).is_zero:
            return False, f"the mixed part {algebra.format_element(split.ylambdadelta)} does not square to zero"
    return True, ""


def _vanishing_mixed_part_kills_products(algebra: Algebra, a: Element, b: Element) -> tuple[bool, str]:
    split = component_split(algebra=algebra, a=a, y=b)
    if not split.has_refinement or not split.ylambdadelta.is_zero:
        return True, "vacuous: the mixed part of b is nonzero"
    return multiply(algebra, a, b).is_zero and multiply(algebra, b, a).is_zero, ""


def _vanishing_zero_part_gives_dimension_two(algebra: Algebra, a: Element, b: Element) -> tuple[bool, str]:
    split = component_split(algebra=algebra, a=a, y=b)
    if not split.y0.is_zero:
        return True, "vacuous: the 0-part of b is nonzero"
    return subalgebra_closure(algebra=algebra, generators=[a, b]).dim == 2, ""


def _commutative_iff_equal_types(algebra: Algebra, a: Element, b: Element) -> tuple[bool, str]:
    a_types = _types(algebra=algebra, element=a)
    b_types = _types(algebra=algebra, element=b)
    commutative = is_commutative(algebra=algebra)
    if commutative:
        passed = a_types[0] == a_types[1] and b_types[0] == b_types[1]
    else:
        passed = a_types[0] != a_types[1] and b_types[0] != b_types[1]
    return passed, f"commutative={commutative}, types={a_types} and {b_types}"


def _sigma_right_vanishes(algebra: Algebra, a: Element, b: Element) -> bool:
    a_left, _ = _types(algebra=algebra, element=a)
    b_left, b_right = _types(algebra=algebra, element=b)
    data = sigma(algebra=algebra, a=a, b=b, lambda_value=a_left, lambda_prime=b_left, delta_prime=b_right)
    return data.sigma_right.is_zero


def _flex2_sigma_formula(entry: "CatalogEntry") -> bool:
    algebra = entry.algebra
    a, b = entry.generator_elements()
    x = algebra.basis_element("x")
    lambda_value, delta_value = entry.params["lambda"], entry.params["delta"]
    data = sigma(algebra=algebra, a=a, b=b, lambda_value=lambda_value, lambda_prime=delta_value)
    return data.sigma == lambda_value * x - delta_value * a - lambda_value * b


def _flex2_axis_subalgebra_is_proper(entry: "CatalogEntry") -> bool:
    algebra = entry.algebra
    a, _ = entry.generator_elements()
    x = algebra.basis_element("x")
    generated = subalgebra_closure(algebra=algebra, generators=[a, a + x])
    expected = Subspace.span(domain=algebra.domain, ambient_dim=algebra.dim, vectors=[a, x])
    return generated == expected and generated.dim < algebra.dim


def _flex_idempotent_families(entry: "CatalogEntry") -> tuple[bool, str]:
    algebra = entry.algebra
    t = algebra.domain.parameter()
    a, b = entry.generator_elements()
    if entry.family == "flex1":
        families = [t * a + (1 - t) * b]
    else:
        x = algebra.basis_element("x")
        families = [a + t * x, b + t * x]
    passed = all(verify_idempotent_family(algebra=algebra, y=family) for family in families)
    return passed, ", ".join(algebra.format_element(family) for family in families)


def _zero_parts_square_into_zero_spaces(algebra: Algebra, a: Element, b: Element) -> bool:
    b_0 = component_split(algebra=algebra, a=a, y=b).y0
    a_0 = component_split(algebra=algebra, a=b, y=a).y0
    return (
        multiply(algebra, a, multiply(algebra, b_0, b_0)).is_zero
        and multiply(algebra, b, multiply(algebra, a_0, a_0)).is_zero
    )


def _sigma_identities(entry: "CatalogEntry") -> tuple[bool, str]:
    algebra = entry.algebra
    a, b = entry.generator_elements()
    data = sigma(
        algebra=algebra, a=a, b=b, lambda_value=entry.params["lambda"], lambda_prime=entry.params["lambda_prime"]
    )
    failed = [name for name, holds in data.witnesses.items() if not holds]
    return data.gamma == entry.params["gamma"] and not failed, f"γ={data.gamma}, failed={failed}"


def _commutative_sigma_forms(entry: "CatalogEntry") -> tuple[bool, str]:
    algebra = entry.algebra
    a, b = entry.generator_elements()
    lambda_value, lambda_prime = entry.params["lambda"], entry.params["lambda_prime"]
    data = sigma(algebra=algebra, a=a, b=b, lambda_value=lambda_value, lambda_prime=lambda_prime)

    b_split = component_split(algebra=algebra, a=a, y=b)
    a_split = component_split(algebra=algebra, a=b, y=a)
    from_a = (b_split.alpha * (1 - lambda_value) - lambda_prime) * a - lambda_value * b_split.y0
    from_b = (a_split.alpha * (1 - lambda_prime) - lambda_value) * b - lambda_prime * a_split.y0
    return data.sigma == from_a == from_b, f"σ = {algebra.format_element(data.sigma)}"


def _generated_by_axes_of_one_type(entry: "CatalogEntry") -> tuple[bool, str]:
    """A is generated by a and a^τ_b, by b and b^τ_a, or a and b already share their type."""
    algebra = entry.algebra
    a, b = entry.generator_elements()
    if entry.params["lambda"] == entry.params["lambda_prime"]:
        return True, "a and b have the same type"

    dims = [a_prime_subalgebra(algebra=algebra, c=c, d=d).dim for c, d in ((a, b), (b, a))]
    return algebra.dim in dims, f"dim A′(a, b) = {dims[0]}, dim A′(b, a) = {dims[1]}"


def _unit_and_coaxis_facts(algebra: Algebra, a: Element, b: Element) -> tuple[bool, str]:
    result = unit_and_coaxis(algebra=algebra, a=a, b=b)
    failed = [name for name, holds in result.witnesses.items() if not holds]
    unit = "none" if result.unit is None else algebra.format_element(result.unit)
    return not failed, f"γ={result.gamma}, unit={unit}, failed={failed}"


def _a_prime_dimension_fact(entry: "CatalogEntry") -> tuple[bool, str]:
    algebra = entry.algebra
    a, b = entry.generator_elements()
    generated = a_prime_subalgebra(algebra=algebra, c=a, d=b)
    if generated.dim != 2:
        return True, f"vacuous: dim A′(a, b) = {generated.dim}"
    if (2 * entry.params["lambda"]).is_one:
        return True, "λ = 1/2"

    result = unit_and_coaxis(algebra=algebra, a=a, b=b)
    if result.unit is None:
        return True, "vacuous: γ = 0, so there is no unit"
    coaxis_generated = a_prime_subalgebra(algebra=algebra, c=result.coaxis, d=b)
    return coaxis_generated.dim == algebra.dim, f"dim A′(1 - a, b) = {coaxis_generated.dim}"


def _entry_statements(entry: "CatalogEntry") -> list[StatementResult]:
    algebra = entry.algebra
    a, b = entry.generator_elements()
    subject = entry.name

    checks: list[tuple[str, Check]] = [
        ("algebra is flexible", lambda: is_flexible(algebra=algebra)),
        (
            "generators are axes of the catalogued types",
            lambda: all(
                _types(algebra=algebra, element=element) == entry.axis_types[name]
                for name, element in zip(entry.generators, (a, b))
            ),
        ),
        ("classification matches the catalog", lambda: _classification_matches(entry=entry)),
        (
            "axis products follow the component split",
            lambda: _product_formulas_hold(algebra=algebra, axis=a)
            and _product_formulas_hold(algebra=algebra, axis=b),
        ),
        (
            "right products lie in the span of the axis and the left product",
            lambda: _right_products_in_span(algebra=algebra, axis=a)
            and _right_products_in_span(algebra=algebra, axis=b),
        ),
        (
            "an axis absorbs its zero eigenspace",
            lambda: _axis_absorbs_its_zero_space(algebra=algebra, axis=a)
            and _axis_absorbs_its_zero_space(algebra=algebra, axis=b),
        ),
        ("a is central exactly when its types agree", lambda: _central_iff_equal_types(algebra=algebra, axis=a)),
        ("b is central exactly when its types agree", lambda: _central_iff_equal_types(algebra=algebra, axis=b)),
        (
            "a product of axes vanishes or the λ-part survives",
            lambda: _product_vanishes_or_value_part_survives(algebra=algebra, a=a, b=b),
        ),
        (
            "σ = (α_b(1 - λ) - λ′)a - λb_0 and σ′ = (α_a(1 - δ′) - λ)b - δ′·₀a",
            lambda: _sigma_from_components(algebra=algebra, a=a, b=b),
        ),
        ("products of the generators lie outside their lines", lambda: _products_outside_axis_lines(algebra, a, b)),
        ("mixed eigenvector parts square to zero", lambda: _mixed_parts_square_to_zero(algebra=algebra, a=a, b=b)),
        (
            "zero eigenspaces are subalgebras",
            lambda: zero_eigenspace_closed(algebra=algebra, a=a) and zero_eigenspace_closed(algebra=algebra, a=b),
        ),
        ("Seress identities hold", lambda: check_seress(algebra=algebra, a=a) and check_seress(algebra=algebra, a=b)),
        (
            "algebra is spanned by a, b and ab",
            lambda: Subspace.span(
                domain=algebra.domain, ambient_dim=algebra.dim, vectors=[a, b, multiply(algebra, a, b)]
            ).dim
            == algebra.dim,
        ),
        (
            "a vanishing mixed part forces zero products",
            lambda: _vanishing_mixed_part_kills_products(algebra=algebra, a=a, b=b),
        ),
        (
            "a vanishing zero part forces dimension two",
            lambda: _vanishing_zero_part_gives_dimension_two(algebra=algebra, a=a, b=b),
        ),
        ("commutative exactly when the types agree", lambda: _commutative_iff_equal_types(algebra=algebra, a=a, b=b)),
        (
            "Miyamoto involutions are automorphisms",
            lambda: miyamoto(algebra=algebra, a=a) is not None and miyamoto(algebra=algebra, a=b) is not None,
        ),
    ]

    match entry.expected.case:
        case Case.FLEX1:
            checks.append(("σ formed with the right type of b vanishes", lambda: _sigma_right_vanishes(algebra, a, b)))
        case Case.FLEX2:
            checks.append(("σ = λx - δa - λb", lambda: _flex2_sigma_formula(entry=entry)))
            checks.append(
                ("axes of type (λ, δ) generate a proper subalgebra", lambda: _flex2_axis_subalgebra_is_proper(entry))
            )
        case Case.B_FAMILY:
            checks.append(("σ identities and γ", lambda: _sigma_identities(entry=entry)))
            checks.append(
                ("zero parts square into zero eigenspaces", lambda: _zero_parts_square_into_zero_spaces(algebra, a, b))
            )
            checks.append(("unit and co-axis", lambda: _unit_and_coaxis_facts(algebra=algebra, a=a, b=b)))
            checks.append(("dimension of A′(a, b)", lambda: _a_prime_dimension_fact(entry=entry)))
            checks.append(
                (
                    "σ = (α_b(1 - λ) - λ′)a - λb_0 = (α_a(1 - λ′) - λ)b - λ′a_0",
                    lambda: _commutative_sigma_forms(entry=entry),
                )
            )
            checks.append(
                ("generated by two axes of one Jordan type", lambda: _generated_by_axes_of_one_type(entry=entry))
            )

    if entry.family in ("flex1", "flex2") and algebra.domain.kind is ScalarKind.RATIONAL_FUNCTION:
        checks.append(("idempotent families hold identically in t", lambda: _flex_idempotent_families(entry=entry)))

    return [_replay(statement=statement, subject=subject, check=check) for statement, check in checks]


def _flex2_census(p: int, workers: int) -> tuple[bool, str]:
    from ..catalog import make_flex2

    domain = ScalarDomain.prime_field(p=p)
    entry = make_flex2(domain=domain, lambda_value=2)
    algebra = entry.algebra
    a, b = entry.generator_elements()
    x = algebra.basis_element("x")

    idempotents = enumerate_idempotents_ff(algebra=algebra, workers=workers)
    axes = [axis for axis, _ in find_axes_ff(algebra=algebra, workers=workers)]
    expected_axes = {generator + value * x for generator in (a, b) for value in domain.elements()}
    zero_spaces_closed = all(zero_eigenspace_closed(algebra=algebra, a=axis) for axis in axes)
    passed = len(idempotents) == 2 * p + 2 and set(axes) == expected_axes and zero_spaces_closed
    return passed, f"{len(idempotents)} idempotents, {len(axes)} axes"


def _non_primitive_idempotent() -> tuple[bool, str]:
    from ..catalog import make_flex2

    entry = make_flex2(domain=ScalarDomain.rational(), lambda_value="1/3")
    algebra = entry.algebra
    a, b = entry.generator_elements()
    x = algebra.basis_element("x")
    y = a + b - x
    params = entry.params
    report = check_axis(algebra=algebra, a=y, lambda_value=params["lambda"], delta_value=params["delta"])
    passed = multiply(algebra, y, y) == y and multiply(algebra, y, x) == x and not report.is_abs_left_primitive
    return passed, f"failed checks: {report.failures}"


def _dim2_oracle(p: int, workers: int) -> tuple[bool, str]:
    report = search_dim2_ff(p=p, workers=workers)
    passed = report["matches_prediction"] and report["all_flexible"]
    return passed, f"{len(report['survivors'])} surviving tables out of {report['table_count']}"


def verify_paper_suite(
    catalog: typing.Sequence["CatalogEntry"] | None = None, workers: int = 1, display_progress: bool = False
) -> list[StatementResult]:
    """
    Replay every checked statement on catalog algebras and report each verdict.

    Parameters
    ----------
    catalog : sequence of CatalogEntry, optional
        The entries to check. Defaults to the shipped catalog, in which case the dimension-2 search over
        GF(5), the flex2 idempotent census over GF(5) and GF(7) and the non-primitive idempotent a + b - x are added.
    workers : int, default: 1
        Worker processes for the exhaustive searches.
    display_progress : bool, default: False
        Whether to show a progress bar over the entries.

    Returns
    -------
    list of StatementResult
        One result per statement and subject. Failures are results, never exceptions.
    """
    from ..catalog import shipped_catalog

    run_global_checks = catalog is None
    entries = shipped_catalog() if catalog is None else list(catalog)

    report = []
    for entry in tqdm.tqdm(
        iterable=entries, desc="Replaying statements", unit="algebras", smoothing=0, disable=not display_progress
    ):
        report.extend(_entry_statements(entry=entry))

    if run_global_checks:
        report.append(
            _replay(
                statement="dimension-2 classification is exhaustive",
                subject="all tables over GF(5)",
                check=lambda: _dim2_oracle(p=5, workers=workers),
            )
        )
        report.extend(
            _replay(
                statement="flex2 has 2p + 2 idempotents and axes a + γx, b + γx",
                subject=f"flex2(2) over GF({p})",
                check=functools.partial(_flex2_census, p=p, workers=workers),
            )
            for p in CENSUS_PRIMES
        )
        report.append(
            _replay(
                statement="a + b - x is an idempotent that is not absolutely primitive",
                subject="flex2(1/3) over Q",
                check=_non_primitive_idempotent,
            )
        )
    return report


def suite_passed(report: typing.Sequence[StatementResult]) -> bool:
    return all(result["passed"] for result in report)


def report_to_frame(report: typing.Sequence[StatementResult]) -> pandas.DataFrame:
    """A table with one row per statement and the columns statement, subject, passed and detail."""
    return pandas.DataFrame(data=list(report), columns=["statement", "subject", "passed", "detail"])
