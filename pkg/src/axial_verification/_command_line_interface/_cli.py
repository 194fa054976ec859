"""Command line interface definitions for the axial algebra verification tool."""

import contextlib
import json
import os
import pathlib
import typing

import rich_click

from .._algebra_file import AlgebraDefinition, dump_algebra, parse_axis_type, read_algebra_file
from .._exceptions import (
    DimExceedsThree,
    EnumerationTooLarge,
    NonCommutingOps,
    NotAnAxis,
    NotCommutativeCase,
    NotGeneratedByGivenAxes,
    NotTwoDim,
    ParamOutOfRange,
    ParseError,
)
from ..algebra import Algebra, Element, center, is_commutative, is_flexible, subalgebra_closure
from ..axes import AxisReport, check_axis, detect_axis_type, resolve_type
from ..catalog import entry_to_file, shipped_catalog
from ..classify import Case, classify_2gen, report_to_frame, search_dim2_ff, suite_passed, verify_paper_suite
from ..config import get_enumeration_cap, get_workers, set_enumeration_cap, set_workers
from ..idempotents import enumerate_idempotents_ff
from ..scalars import ScalarDomain
from ..spectral import Side, eigen_decompose, joint_decompose

EXIT_PASSED = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_RESOURCE_CAP = 3

_MATHEMATICAL_FAILURES = (
    NotAnAxis,
    NotGeneratedByGivenAxes,
    NotTwoDim,
    DimExceedsThree,
    NonCommutingOps,
    NotCommutativeCase,
    ParamOutOfRange,
)

_WORKERS_OPTION = rich_click.option(
    "--workers",
    help=(
        "The maximum number of workers to use for parallel processing. "
        "Allows negative slicing semantics, where -1 means all available cores, -2 means all but one, etc. "
        "Defaults to the saved value of `axialverification config workers`, which is 1 unless changed."
    ),
    required=False,
    type=rich_click.IntRange(min=-os.cpu_count() + 1, max=os.cpu_count()),
    default=None,
)
_JSON_OPTION = rich_click.option(
    "--json",
    "as_json",
    help="Print machine-readable JSON with sorted keys instead of text.",
    is_flag=True,
    default=False,
)


@contextlib.contextmanager
def _exit_codes() -> typing.Iterator[None]:
    """Translate library errors into the exit-code contract: 1 check failed, 2 input error, 3 resource cap."""
    try:
        yield
    except EnumerationTooLarge as exception:
        rich_click.echo(message=f"Error: {exception}", err=True)
        raise SystemExit(EXIT_RESOURCE_CAP)
    except _MATHEMATICAL_FAILURES as exception:
        rich_click.echo(message=f"Check failed: {exception}", err=True)
        raise SystemExit(EXIT_CHECK_FAILED)
    except (ValueError, ArithmeticError) as exception:
        rich_click.echo(message=f"Error: {exception}", err=True)
        raise SystemExit(EXIT_INPUT_ERROR)


def _echo_json(payload: typing.Any) -> None:
    rich_click.echo(message=json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False))


def _resolve_workers(workers: int | None) -> int:
    return get_workers() if workers is None else workers


def _yes_no(value: bool | None) -> str:
    match value:
        case None:
            return "not run"
        case True:
            return "yes"
        case _:
            return "no"


def _parse_element(algebra: Algebra, text: str) -> Element:
    return algebra.element(coords=[token.strip() for token in text.split(",")])


def _parse_generators(definition: AlgebraDefinition, text: str | None) -> list[Element]:
    """Generators given as basis names ('a,b') or as coordinate vectors separated by semicolons ('1,0,0;0,1,0')."""
    algebra = definition.algebra
    if text is None:
        if not definition.generators:
            message = "The algebra file names no generators; pass them with --gens."
            raise ParseError(message)
        return definition.generator_elements()

    if ";" in text:
        return [_parse_element(algebra=algebra, text=vector) for vector in text.split(";")]

    names = [name.strip() for name in text.split(",")]
    unknown = [name for name in names if name not in algebra.basis_names]
    if unknown:
        message = (
            f"{unknown} are not basis names; the basis is {list(algebra.basis_names)}. "
            "Separate coordinate vectors with ';'."
        )
        raise ParseError(message)
    return [algebra.basis_element(name) for name in names]


def _report_to_dict(algebra: Algebra, a: Element, report: AxisReport) -> dict[str, typing.Any]:
    return {
        "element": algebra.format_element(a),
        "left_type": str(report.left_type),
        "right_type": None if report.right_type is None else str(report.right_type),
        "checks": report.checks(),
        "failures": report.failures,
        "is_axis": report.is_axis,
        "jordan": bool(report.jordan_type_ok),
    }


# axialverification
@rich_click.group()
def axialverification_cli():
    pass


# axialverification info < file >
@axialverification_cli.command(name="info")
@rich_click.argument("file", type=rich_click.Path(exists=True, dir_okay=False))
@_JSON_OPTION
def _info_cli(file: str, as_json: bool = False) -> None:
    """
    Summarize an algebra file: dimension, field, flexibility, commutativity and the dimension of the center.

    FILE : The path to a JSON algebra file.
    """
    with _exit_codes():
        definition = read_algebra_file(file_path=file)
        algebra = definition.algebra
        summary = {
            "dim": algebra.dim,
            "field": algebra.domain.label,
            "flexible": is_flexible(algebra=algebra),
            "commutative": is_commutative(algebra=algebra),
            "center_dim": center(algebra=algebra).dim,
            "generators": list(definition.generators),
        }

    if as_json:
        _echo_json(payload=summary)
        return

    rich_click.echo(
        message=(
            f"dim={summary['dim']} field={summary['field']} flexible={_yes_no(summary['flexible'])} "
            f"commutative={_yes_no(summary['commutative'])} center_dim={summary['center_dim']}"
        )
    )


# axialverification axis < file > --coords < coordinates >
@axialverification_cli.command(name="axis")
@rich_click.argument("file", type=rich_click.Path(exists=True, dir_okay=False))
@rich_click.option(
    "--coords",
    help="Comma-separated coordinates of the candidate axis in the file's basis, such as '1,0,0'.",
    required=True,
    type=str,
)
@rich_click.option(
    "--type",
    "axis_type",
    help=(
        "The type 'λ,δ' to check against, such as '1/3,2/3'; either entry may be 'ANY'. "
        "By default, the type is read off the spectra of the left and right multiplications."
    ),
    required=False,
    type=str,
    default=None,
)
@_JSON_OPTION
def _axis_cli(file: str, coords: str, axis_type: str | None = None, as_json: bool = False) -> None:
    """
    Check the axis axioms for one element, axiom by axiom.

    Exits with 0 if the element is an axis of the given (or detected) type and 1 if any axiom fails.

    FILE : The path to a JSON algebra file.
    """
    with _exit_codes():
        algebra = read_algebra_file(file_path=file).algebra
        a = _parse_element(algebra=algebra, text=coords)
        if a.is_zero:
            message = "The zero element is never an axis."
            raise ParseError(message)

        if axis_type is None:
            try:
                left_type, right_type = detect_axis_type(algebra=algebra, a=a)
            except NotAnAxis as exception:
                rich_click.echo(message=f"{algebra.format_element(a)} is not an axis: {exception}")
                raise SystemExit(EXIT_CHECK_FAILED)
        else:
            pair = axis_type.split(",")
            if len(pair) != 2:
                message = f"--type expects 'λ,δ' but received '{axis_type}'."
                raise ParseError(message)
            left_type, right_type = (parse_axis_type(text=text, domain=algebra.domain) for text in pair)

        report = check_axis(
            algebra=algebra,
            a=a,
            lambda_value=resolve_type(algebra=algebra, value=left_type),
            delta_value=resolve_type(algebra=algebra, value=right_type),
            include_decomposition=False,
        )

    if as_json:
        _echo_json(payload=_report_to_dict(algebra=algebra, a=a, report=report))
    else:
        rich_click.echo(message=f"element: {algebra.format_element(a)}")
        rich_click.echo(message=f"type: ({report.left_type}, {report.right_type})")
        for name, passed in report.checks().items():
            rich_click.echo(message=f"  {name}: {'pass' if passed else 'FAIL'}")
        if report.is_axis:
            kind = "Jordan axis" if report.jordan_type_ok else "axis"
            rich_click.echo(message=f"verdict: {kind} of type ({report.left_type}, {report.right_type})")
        else:
            rich_click.echo(message=f"verdict: not an axis; failed {', '.join(report.failures)}")

    raise SystemExit(EXIT_PASSED if report.is_axis else EXIT_CHECK_FAILED)


# axialverification classify < file >
@axialverification_cli.command(name="classify")
@rich_click.argument("file", type=rich_click.Path(exists=True, dir_okay=False))
@rich_click.option(
    "--gens",
    help=(
        "The two generating axes, as basis names ('a,b') or coordinate vectors separated by ';'. "
        "By default, the generators named in the file are used."
    ),
    required=False,
    type=str,
    default=None,
)
@_JSON_OPTION
def _classify_cli(file: str, gens: str | None = None, as_json: bool = False) -> None:
    """
    Classify an algebra generated by two axes of Jordan type.

    FILE : The path to a JSON algebra file.
    """
    with _exit_codes():
        definition = read_algebra_file(file_path=file)
        generators = _parse_generators(definition=definition, text=gens)
        if len(generators) != 2:
            message = f"Classification needs exactly two generators, but received {len(generators)}."
            raise ParseError(message)
        result = classify_2gen(algebra=definition.algebra, a=generators[0], b=generators[1])

    if as_json:
        _echo_json(payload=result.to_dict())
    else:
        rich_click.echo(message=result.label)

    raise SystemExit(EXIT_CHECK_FAILED if result.case is Case.NOT_CLASSIFIABLE else EXIT_PASSED)


# axialverification decompose < file > --axis < coordinates >
@axialverification_cli.command(name="decompose")
@rich_click.argument("file", type=rich_click.Path(exists=True, dir_okay=False))
@rich_click.option(
    "--axis",
    "coords",
    help="Comma-separated coordinates of the element whose eigenspaces are computed.",
    required=True,
    type=str,
)
@_JSON_OPTION
def _decompose_cli(file: str, coords: str, as_json: bool = False) -> None:
    """
    Show the eigenspaces of the left and right multiplications by an element and, when they commute, the joint parts.

    FILE : The path to a JSON algebra file.
    """
    with _exit_codes():
        algebra = read_algebra_file(file_path=file).algebra
        a = _parse_element(algebra=algebra, text=coords)
        sides = {side: eigen_decompose(algebra=algebra, a=a, side=side) for side in (Side.LEFT, Side.RIGHT)}
        try:
            joint = joint_decompose(algebra=algebra, a=a)
        except NonCommutingOps:
            joint = None

    def _span(vectors: list[Element]) -> list[str]:
        return [algebra.format_element(vector) for vector in vectors]

    payload: dict[str, typing.Any] = {
        side.value: {
            "minimal_polynomial": str(decomposition.minimal_polynomial),
            "split": decomposition.split,
            "semisimple": decomposition.semisimple,
            "eigenspaces": {str(value): _span(decomposition.parts[value].basis) for value in decomposition.eigenvalues},
        }
        for side, decomposition in sides.items()
    }
    payload["joint"] = (
        None
        if joint is None
        else {f"{left},{right}": _span(subspace.basis) for (left, right), subspace in joint.parts.items()}
    )

    if as_json:
        _echo_json(payload=payload)
        return

    for side, decomposition in sides.items():
        rich_click.echo(message=f"{side.value}: minimal polynomial {decomposition.minimal_polynomial}")
        if not decomposition.complete:
            rich_click.echo(message=f"  split={decomposition.split} semisimple={decomposition.semisimple}")
        for value, vectors in payload[side.value]["eigenspaces"].items():
            rich_click.echo(message=f"  eigenvalue {value}: span{{{', '.join(vectors)}}}")
    if joint is None:
        rich_click.echo(message="joint: the left and right multiplications do not commute")
        return
    for key, vectors in payload["joint"].items():
        rich_click.echo(message=f"joint ({key}): span{{{', '.join(vectors)}}}")


# axialverification closure < file > --gens < generators >
@axialverification_cli.command(name="closure")
@rich_click.argument("file", type=rich_click.Path(exists=True, dir_okay=False))
@rich_click.option(
    "--gens",
    help="Basis names ('a,b') or coordinate vectors separated by ';'. By default, the file's generators.",
    required=False,
    type=str,
    default=None,
)
@_JSON_OPTION
def _closure_cli(file: str, gens: str | None = None, as_json: bool = False) -> None:
    """
    Compute the subalgebra generated by some elements.

    FILE : The path to a JSON algebra file.
    """
    with _exit_codes():
        definition = read_algebra_file(file_path=file)
        generators = _parse_generators(definition=definition, text=gens)
        closure = subalgebra_closure(algebra=definition.algebra, generators=generators)

    basis = [definition.algebra.format_element(vector) for vector in closure.basis]
    if as_json:
        _echo_json(payload={"dim": closure.dim, "ambient_dim": definition.algebra.dim, "basis": basis})
        return
    rich_click.echo(message=f"dim={closure.dim} of {definition.algebra.dim}: span{{{', '.join(basis)}}}")


# axialverification idempotents < file >
@axialverification_cli.command(name="idempotents")
@rich_click.argument("file", type=rich_click.Path(exists=True, dir_okay=False))
@_WORKERS_OPTION
@_JSON_OPTION
def _idempotents_cli(file: str, workers: int | None = None, as_json: bool = False) -> None:
    """
    List every idempotent of an algebra over a prime field.

    FILE : The path to a JSON algebra file over GF(p).
    """
    with _exit_codes():
        algebra = read_algebra_file(file_path=file).algebra
        idempotents = enumerate_idempotents_ff(algebra=algebra, workers=_resolve_workers(workers=workers))

    rendered = [algebra.format_element(element) for element in idempotents]
    if as_json:
        _echo_json(payload={"count": len(rendered), "idempotents": rendered})
        return
    rich_click.echo(message=f"{len(rendered)} idempotents")
    for text in rendered:
        rich_click.echo(message=f"  {text}")


# axialverification search-dim2 --field < GF:p >
@axialverification_cli.command(name="search-dim2")
@rich_click.option(
    "--field",
    "field_label",
    help="The prime field to search over, written 'GF:p' for an odd prime p.",
    required=False,
    type=str,
    default="GF:5",
)
@_WORKERS_OPTION
@_JSON_OPTION
def _search_dim2_cli(field_label: str = "GF:5", workers: int | None = None, as_json: bool = False) -> None:
    """
    Enumerate every two-dimensional algebra generated by two axes over GF(p) and compare with the classification.
    """
    with _exit_codes():
        domain = ScalarDomain.from_text(text=field_label)
        if not domain.is_finite:
            message = f"search-dim2 needs a prime field, but received '{field_label}'."
            raise ParseError(message)
        report = search_dim2_ff(p=domain.p, workers=_resolve_workers(workers=workers))

    passed = report["matches_prediction"] and report["all_flexible"]
    if as_json:
        _echo_json(payload=report)
    else:
        agreement = "all match the classification"
        if not report["matches_prediction"]:
            agreement = "MISMATCH with the classification"
        rich_click.echo(message=f"survivors: {len(report['survivors'])} tables; {agreement}")
        for survivor in report["survivors"]:
            rich_click.echo(message=f"  {survivor['table']}: {survivor['label']}")
        if not report["all_flexible"]:
            rich_click.echo(message="some survivors are not flexible")

    raise SystemExit(EXIT_PASSED if passed else EXIT_CHECK_FAILED)


# axialverification verify-paper
@axialverification_cli.command(name="verify-paper")
@rich_click.option(
    "--output",
    "output_file_path",
    help="Also write the per-statement table to this TSV file.",
    required=False,
    type=rich_click.Path(writable=True, dir_okay=False),
    default=None,
)
@_WORKERS_OPTION
@_JSON_OPTION
def _verify_paper_cli(
    output_file_path: str | None = None, workers: int | None = None, as_json: bool = False
) -> None:
    """
    Replay every checked statement of the classification on the shipped catalog.

    Exits with 0 if and only if every statement passes.
    """
    with _exit_codes():
        report = verify_paper_suite(workers=_resolve_workers(workers=workers))

    frame = report_to_frame(report=report)
    if output_file_path is not None:
        frame.to_csv(path_or_buf=output_file_path, sep="\t", index=False)

    passed = suite_passed(report=report)
    if as_json:
        _echo_json(payload=[dict(result) for result in report])
    else:
        rich_click.echo(message=frame.to_string(index=False))
        failures = int((~frame["passed"]).sum())
        rich_click.echo(message=f"{len(frame) - failures} of {len(frame)} statements passed")

    raise SystemExit(EXIT_PASSED if passed else EXIT_CHECK_FAILED)


# axialverification export < entry > < file >
@axialverification_cli.command(name="export")
@rich_click.argument("entry", type=str, required=False, default=None)
@rich_click.argument("file", type=rich_click.Path(writable=True, dir_okay=False), required=False, default=None)
def _export_cli(entry: str | None = None, file: str | None = None) -> None:
    """
    Write a catalog algebra to a JSON algebra file.

    Without arguments, list the catalog entries with their indices.

    ENTRY : The index or exact name of a catalog entry.

    FILE : The path of the algebra file to write; by default the file is printed.
    """
    catalog = shipped_catalog()
    if entry is None:
        for index, catalog_entry in enumerate(catalog):
            rich_click.echo(message=f"{index}: {catalog_entry.name}")
        return

    if entry.isdigit() and int(entry) < len(catalog):
        selected = catalog[int(entry)]
    else:
        matching = [catalog_entry for catalog_entry in catalog if catalog_entry.name == entry]
        if not matching:
            rich_click.echo(message=f"Error: no catalog entry named '{entry}'.", err=True)
            raise SystemExit(EXIT_INPUT_ERROR)
        selected = matching[0]

    text = dump_algebra(data=entry_to_file(entry=selected))
    if file is None:
        rich_click.echo(message=text, nl=False)
        return
    pathlib.Path(file).write_text(text, encoding="utf-8")
    rich_click.echo(message=f"Wrote {selected.name} to {file}")


# axialverification config
@axialverification_cli.group(name="config")
def _config_cli() -> None:
    """Configuration options, such as the enumeration cap and the default number of workers."""
    pass


# axialverification config cap
@_config_cli.group(name="cap")
def _cap_cli() -> None:
    """The maximum number of elements an exhaustive finite-field scan may visit."""
    pass


# axialverification config cap set < n >
@_cap_cli.command(name="set")
@rich_click.argument("cap", type=rich_click.IntRange(min=1))
def _set_cap_cli(cap: int) -> None:
    """
    Save a new enumeration cap.

    The AXIAL_ENUM_CAP environment variable still takes precedence over the saved value.
    """
    set_enumeration_cap(cap=cap)
    rich_click.echo(message=f"enumeration cap set to {cap}")


# axialverification config cap show
@_cap_cli.command(name="show")
def _show_cap_cli() -> None:
    with _exit_codes():
        cap = get_enumeration_cap()
    rich_click.echo(message=str(cap))


# axialverification config workers
@_config_cli.group(name="workers")
def _workers_cli() -> None:
    """The default number of workers for the exhaustive searches when --workers is omitted."""
    pass


# axialverification config workers set < n >
@_workers_cli.command(name="set", context_settings={"ignore_unknown_options": True})
@rich_click.argument("workers", type=int)
def _set_workers_cli(workers: int) -> None:
    """Save a new default number of workers; negative values count back from all available cores."""
    with _exit_codes():
        set_workers(workers=workers)
    rich_click.echo(message=f"workers set to {workers}")


# axialverification config workers show
@_workers_cli.command(name="show")
def _show_workers_cli() -> None:
    rich_click.echo(message=str(get_workers()))
