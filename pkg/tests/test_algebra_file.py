import pathlib

import py
import pytest

import axial_verification

EXAMPLE_ALGEBRAS = pathlib.Path(__file__).parent / "example_algebras"


@pytest.mark.ai_generated
def test_read_flex2_file() -> None:
    definition = axial_verification.read_algebra_file(file_path=EXAMPLE_ALGEBRAS / "flex2.json")
    expected = axial_verification.catalog.make_flex2(domain="Q", lambda_value="1/3")

    assert definition.algebra.table == expected.algebra.table
    assert definition.algebra.basis_names == ("a", "b", "x")
    assert definition.generators == ("a", "b")
    assert definition.axis_types == expected.axis_types


@pytest.mark.ai_generated
def test_any_types_are_read() -> None:
    definition = axial_verification.read_algebra_file(file_path=EXAMPLE_ALGEBRAS / "2B.json")

    assert definition.axis_types["a"] == (axial_verification.axes.ANY, axial_verification.axes.ANY)


@pytest.mark.ai_generated
def test_write_and_read_back(tmpdir: py.path.local) -> None:
    tmpdir = pathlib.Path(tmpdir)
    definition = axial_verification.read_algebra_file(file_path=EXAMPLE_ALGEBRAS / "flex2_gf5.json")

    file_path = tmpdir / "copy.json"
    axial_verification.write_algebra_file(file_path=file_path, definition=definition)
    written = axial_verification.read_algebra_file(file_path=file_path)

    assert written.algebra.domain.label == "GF:5"
    assert written.algebra.table == definition.algebra.table
    assert written.generators == definition.generators
    assert file_path.read_text(encoding="utf-8") == axial_verification.dump_algebra(
        data=axial_verification.algebra_to_dict(algebra=definition.algebra, generators=definition.generators)
    )


@pytest.mark.ai_generated
def test_malformed_json_names_the_line() -> None:
    with pytest.raises(axial_verification.ParseError, match="line 5"):
        axial_verification.read_algebra_file(file_path=EXAMPLE_ALGEBRAS / "malformed.json")


@pytest.mark.ai_generated
def test_bad_scalar_in_table() -> None:
    with pytest.raises(axial_verification.ParseError):
        axial_verification.read_algebra_file(file_path=EXAMPLE_ALGEBRAS / "bad_scalar.json")


@pytest.mark.ai_generated
@pytest.mark.parametrize(
    "data, exception, match",
    [
        ({"field": "Q", "dim": 1, "basis": ["a"]}, axial_verification.ParseError, "missing the keys"),
        ({"field": "R", "dim": 1, "basis": ["a"], "table": [[["1"]]]}, axial_verification.ParseError, "Unknown"),
        (
            {"field": "Q", "dim": 1, "basis": ["a"], "table": [[["1"]]], "generators": ["b"]},
            axial_verification.ParseError,
            "not basis names",
        ),
        ({"field": "Q", "dim": 2, "basis": ["a", "b"], "table": [[["1"]]]}, axial_verification.ShapeError, "2 x 2"),
    ],
)
def test_invalid_algebra_contents(data: dict, exception: type, match: str) -> None:
    with pytest.raises(exception, match=match):
        axial_verification.algebra_from_dict(data=data)
