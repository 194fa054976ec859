"""CLI integration tests for the exit-code contract and the printed summaries."""

import json
import pathlib

import py
import pytest
from click.testing import CliRunner

import axial_verification

EXAMPLE_ALGEBRAS = pathlib.Path(__file__).parent / "example_algebras"
FLEX2_FILE = str(EXAMPLE_ALGEBRAS / "flex2.json")


def _invoke(*arguments: str):
    runner = CliRunner()
    return runner.invoke(axial_verification.axialverification_cli, list(arguments))


@pytest.mark.ai_generated
def test_info() -> None:
    result = _invoke("info", FLEX2_FILE)

    assert result.exit_code == 0, result.output
    assert result.output.strip() == "dim=3 field=Q flexible=yes commutative=no center_dim=1"


@pytest.mark.ai_generated
def test_info_json() -> None:
    result = _invoke("info", FLEX2_FILE, "--json")

    assert result.exit_code == 0, result.output
    assert json.loads(result.output) == {
        "center_dim": 1,
        "commutative": False,
        "dim": 3,
        "field": "Q",
        "flexible": True,
        "generators": ["a", "b"],
    }


@pytest.mark.ai_generated
def test_axis_passes_for_a_generator() -> None:
    result = _invoke("axis", FLEX2_FILE, "--coords", "1,0,0")

    assert result.exit_code == 0, result.output
    assert "verdict: Jordan axis of type (1/3, 2/3)" in result.output


@pytest.mark.ai_generated
def test_axis_with_given_type() -> None:
    result = _invoke("axis", FLEX2_FILE, "--coords", "0,1,0", "--type", "2/3,1/3", "--json")

    assert result.exit_code == 0, result.output
    payload = json.loads(result.output)
    assert payload["is_axis"] is True
    assert payload["jordan"] is True
    assert payload["failures"] == []


@pytest.mark.ai_generated
def test_axis_fails_for_the_unit() -> None:
    result = _invoke("axis", FLEX2_FILE, "--coords", "1,1,-1", "--type", "1/3,2/3")

    assert result.exit_code == 1
    assert "is_abs_left_primitive: FAIL" in result.output


@pytest.mark.ai_generated
@pytest.mark.parametrize("coords", ["0,0,0", "1,0", "1,0,1/0"])
def test_axis_input_errors(coords: str) -> None:
    result = _invoke("axis", FLEX2_FILE, "--coords", coords)

    assert result.exit_code == 2


@pytest.mark.ai_generated
def test_malformed_file_is_an_input_error() -> None:
    result = _invoke("info", str(EXAMPLE_ALGEBRAS / "malformed.json"))

    assert result.exit_code == 2
    assert "line 5" in result.output


@pytest.mark.ai_generated
def test_classify() -> None:
    result = _invoke("classify", FLEX2_FILE)

    assert result.exit_code == 0, result.output
    assert result.output.strip() == "FLEX2(λ=1/3, δ=2/3)"

    result = _invoke("classify", str(EXAMPLE_ALGEBRAS / "2B.json"), "--gens", "1,0;0,1")
    assert result.exit_code == 0, result.output
    assert result.output.strip() == "TWO_B"


@pytest.mark.ai_generated
def test_classify_with_non_generating_pair_fails() -> None:
    result = _invoke("classify", FLEX2_FILE, "--gens", "1,0,0;1,1,-1")

    assert result.exit_code == 1


@pytest.mark.ai_generated
def test_classify_rejects_unknown_generator_names() -> None:
    result = _invoke("classify", FLEX2_FILE, "--gens", "a,y")

    assert result.exit_code == 2


@pytest.mark.ai_generated
def test_decompose() -> None:
    result = _invoke("decompose", FLEX2_FILE, "--axis", "1,0,0", "--json")

    assert result.exit_code == 0, result.output
    payload = json.loads(result.output)
    assert payload["left"]["eigenspaces"] == {"0": ["b - x"], "1/3": ["x"], "1": ["a"]}
    assert payload["joint"]["1/3,2/3"] == ["x"]


@pytest.mark.ai_generated
def test_closure() -> None:
    result = _invoke("closure", FLEX2_FILE, "--gens", "a")

    assert result.exit_code == 0, result.output
    assert result.output.strip() == "dim=1 of 3: span{a}"


@pytest.mark.ai_generated
def test_idempotents() -> None:
    result = _invoke("idempotents", str(EXAMPLE_ALGEBRAS / "flex2_gf5.json"))

    assert result.exit_code == 0, result.output
    assert result.output.splitlines()[0] == "12 idempotents"


@pytest.mark.ai_generated
def test_idempotents_over_the_rationals_is_an_input_error() -> None:
    result = _invoke("idempotents", FLEX2_FILE)

    assert result.exit_code == 2


@pytest.mark.ai_generated
def test_idempotents_over_the_cap(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("AXIAL_ENUM_CAP", "10")
    result = _invoke("idempotents", str(EXAMPLE_ALGEBRAS / "flex2_gf5.json"))

    assert result.exit_code == 3


@pytest.mark.ai_generated
def test_search_dim2() -> None:
    result = _invoke("search-dim2", "--field", "GF:5")

    assert result.exit_code == 0, result.output
    assert result.output.splitlines()[0] == "survivors: 5 tables; all match the classification"


@pytest.mark.ai_generated
def test_search_dim2_needs_a_prime_field() -> None:
    result = _invoke("search-dim2", "--field", "Q")

    assert result.exit_code == 2


@pytest.mark.ai_generated
def test_export(tmpdir: py.path.local) -> None:
    listing = _invoke("export")
    assert listing.exit_code == 0, listing.output
    assert "4: flex2(1/3) over Q" in listing.output.splitlines()

    file_path = pathlib.Path(tmpdir) / "flex2.json"
    result = _invoke("export", "flex2(1/3) over Q", str(file_path))
    assert result.exit_code == 0, result.output
    assert result.output.strip() == f"Wrote flex2(1/3) over Q to {file_path}"

    exported = axial_verification.read_algebra_file(file_path=file_path)
    assert exported.algebra.table == axial_verification.read_algebra_file(file_path=FLEX2_FILE).algebra.table

    printed = _invoke("export", "4")
    assert printed.exit_code == 0, printed.output
    assert json.loads(printed.output) == json.loads(file_path.read_text(encoding="utf-8"))

    assert _invoke("export", "no such algebra").exit_code == 2


@pytest.mark.ai_generated
def test_config_cap(tmpdir: py.path.local, monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("AXIAL_VERIFICATION_HOME", str(tmpdir))
    monkeypatch.delenv("AXIAL_ENUM_CAP", raising=False)

    result = _invoke("config", "cap", "set", "2000")
    assert result.exit_code == 0, result.output
    assert result.output.strip() == "enumeration cap set to 2000"

    result = _invoke("config", "cap", "show")
    assert result.output.strip() == "2000"

    assert _invoke("config", "cap", "set", "0").exit_code == 2


@pytest.mark.ai_generated
def test_saved_workers_apply_without_the_option(tmpdir: py.path.local, monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("AXIAL_VERIFICATION_HOME", str(tmpdir))
    requested = []

    def _record_workers(algebra, workers):
        requested.append(workers)
        return []

    monkeypatch.setattr(
        "axial_verification._command_line_interface._cli.enumerate_idempotents_ff", _record_workers
    )

    result = _invoke("config", "workers", "set", "2")
    assert result.exit_code == 0, result.output
    assert _invoke("config", "workers", "show").output.strip() == "2"

    gf5_file = str(EXAMPLE_ALGEBRAS / "flex2_gf5.json")
    assert _invoke("idempotents", gf5_file).exit_code == 0
    assert _invoke("idempotents", gf5_file, "--workers", "1").exit_code == 0
    assert requested == [2, 1]

    assert _invoke("config", "workers", "set", "0").exit_code != 0
    assert _invoke("config", "workers", "set", "-1").exit_code == 0
    assert _invoke("config", "workers", "show").output.strip() == "-1"


@pytest.mark.slow
@pytest.mark.ai_generated
def test_verify_paper(tmpdir: py.path.local) -> None:
    output_file_path = pathlib.Path(tmpdir) / "report.tsv"
    result = _invoke("verify-paper", "--output", str(output_file_path))

    assert result.exit_code == 0, result.output
    assert result.output.splitlines()[-1].endswith("statements passed")
    assert output_file_path.read_text(encoding="utf-8").splitlines()[0] == "statement\tsubject\tpassed\tdetail"
