import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from reductive_workbench.catalog import catalog_names, construct
from reductive_workbench.cli import main
from reductive_workbench.errors import SpecFileError
from reductive_workbench.report import SpaceReport, run_report
from reductive_workbench.specfile import parse_positioned, parse_space_spec

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"


# --- positioned parser ---------------------------------------------------------


def test_positioned_parser_tracks_paths():
    text = '{\n  "a": [1, 2, {"b": "x"}],\n  "c": true\n}'
    value, positions = parse_positioned(text)
    assert value == {"a": [1, 2, {"b": "x"}], "c": True}
    assert positions[("a",)] == (2, 8)
    assert positions[("a", 2, "b")][0] == 2
    assert positions[("c",)][0] == 3


def test_positioned_parser_syntax_errors():
    with pytest.raises(SpecFileError) as exc:
        parse_positioned('{"a": [1, 2')
    assert exc.value.line is not None
    with pytest.raises(SpecFileError):
        parse_positioned('{"a": 1} trailing')
    with pytest.raises(SpecFileError):
        parse_positioned('{"a": 1, "a": 2}')


def test_parse_space_spec_semantic_errors_have_positions():
    base = {
        "basis": ["x", "y"],
        "brackets": [[1, 2, 1, "1"]],
        "subalgebra": [],
        "metric": {"mode": "negative_killing"},
    }
    bad_index = dict(base, brackets=[[1, 5, 1, "1"]])
    with pytest.raises(SpecFileError) as exc:
        parse_space_spec(json.dumps(bad_index, indent=1))
    assert "out of range" in str(exc.value) and "line" in str(exc.value)
    bad_order = dict(base, brackets=[[2, 1, 1, "1"]])
    with pytest.raises(SpecFileError) as exc:
        parse_space_spec(json.dumps(bad_order))
    assert "i < j" in str(exc.value)
    bad_rat = dict(base, brackets=[[1, 2, 1, "1/0"]])
    with pytest.raises(SpecFileError):
        parse_space_spec(json.dumps(bad_rat))
    bad_row = dict(base, subalgebra=[["1"]])
    with pytest.raises(SpecFileError) as exc:
        parse_space_spec(json.dumps(bad_row))
    assert "length" in str(exc.value)
    bad_float = dict(base, brackets=[[1, 2, 1, 0.5]])
    with pytest.raises(SpecFileError):
        parse_space_spec(json.dumps(bad_float))


def test_parse_space_spec_roundtrip():
    spec = parse_space_spec((DATA / "so3_sphere.json").read_text())
    assert spec.dim == 3
    assert spec.basis_labels == ("L1", "L2", "L3")
    assert spec.assertions.locally_irreducible is True
    assert spec.assertions.is_sphere_or_rp is True


# --- golden reports ---------------------------------------------------------------


@pytest.mark.parametrize("name", catalog_names())
def test_golden_reports_are_stable(name):
    report = run_report(construct(name), checks="all", numeric=False)
    assert report.to_json() == (GOLDEN / f"{name}.json").read_text()
    assert report.to_text() == (GOLDEN / f"{name}.txt").read_text()
    assert report.exit_code == 0


def test_reports_validate_against_report_schema():
    import jsonschema
    from importlib import resources

    schema = json.loads(
        resources.files("reductive_workbench")
        .joinpath("schemas/report.schema.json")
        .read_text()
    )
    for name in ("so4_mod_so2", "so3so3_mod_second_factor", "r2_mod_0"):
        report = run_report(construct(name), checks="all", numeric=True)
        jsonschema.validate(report.body, schema)


def test_report_byte_determinism_repeated_runs():
    # the full three-run catalog sweep lives in the acceptance suite
    for name in ("so4_mod_so2", "so3so3_mod_second_factor"):
        first = run_report(construct(name), checks="all").to_json()
        second = run_report(construct(name), checks="all").to_json()
        assert first == second


# --- CLI behaviour -----------------------------------------------------------------


def test_cli_list_catalog(capsys):
    assert main(["--list-catalog"]) == 0
    out = capsys.readouterr().out.strip().splitlines()
    assert out == list(catalog_names())


def test_cli_catalog_json(capsys):
    assert main(["--catalog", "so4_mod_so2", "--json"]) == 0
    body = json.loads(capsys.readouterr().out)
    assert body["dims"]["affine"] == 7
    assert body["torus_dim"] == 1
    assert body["flags"]["isotropy_probe"] == "reducible"
    assert body["engine"]["conventions"]["torsion"] == "T(X,Y) = -[X,Y]_m"


def test_cli_ineffective_entry_exits_zero(capsys):
    assert main(["--catalog", "so3so3_mod_second_factor"]) == 0
    out = capsys.readouterr().out
    assert "effective=false" in out
    assert "transvection_equals_g=false" in out


def test_cli_spec_file_asserted(capsys):
    assert main([str(DATA / "so4_mod_so2_asserted.json"), "--json"]) == 0
    body = json.loads(capsys.readouterr().out)
    assert body["isometry"]["certified"] is True
    assert body["isometry"]["group_dim"] == 7
    assert body["isometry"]["semisimple"] is False


def test_cli_sphere_gate_blocks_certification(capsys):
    assert main([str(DATA / "so3_sphere.json"), "--json"]) == 0
    body = json.loads(capsys.readouterr().out)
    assert body["isometry"]["certified"] is False
    assert body["dims"]["affine"] == 3


def test_cli_malformed_brackets_entry(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(
        '{\n"basis": ["a", "b"],\n"brackets": [[1, 2]],\n'
        '"subalgebra": [],\n"metric": {"mode": "negative_killing"}\n}'
    )
    assert main([str(bad)]) == 1
    err = capsys.readouterr().err
    assert "line 3" in err and "column" in err


def test_cli_json_syntax_error(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"basis": ["a"\n')
    assert main([str(bad)]) == 1
    assert "line" in capsys.readouterr().err


def test_cli_jacobi_violation_names_operation(tmp_path, capsys):
    bad = tmp_path / "corrupt.json"
    bad.write_text(
        json.dumps(
            {
                "basis": ["f1", "f2", "f3"],
                "brackets": [
                    [1, 2, 1, "1"], [1, 2, 3, "1"],
                    [1, 3, 2, "-1"],
                    [2, 3, 1, "2"], [2, 3, 3, "-1"],
                ],
                "subalgebra": [],
                "metric": {"mode": "negative_killing"},
            }
        )
    )
    assert main([str(bad)]) == 1
    err = capsys.readouterr().err
    assert "make_lie_algebra" in err
    assert "(0, 1, 2)" in err


def test_cli_missing_file_and_no_inputs(capsys):
    assert main(["/nonexistent/path.json"]) == 1
    capsys.readouterr()
    assert main([]) == 1


def test_cli_engine_error_names_failing_operation(tmp_path, capsys):
    bad = tmp_path / "not_subalgebra.json"
    bad.write_text(
        json.dumps(
            {
                "basis": ["L1", "L2", "L3"],
                "brackets": [[1, 2, 3, 1], [2, 3, 1, 1], [1, 3, 2, -1]],
                "subalgebra": [[1, 0, 0], [0, 1, 0]],  # span(L1,L2) is not closed
                "metric": {"mode": "negative_killing"},
            }
        )
    )
    assert main([str(bad)]) == 1
    assert "normal_decomposition" in capsys.readouterr().err


def test_cli_unknown_catalog_name(capsys):
    assert main(["--catalog", "nope"]) == 1
    assert "no catalog family" in capsys.readouterr().err


def test_cli_fast_checks_skip_connection_sweep(capsys):
    assert main(["--catalog", "so3_mod_so2", "--checks", "fast", "--json"]) == 0
    body = json.loads(capsys.readouterr().out)
    names = {v["name"]: v for v in body["theorem_verdicts"]}
    assert names["connection_consistency"]["applicable"] is False


def test_cli_numeric_checks_section(capsys):
    assert main(["--catalog", "so4_mod_so2", "--numeric-checks", "--json"]) == 0
    body = json.loads(capsys.readouterr().out)
    assert body["numeric"]["status"] == "ok"
    assert body["numeric"]["all_below_tolerance"] is True


def test_cli_numeric_checks_skipped_for_files(capsys):
    assert main([str(DATA / "so3_sphere.json"), "--numeric-checks", "--json"]) == 0
    body = json.loads(capsys.readouterr().out)
    assert body["numeric"]["status"].startswith("skipped")


def test_cli_parallel_runs_match_sequential(capsys, monkeypatch):
    args = ["--catalog", "so3_mod_so2", "--catalog", "r2_mod_0", "--json"]
    assert main(args) == 0
    sequential = capsys.readouterr().out
    monkeypatch.setenv("REDUCTIVE_WORKBENCH_THREADS", "2")
    assert main(args) == 0
    assert capsys.readouterr().out == sequential


def test_exit_code_two_on_failed_applicable_verdict():
    body = {
        "theorem_verdicts": [
            {"name": "x", "applicable": True, "passed": False, "details": None}
        ]
    }
    assert SpaceReport(body).exit_code == 2


def test_console_entry_point_subprocess():
    env = dict(os.environ)
    env["PYTHONPATH"] = str(Path(__file__).resolve().parent.parent / "src")
    proc = subprocess.run(
        [sys.executable, "-m", "reductive_workbench", "--catalog", "r2_mod_0", "--json"],
        capture_output=True,
        text=True,
        env=env,
    )
    assert proc.returncode == 0
    body = json.loads(proc.stdout)
    assert body["dims"] == {
        "g": 2, "h": 0, "m": 2, "m_fixed": 2, "k": 2, "k_center": 2,
        "transvection": 2, "affine": 2,
    }
