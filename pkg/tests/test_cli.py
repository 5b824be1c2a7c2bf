"""End-to-end tests for ui/cli.py through main()."""

import io
import json

import jsonschema
import pandas as pd
import pytest

from config.settings import PATTERN_CONFIG, REPORT_SCHEMA_FILE, VERIFICATION_CONFIG
from ui.cli import EXIT_COUNTEREXAMPLE, EXIT_ERROR, EXIT_OK, main


@pytest.fixture(autouse=True)
def restore_settings(monkeypatch):
    # main() pushes flag values into the shared settings dicts
    monkeypatch.setitem(PATTERN_CONFIG, "catalog_path", PATTERN_CONFIG["catalog_path"])
    monkeypatch.setitem(VERIFICATION_CONFIG, "workers", VERIFICATION_CONFIG["workers"])


@pytest.fixture(scope="module")
def schema():
    with open(REPORT_SCHEMA_FILE, "r", encoding="utf-8") as handle:
        return json.load(handle)


def run(argv, stdin_text=None, monkeypatch=None):
    if stdin_text is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin_text))
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv) + ["--cache", "none"] if "--cache" not in argv else list(argv),
                stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def run_json(argv, schema, **kwargs):
    code, out, err = run(list(argv) + ["--format", "json"], **kwargs)
    data = json.loads(out)
    jsonschema.validate(data, schema)
    return code, data, err


# =============================================================================
# PARAMS
# =============================================================================

def test_params_of_four_cycle(monkeypatch, schema):
    code, data, _ = run_json(["params"], schema, stdin_text="Cl\n", monkeypatch=monkeypatch)
    assert code == EXIT_OK
    record = data["records"][0]
    values = [record[c] for c in ("omega", "chi", "h", "psi", "alpha", "b", "B", "Gamma", "gamma")]
    assert values == [2, 2, 3, 3, 2, 2, 2, 2, 3]
    assert record["n"] == 4 and record["graph6"] == "Cl" and record["line"] == 1
    assert data["errors"] == []
    assert len(data["catalog_sha256"]) == 64


def test_params_reports_bad_lines_and_keeps_going(monkeypatch, schema):
    code, data, _ = run_json(["params"], schema, stdin_text="Cl\nnot-a-graph6!!\n@\n",
                             monkeypatch=monkeypatch)
    assert code == EXIT_ERROR
    assert [r["graph6"] for r in data["records"]] == ["Cl", "@"]
    error = data["errors"][0]
    assert error["line"] == 2 and error["offset"] == 3
    assert error["input"] == "not-a-graph6!!"


def test_params_empty_input(monkeypatch):
    code, out, _ = run(["params"], stdin_text="", monkeypatch=monkeypatch)
    assert code == EXIT_OK and out == ""


def test_params_from_file_as_csv(tmp_path):
    path = tmp_path / "in.g6"
    path.write_text(">>graph6<<Cl\nD~{\n", encoding="ascii")
    code, out, _ = run(["params", "--input", str(path), "--format", "csv"])
    assert code == EXIT_OK
    frame = pd.read_csv(io.StringIO(out))
    assert list(frame.columns) == ["n", "graph6", "omega", "chi", "h", "psi", "alpha",
                                   "b", "B", "Gamma", "gamma"]
    assert frame["psi"].tolist() == [3, 5]


def test_params_text_output(monkeypatch):
    code, out, _ = run(["params"], stdin_text="Cl\n", monkeypatch=monkeypatch)
    assert code == EXIT_OK
    assert "GRAPH PARAMETERS" in out and "Cl" in out


def test_cache_is_persisted(tmp_path):
    graphs = tmp_path / "in.g6"
    graphs.write_text("Cl\n", encoding="ascii")
    cache = tmp_path / "profiles.txt"
    assert run(["params", "--input", str(graphs), "--cache", str(cache)])[0] == EXIT_OK
    assert cache.read_text(encoding="ascii").split()[1:] == ["2", "2", "3", "3", "2", "2", "2", "2", "3"]
    assert run(["params", "--input", str(graphs), "--cache", str(cache)])[0] == EXIT_OK


def test_corrupt_cache_is_an_error(tmp_path):
    cache = tmp_path / "profiles.txt"
    cache.write_text("Cl 1 2 3\n", encoding="ascii")
    code, _, err = run(["table", "--cache", str(cache)])
    assert code == EXIT_ERROR
    assert "line 1" in err


# =============================================================================
# ENUMERATE
# =============================================================================

def test_enumerate_four():
    code, out, err = run(["enumerate", "4"])
    assert code == EXIT_OK
    lines = out.splitlines()
    assert len(lines) == 11 and lines == sorted(lines)
    assert "11 isomorphism classes" in err


def test_enumerate_one():
    assert run(["enumerate", "1"])[1] == "@\n"


def test_enumerate_json(schema):
    code, data, _ = run_json(["enumerate", "3"], schema)
    assert code == EXIT_OK and len(data["records"]) == 4


def test_enumerate_out_of_range():
    assert run(["enumerate", "9"])[0] == EXIT_ERROR


# =============================================================================
# VERIFY
# =============================================================================

def test_verify_single_theorem(schema):
    code, data, err = run_json(["verify", "--theorem", "T6", "--max-order", "5"], schema)
    assert code == EXIT_OK
    report = data["records"][0]
    assert report["theorem"] == "T6" and report["verdict"] == "verified"
    assert report["universe"] == {"max_order": 5, "graph_count": 52}
    assert "runtime" not in report
    assert "T6: verified" in err


def test_verify_reports_counterexamples():
    code, out, _ = run(["verify", "--theorem", "FALSIFIABILITY", "--max-order", "4"])
    assert code == EXIT_COUNTEREXAMPLE
    assert "COUNTEREXAMPLES" in out
    assert "SUMMARY: 0/1 verified" in out


def test_verify_output_is_deterministic():
    argv = ["verify", "--theorem", "FALSIFIABILITY", "--max-order", "5", "--format", "json"]
    assert run(argv)[1] == run(argv)[1]


def test_verify_from_input_file(tmp_path):
    path = tmp_path / "holes.g6"
    path.write_text("Cl\nDhc\n", encoding="ascii")
    code, out, _ = run(["verify", "--theorem", "T1", "--max-order", "5",
                        "--input", str(path), "--format", "csv"])
    assert code == EXIT_OK
    assert pd.read_csv(io.StringIO(out))["graph_count"].tolist() == [2]


@pytest.mark.parametrize("argv", [
    ["verify", "--theorem", "T99"],
    ["verify", "--max-order", "9"],
    ["verify", "--max-order", "0"],
    ["verify", "--workers", "0"],
    ["verify", "--patterns", "/no/such/catalog.txt"],
    ["params", "--input", "/no/such/input.g6"],
])
def test_configuration_errors(argv):
    code, _, err = run(argv)
    assert code == EXIT_ERROR
    assert err.startswith("error:") or "error:" in err


@pytest.mark.parametrize("command, missing", [
    (["table"], "Unknown pattern family: golden"),
    (["check-d"], "Unknown pattern: D"),
])
def test_catalog_without_a_needed_name(tmp_path, command, missing):
    path = tmp_path / "small.txt"
    path.write_text("order=4 C4: 0-1, 1-2, 2-3, 3-0\nfamily=other: C4\n", encoding="utf-8")
    code, out, err = run(command + ["--patterns", str(path)])
    assert code == EXIT_ERROR
    assert out == ""
    assert f"configuration error: {missing}" in err
    assert "Traceback" not in err


def test_unknown_format_is_rejected_by_the_parser():
    with pytest.raises(SystemExit):
        run(["params", "--format", "yaml"])


# =============================================================================
# OBSTRUCTIONS, TABLE, RECOGNIZE
# =============================================================================

def test_obstructions_csv():
    code, out, err = run(["obstructions", "omega", "psi", "--max-order", "6", "--format", "csv"])
    assert code == EXIT_OK
    frame = pd.read_csv(io.StringIO(out))
    assert sorted(frame["name"]) == sorted(["C4", "P4", "P3+K2", "3K2"])
    assert frame["n"].tolist() == sorted(frame["n"])
    assert "4 minimal obstructions" in err


def test_obstructions_json(schema):
    code, data, _ = run_json(["obstructions", "b", "gamma", "--max-order", "5"], schema)
    assert code == EXIT_OK
    assert sorted(r["name"] for r in data["records"]) == ["C4", "P4"]


@pytest.mark.parametrize("params", [["omega", "omega"], ["omega", "theta"]])
def test_obstructions_bad_parameters(params):
    assert run(["obstructions", *params, "--max-order", "4"])[0] == EXIT_ERROR


def test_table(schema):
    code, data, _ = run_json(["table"], schema)
    assert code == EXIT_OK
    rows = {r["name"]: r for r in data["records"]}
    assert list(rows) == ["C4", "P4", "P3+K2", "3K2", "3P3", "D", "2D", "C5"]
    assert (rows["3P3"]["b"], rows["3P3"]["Gamma"]) == (3, 2)
    assert rows["2D"]["b"] == 4
    assert rows["D"]["omega"] == 3
    assert rows["C5"]["chi"] == 3
    assert (rows["P4"]["B"], rows["P4"]["alpha"], rows["P4"]["Gamma"]) == (2, 3, 3)
    assert (rows["3K2"]["psi"], rows["3K2"]["h"]) == (3, 2)


def test_recognize(monkeypatch, schema):
    code, data, _ = run_json(["recognize"], schema, stdin_text="Cl\nDhc\n@\n", monkeypatch=monkeypatch)
    assert code == EXIT_OK
    c4, c5, k1 = data["records"]
    assert not c4["chordal"] and c4["berge"] and not c4["trivially_perfect"]
    assert not c5["berge"] and c5["berge_witness"].startswith("odd hole")
    assert k1["chordal"] and k1["trivially_perfect"] and k1["berge"]


@pytest.mark.slow
def test_check_d(schema):
    code, data, _ = run_json(["check-d"], schema)
    assert code == EXIT_OK
    assert all(r["passed"] for r in data["records"])
