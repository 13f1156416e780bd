import csv
import io
import json
import math
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from orthoentropy.cli import COLUMNS, RunConfig, main, parse_grid, parse_int_list
from orthoentropy.entropy import entropy_table
from orthoentropy.families import FamilySpec
from orthoentropy.spectrum import decompose

SCHEMA = json.loads(resources.files("orthoentropy").joinpath("schemas/output.schema.json").read_text())


def run_cli(*argv):
    buf = io.StringIO()
    status = main(list(argv), stream=buf)
    return status, buf.getvalue()


def run_json(*argv):
    status, text = run_cli(*argv, "--format", "json")
    payload = json.loads(text)
    jsonschema.validate(payload, SCHEMA)
    return status, payload


def test_schema_is_valid():
    jsonschema.Draft202012Validator.check_schema(SCHEMA)


def test_parse_helpers():
    assert parse_int_list("150,151,152") == [150, 151, 152]
    assert parse_int_list("1-4,9") == [1, 2, 3, 4, 9]
    assert parse_grid("0:0.5:0.01") == (0.0, 0.5, 0.01)
    with pytest.raises(ValueError):
        RunConfig(command="entropy", n_list=[])
    with pytest.raises(ValueError):
        RunConfig(command="compare", n_list=[3], threshold=0)


def test_compare_acceptance_run():
    status, payload = run_json("compare", "--family", "chebyshev1", "--n", "150", "--threshold", "1e-9")
    assert status == 0 and payload["pass"] is True
    (report,) = payload["reports"]
    assert report["max_abs_diff"] <= 1e-9 and report["n"] == 150


def test_compare_failure_exit_code():
    status, payload = run_json("compare", "--family", "chebyshev2", "--n", "8", "--threshold", "1e-300")
    assert status == 3 and payload["pass"] is False


def test_closed_form_rows():
    status, text = run_cli("closed-form", "--kind", "1", "--n", "151")
    assert status == 0
    rows = list(csv.DictReader(io.StringIO(text)))
    assert len(rows) == 151
    row = rows[75]
    assert row["j"] == "76" and row["d"] == "151" and row["is_min"] == "1"
    assert float(row["value"]) == pytest.approx(math.log(151) - math.log(2) + math.log(2) / 151, abs=1e-12)
    status, payload = run_json("closed-form", "--kind", "2", "--n", "5,7")
    assert [s["n"] for s in payload["extremal"]] == [5, 7]
    assert payload["extremal"][0]["argmin_set"] == [3]


def test_special_grid():
    status, text = run_cli("special", "--grid", "0:0.5:0.01")
    assert status == 0
    rows = list(csv.DictReader(io.StringIO(text)))
    assert len(rows) == 51
    assert float(rows[0]["x"]) == 0.0 and float(rows[0]["digamma_form"]) == 0.0
    assert float(rows[-1]["digamma_form"]) == pytest.approx(1 - math.log(4), abs=1e-12)
    assert all(abs(float(r["difference"])) <= 1e-12 for r in rows)
    run_json("special", "--grid", "0:0.4:0.1")


def test_entropy_csv_round_trip():
    status, text = run_cli("entropy", "--family", "jacobi", "--alpha", "1.2", "--beta", "3.4", "--n", "5,6")
    assert status == 0
    rows = list(csv.DictReader(io.StringIO(text)))
    assert list(rows[0]) == COLUMNS["entropy"]
    expected = []
    spec = FamilySpec.jacobi(1.2, 3.4)
    for n in (5, 6):
        expected.extend(entropy_table(decompose(spec, n)).rows())
    assert len(rows) == len(expected)
    for got, want in zip(rows, expected):
        assert int(got["n"]) == want["n"] and int(got["j"]) == want["j"]
        for key in ("lambda", "christoffel", "S_nj"):
            assert float(got[key]) == want[key]


def test_entropy_json_with_dual():
    status, payload = run_json("entropy", "--family", "meixner", "--beta", "3.4", "--c", "0.2",
                               "--n", "4", "--include-dual")
    assert status == 0 and payload["parameters"] == {"beta": 3.4, "c": 0.2}
    assert all("S_n_dual" in row for row in payload["rows"])


def test_dual_and_phi_table():
    status, payload = run_json("dual", "--family", "chebyshev1", "--n", "6")
    assert status == 0 and payload["rows"][0]["S_n_i"] == pytest.approx(math.log(6), abs=1e-12)
    status, payload = run_json("phi-table", "--n", "6", "--j", "2,3")
    assert status == 0
    assert payload["tables"][0]["values"] == [0, 2, 4, 6, 4, 2, 0]
    assert all(r["passed"] for r in payload["reports"])
    status, text = run_cli("phi-table", "--n", "3")
    assert text.splitlines()[0] == "n,j,k,phi" and len(text.splitlines()) == 1 + 3 * 4


def test_output_file(tmp_path):
    target = tmp_path / "out.json"
    status, text = run_cli("closed-form", "--n", "4", "--format", "json", "--output", str(target))
    assert status == 0 and text == ""
    jsonschema.validate(json.loads(target.read_text()), SCHEMA)


@pytest.mark.parametrize(
    "argv",
    [
        ["entropy", "--family", "jacobi", "--n", "5"],
        ["entropy", "--family", "meixner", "--beta", "1", "--c", "1.5", "--n", "5"],
        ["compare", "--family", "jacobi", "--alpha", "1", "--beta", "1", "--n", "5"],
    ],
)
def test_domain_errors_exit_1(argv):
    assert run_cli(*argv)[0] == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["entropy", "--n", "0"],
        ["entropy"],
        ["bogus", "--n", "3"],
        ["special", "--grid", "1:0:0.1"],
        ["closed-form", "--kind", "3", "--n", "3"],
        ["entropy", "--n", "3", "--format", "xml"],
    ],
)
def test_usage_errors_exit_2(argv):
    assert run_cli(*argv)[0] == 2


def test_thread_env_keeps_order(monkeypatch):
    argv = ["entropy", "--family", "pollaczek", "--theta", "1.2", "--a", "3.4", "--n", "9,3,20,3,11"]
    serial = run_cli(*argv)[1]
    monkeypatch.setenv("ORTHO_ENTROPY_THREADS", "4")
    parallel = run_cli(*argv)[1]
    assert parallel == serial
    ns = [int(r["n"]) for r in csv.DictReader(io.StringIO(parallel))]
    assert ns == sorted(ns) and set(ns) == {3, 9, 11, 20}


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "orthoentropy", "closed-form", "--kind", "2", "--n", "3"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "kind,n,j,d,value,is_max,is_min"
