import csv
import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from ncpart.cli import run
from ncpart.partitions import parse_partition

DATA = Path(__file__).parent / "data"


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_count_ncpp_six():
    assert call("count", "--sequence", "ncpp", "--n", "6") == (0, "28\n", "")


def test_map_worked_example():
    code, out, _ = call("map", "nc-to-dyck", "--partition", "1/4/3,5/7,8/2,6,9/11/10,12")
    assert (code, out) == (0, "UDUUUDUDDUUUDDUDDDUUDUDD\n")
    code, out, _ = call("map", "dyck-to-nc", "--path", "UDUUUDUDDUUUDDUDDDUUDUDD")
    # canonical output orders blocks by their least element
    assert parse_partition(out) == parse_partition("1/4/3,5/7,8/2,6,9/11/10,12")


def test_map_kreweras_singletons():
    assert call("map", "kreweras", "--partition", "1/2/3")[:2] == (0, "1,2,3\n")


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["map", "complement", "--partition", "1,3,4/2/5,6"], "1,2/3,4,6/5"),
        (["map", "rotate", "--partition", "1,3,4/2/5,6", "--k", "1"], "1,6/2,4,5/3"),
        (["map", "transpose", "--partition", "1,2/3/4"], "1,2,3/4"),
        (["map", "sc-to-balanced", "--partition", "1,4/2,3"], "DUDU"),
        (["map", "balanced-to-sc", "--path", "DUDU"], "1,4/2,3"),
        (["map", "nc-to-tree", "--partition", "1,2"], "W(Y(W))"),
        (["map", "tree-to-nc", "--tree", "W(Y,Y,Y)"], "1/2/3"),
    ],
)
def test_map_kinds(argv, expected):
    assert call(*argv)[:2] == (0, expected + "\n")


def test_tree_code_chirality_flag():
    a = call("map", "tree-code", "--tree", "W(Y(W,W),Y)")[1]
    b = call("map", "tree-code", "--tree", "W(Y(W,W),Y)", "--chirality", "rotation-and-reflection")[1]
    assert a and b


@pytest.mark.parametrize(
    "argv",
    [
        ["count", "--sequence", "nope", "--n", "3"],
        ["count", "--sequence", "ncpp"],
        ["frobnicate"],
        ["map", "kreweras", "--partition", "1,3/2,4"],
        ["map", "kreweras", "--partition", "1,,2"],
        ["map", "kreweras"],
        ["map", "dyck-to-nc", "--path", "UXD"],
        ["map", "tree-to-nc", "--tree", "W(W)"],
        ["count", "--sequence", "ncpp", "--n", "13", "--brute-force"],
        ["count", "--sequence", "ncpp", "--n", "0"],
        ["verify", "identities", "--n", "11"],
        ["verify", "identities"],
        ["conjecture", "--n", "11"],
    ],
)
def test_usage_and_input_errors_exit_2(argv):
    code, out, err = call(*argv)
    assert code == 2
    assert out == ""
    assert err.strip()


def test_error_diagnostic_is_one_line():
    _, _, err = call("map", "kreweras", "--partition", "1,3/2,4")
    assert err.startswith("ncpart: error:") and err.count("\n") == 1


def test_verification_failure_exits_1(monkeypatch):
    from ncpart import census

    monkeypatch.setattr(census, "central_binomial", lambda n: -1)
    code, out, _ = call("verify", "theorem2", "--n", "4")
    assert code == 1
    assert out.startswith("FAIL")


def test_count_formats():
    assert call("count", "--sequence", "catalan", "--n-max", "4")[1] == "1 1\n2 2\n3 5\n4 14\n"
    assert call("count", "--sequence", "bell", "--n-max", "3", "--format", "csv")[1] == "n,bell\n1,1\n2,2\n3,5\n"
    assert json.loads(call("count", "--sequence", "fpt", "--n", "6", "--format", "json")[1]) == {"n": 6, "fpt": 14}


@pytest.mark.parametrize("seq", ["ncpp", "dihedral", "chiral", "sc", "trees", "catalan", "bell", "fpt"])
def test_count_brute_force_agrees(seq):
    a = call("count", "--sequence", seq, "--n-max", "7")[1]
    b = call("count", "--sequence", seq, "--n-max", "7", "--brute-force")[1]
    assert a == b


def test_large_values_are_plain_decimal():
    out = call("count", "--sequence", "ncpp", "--n", "40")[1].strip()
    assert out.isdigit() and len(out) > 15


def test_enumerate_variants():
    assert call("enumerate", "--n", "3")[1].split() == ["1,2,3", "1,2/3", "1,3/2", "1/2,3", "1/2/3"]
    assert len(call("enumerate", "--n", "4", "--nc-only")[1].split()) == 14
    assert len(call("enumerate", "--n", "6", "--nc-only", "--classes", "rotation")[1].split()) == 28
    assert len(call("enumerate", "--n", "6", "--nc-only", "--classes", "dihedral")[1].split()) == 24
    assert len(call("enumerate", "--n", "6", "--nc-only", "--self-complementary")[1].split()) == 20
    assert len(call("enumerate", "--n", "6", "--nc-only", "--classes", "rotation", "--self-complementary")[1].split()) == 20
    lines = call("enumerate", "--n", "3", "--format", "json")[1].splitlines()
    assert [json.loads(x) for x in lines][0] == "1,2,3"
    assert call("enumerate", "--n", "2", "--format", "csv")[1] == "partition\n1,2\n1/2\n"


def test_orbit_command():
    code, out, _ = call("orbit", "--partition", "1,2/3,4", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["orbit_size"] == 2 and data["achiral"] is True
    assert "orbit_size: 2" in call("orbit", "--partition", "1,2/3,4")[1]


def test_table_csv_golden():
    code, out, _ = call("table", "--n-max", "22", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    projected = "".join(f"{r['n']},{r['ncpp']},{r['dihedral']},{r['chiral_pairs']}\n" for r in rows)
    golden = (DATA / "published_table.csv").read_text()
    assert "n,ncpp,dihedral,chiral_pairs\n" + projected == golden


def test_table_json_and_text():
    data = json.loads(call("table", "--n-max", "6", "--format", "json")[1])
    assert data[5]["ncpp"] == 28
    assert call("table", "--n-max", "6", "--brute-upto", "6")[0] == 0


def test_conjecture_command():
    code, out, _ = call("conjecture", "--n", "5")
    assert code == 0 and "equal=true" in out
    data = json.loads(call("conjecture", "--n", "4", "--format", "json")[1])
    assert data["equal"] and data["sc_partitions"] == data["sc_rotation_classes"]


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "identities", "--n", "8"],
        ["verify", "theorem1", "--n", "8"],
        ["verify", "theorem1", "--n", "7"],
        ["verify", "theorem2", "--n", "10"],
        ["verify", "trees", "--n", "7"],
        ["verify", "clickable", "--n", "12"],
        ["verify", "lemma1", "--n", "8"],
        ["verify", "table", "--n-max", "22"],
    ],
)
def test_verify_suites_pass(argv):
    code, out, _ = call(*argv)
    assert code == 0, out
    assert "FAIL" not in out
    assert out.splitlines()[-1].endswith("checks passed")


def test_verify_achiral_suite_reports_binomial():
    out = call("verify", "theorem2", "--n", "10")[1]
    assert "PASS achiral rotation classes of [10] = binom(10,5) (252 vs 252)" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["table", "--n-max", "22", "--format", "json"],
        ["enumerate", "--n", "5", "--nc-only", "--classes", "dihedral"],
        ["verify", "clickable", "--n", "6"],
    ],
)
def test_output_is_deterministic(argv):
    assert call(*argv) == call(*argv)


def test_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "ncpart", "count", "--sequence", "ncpp", "--n", "6"],
        capture_output=True, text=True,
    )
    assert (proc.returncode, proc.stdout) == (0, "28\n")
    proc = subprocess.run([sys.executable, "-m", "ncpart", "count", "--bogus"], capture_output=True, text=True)
    assert proc.returncode == 2 and proc.stderr
