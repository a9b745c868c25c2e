import json

import pytest

from knotsurgery.cli import main

from conftest import FACTORS_105_64


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cf(capsys):
    code, out, _ = run(capsys, "cf", "105", "64")
    assert code == 0 and out.strip() == "(1,1,-1,-1,-1,-1,1,1)"
    _, out, _ = run(capsys, "cf", "105", "76", "--json")
    assert json.loads(out)["b"] == [1, 1, 1, -1, -1, 1, 1, 1]


def test_alexander_and_fibered(capsys):
    _, out, _ = run(capsys, "alexander", "105", "64")
    assert out.strip() == "t^4 - 5*t^3 + 13*t^2 - 21*t + 25 - 21*t^-1 + 13*t^-2 - 5*t^-3 + t^-4"
    _, out, _ = run(capsys, "fibered", "15", "4")
    assert out.strip() == "false"
    _, out, _ = run(capsys, "alexander", "3", "1", "--json")
    doc = json.loads(out)
    assert doc["fibered"] and doc["determinant"] == 3 and doc["genus"] == 1


def test_dihedral_and_hosokawa(capsys):
    _, out, _ = run(capsys, "dihedral-linking", "5", "2", "--json")
    assert json.loads(out)["sigma"] == 0
    _, out, _ = run(capsys, "hosokawa", "105", "64", "--factor")
    assert "13^2 * 61^2 * 127^2 * 463^2 * 631^4 * 1358281^4" in out
    _, out, _ = run(capsys, "hosokawa", "105", "64", "--json")
    assert json.loads(out)["factors"] == [list(f) for f in FACTORS_105_64]


def test_sw(capsys, tmp_path):
    _, out, _ = run(capsys, "sw", "fibered-surgery", "3", "1")
    assert out.strip() == "-tau^2 - 1 - tau^-2"
    text = tmp_path / "trefoil.txt"
    text.write_text("t - 1 + t^-1\n")
    _, out, _ = run(capsys, "sw", "knot-surgery", "--alexander", str(text))
    assert out.strip() == "t - 1 + t^-1"
    # JSON term list round-trips through the same command
    _, out, _ = run(capsys, "sw", "knot-surgery", "--alexander", str(text), "--json")
    blob = tmp_path / "trefoil.json"
    blob.write_text(json.dumps(json.loads(out)["sw_terms"]))
    _, out2, _ = run(capsys, "sw", "knot-surgery", "--alexander", str(blob), "--json")
    assert json.loads(out2)["sw"] == "t - 1 + t^-1"


def test_distinguish_exit_codes(capsys):
    code, out, _ = run(capsys, "distinguish", "105", "64", "76")
    assert code == 0 and "DISTINGUISHED" in out and "assumed:" in out
    assert run(capsys, "distinguish", "105", "64", "64")[0] == 3
    assert run(capsys, "distinguish", "15", "4", "2")[0] == 3
    code, out, _ = run(capsys, "distinguish", "105", "64", "76", "--json")
    assert json.loads(out)["verdict"] == "DISTINGUISHED"


@pytest.mark.parametrize("argv", [["cf", "4", "1"], ["hosokawa", "9", "3"], ["sw", "knot-surgery", "--alexander", "/nonexistent"]])
def test_errors_exit_one(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1 and err.startswith("error:")


def test_search(capsys):
    code, out, _ = run(capsys, "search", "--pmax", "105", "--pmin", "105")
    assert code == 0 and "105 64 76 DISTINGUISHED" in out.splitlines()
    _, out, _ = run(capsys, "search", "--pmax", "13", "--json")
    assert json.loads(out) == []
