import json
import subprocess
import sys
from pathlib import Path

import pytest

from sylowbranch.cli import run

GOLDEN = Path(__file__).parent / "golden"


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_lr_coefficient(capsys):
    code, out, _ = call(capsys, "lr", "--lambda", "[3,2,1]", "--mu", "[2,1]", "--nu", "[2,1]")
    assert code == 0 and out.strip() == "2"
    code, out, _ = call(capsys, "--json", "lr", "--lambda", "[2,1]", "--mu", "[1]", "--nu", "[1,1]")
    assert json.loads(out) == {"coefficient": 1}


def test_member_verdicts(capsys):
    code, out, _ = call(capsys, "omega", "member", "-p", "5", "--theta", "X(1;1;0)", "--lambda", "[98,27]")
    assert code == 0 and out.strip() == "Out"
    _, out, _ = call(capsys, "omega", "member", "--theta", "X(1;1;0)", "--lambda", "[98,20,7]")
    assert out.strip() == "Unknown"
    _, out, _ = call(capsys, "omega", "member", "--theta", "X(0;1)", "--lambda", "[24,1]", "--json")
    assert json.loads(out)["member"] == "In"


def test_describe_json(capsys):
    code, out, _ = call(capsys, "--json", "omega", "describe", "--theta", "X(1;0)")
    data = json.loads(out)
    assert code == 0
    assert data["shape"] == {"kind": "punctured_box", "n": 25, "t": 20, "exact": True}
    assert (data["m"], data["M"], data["value"]) == (19, 20, 1)
    _, out, _ = call(capsys, "--json", "omega", "describe", "--theta", "X(1;1;0)")
    assert json.loads(out)["shape"]["kind"] == "bounded"


def test_gap_text(capsys):
    _, out, _ = call(capsys, "omega", "gap", "--theta", "X(0;0;0)")
    assert out.strip() == "M-m=2 gamma1=0 c=2"


def test_star_and_mixed(capsys):
    _, out, _ = call(capsys, "star", "--a", "[2];[1,1]", "--b", "[1]")
    assert out.strip() == "{[3], [2,1], [1,1,1]}"
    _, out, _ = call(capsys, "--json", "star", "--a", "B:4:3", "--b", "[2]")
    assert json.loads(out)["set"] == [[5, 1], [4, 2], [4, 1, 1], [3, 3], [3, 2, 1], [3, 1, 1, 1], [2, 2, 2], [2, 2, 1, 1]]
    _, out, _ = call(capsys, "--json", "mixed", "-q", "2", "--set", "[2];[1,1]")
    # [2] * [1,1] only, since equal pairs are excluded
    assert json.loads(out)["set"] == [[3, 1], [2, 1, 1]]


def test_irr_list(capsys):
    code, out, _ = call(capsys, "--json", "irr", "list", "-p", "5", "-k", "1")
    rows = json.loads(out)
    assert code == 0 and [r["tree"] for r in rows] == ["0", "1", "2", "3", "4"]


@pytest.mark.parametrize(
    "argv",
    [
        ["lr", "--lambda", "[2,x]", "--mu", "[1]", "--nu", "[1]"],
        ["omega", "describe", "--theta", "X(1;"],
        ["omega", "describe", "-p", "3", "--theta", "X(1;0)"],
        ["omega", "member", "--theta", "X(0;1)", "--lambda", "[3,1]"],
        ["omega", "describe", "--theta", "(1|1|1|1|1;5)"],
        ["verify", "-n", "55"],
        ["star", "--a", "Q:3:1", "--b", "[1]"],
    ],
)
def test_bad_input_exits_2(capsys, argv):
    code, out, err = call(capsys, *argv)
    assert code == 2
    assert err.startswith("sylowbranch: error:")


def test_verify_single(capsys):
    code, out, _ = call(capsys, "verify", "-n", "25", "--theta", "X(1;1)")
    assert code == 0
    assert "0 mismatches" in out and "ok" in out
    code, out, _ = call(capsys, "--json", "verify", "-n", "10")
    data = json.loads(out)
    assert code == 0 and data["checked"] == 25 and data["mismatches"] == 0


@pytest.mark.parametrize("which", [5, 25, 125])
def test_tables_match_golden(capsys, which):
    code, out, _ = call(capsys, "tables", str(which))
    assert code == 0
    assert out == (GOLDEN / f"tables_{which}.txt").read_text()


def test_tables_json_rows(capsys):
    _, out, _ = call(capsys, "--json", "tables", "25")
    rows = json.loads(out)["rows"]
    assert sum(r["class"] for r in rows) == 649


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "sylowbranch", "lr", "--lambda", "[1]", "--mu", "[1]", "--nu", "[]"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "1"
