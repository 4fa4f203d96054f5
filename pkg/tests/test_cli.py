import json
import subprocess
import sys
from pathlib import Path

import pytest

from hypercatalan.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def golden(name):
    return (GOLDEN / name).read_text()


def test_hc(capsys):
    assert run(capsys, "hc", "1,1") == (0, "5\n", "")
    for via in ("closed", "recurrence", "enumeration"):
        assert run(capsys, "hc", "[1,0,2]", "--via", via)[1] == "45\n"


def test_hc_json(capsys):
    code, out, _ = run(capsys, "hc", "0,0,2", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"type": [0, 0, 2], "value": "4", "via": "closed"}


def test_fuss(capsys):
    assert run(capsys, "fuss", "1,0,2", "-r", "3")[1] == "198\n"


@pytest.mark.parametrize("via", ["division", "recurrence"])
def test_geode_value(capsys, via):
    assert run(capsys, "geode", "value", "1,1,1", "--via", via) == (0, "319\n", "")


def test_geode_value_closed(capsys):
    assert run(capsys, "geode", "value", "3,0,3", "--via", "closed")[1] == "145687\n"
    code, _, err = run(capsys, "geode", "value", "1,1,1", "--via", "closed")
    assert code == 2 and "closed form" in err


def test_expand_golden(capsys):
    code, out, _ = run(capsys, "geode", "expand", "1,1,1", "--x", "2")
    assert code == 0
    assert out == golden("expand_111_x2.txt")


@pytest.mark.parametrize("x,terms", [
    ("3", {(1, 2, 1): 1, (0, 3, 1): -1, (1, 3): -1, (0, 4): 2}),
    ("4", {(1, 1, 2): 1, (0, 1, 3): -1, (1, 0, 3): -1, (0, 0, 4): 2}),
])
def test_expand_json(capsys, x, terms):
    code, out, _ = run(capsys, "geode", "expand", "1,1,1", "--x", x, "--format", "json")
    payload = json.loads(out)
    assert code == 0 and payload["value"] == "319"
    assert {tuple(t["type"]): int(t["coeff"]) for t in payload["terms"]} == terms


def test_expand_budget_exit(capsys):
    code, out, err = run(capsys, "geode", "expand", "2,2,2", "--x", "2", "--budget", "3")
    assert code == 1 and out == "" and "budget" in err


def test_expand_high_index(capsys):
    # no gon cap on the command line, so a large constant index is allowed
    code, out, _ = run(capsys, "geode", "expand", "1,1", "--x", "9")
    assert code == 0 and out.endswith("= 16\n")
    assert run(capsys, "geode", "expand", "1,1", "--x", "1")[0] == 2


def test_series_golden(capsys):
    code, out, _ = run(capsys, "series", "build", "--faces", "2", "--gons", "3")
    assert code == 0
    assert json.loads(out) == json.loads(golden("series_s_2_3.json"))


def test_series_layers(capsys):
    code, out, _ = run(capsys, "series", "build", "--faces", "3", "--gons", "3", "--which", "G", "--layer", "face")
    layers = json.loads(out)
    assert sorted(layers, key=int) == ["0", "1", "2"]
    assert [r["coeff"] for r in layers["1"]] == ["2", "3"]
    assert run(capsys, "series", "build", "--faces", "0", "--gons", "3", "--which", "H")[0] == 2


@pytest.mark.parametrize("name,file", [("1,0,n", "seq_1_0_n.bfile"), ("little-schroeder", "seq_little_schroeder.bfile")])
def test_seq_golden(capsys, name, file):
    code, out, _ = run(capsys, "seq", name, "--count", "8")
    assert code == 0 and out == golden(file)


def test_seq_routes_and_json(capsys):
    outs = {via: run(capsys, "seq", "n,2", "--count", "5", "--via", via)[1] for via in ("division", "recurrence", "closed")}
    assert len(set(outs.values())) == 1
    code, out, _ = run(capsys, "seq", "riordan", "--count", "10", "--format", "json")
    assert json.loads(out)[-2:] == ["371", "982"]
    assert run(capsys, "seq", "n,1", "--start", "2", "--count", "2")[1] == "2 70\n3 288\n"
    assert run(capsys, "seq", "pell")[0] == 2


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "lesser-sum", "--faces", "5", "--gons", "5")
    assert code == 0 and out.startswith("PASS lesser-sum")
    code, out, _ = run(capsys, "verify", "all", "--faces", "3", "--gons", "3", "--n-max", "6", "--t-max", "2", "--format", "json")
    reports = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and all(r["failures"] == [] for r in reports)


def test_solve(capsys):
    code, out, _ = run(capsys, "solve", "--coeffs", "0.1", "--levels", "30", "--format", "json")
    payload = json.loads(out)
    assert code == 0 and abs(float(payload["value"]) - 1.1270166537925831) < 1e-9
    assert not payload["diverging"]
    code, out, _ = run(capsys, "solve", "--coeffs", "0.3", "--levels", "25")
    assert "divergence suspected" in out
    assert run(capsys, "solve", "--coeffs", "x")[0] == 2


@pytest.mark.parametrize("argv", [[], ["bogus"], ["hc", "1,-1"], ["hc", "1.5"], ["hc", "1,1", "--via", "magic"], ["geode"]])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_deterministic_and_entry_point():
    cmd = [sys.executable, "-m", "hypercatalan", "geode", "expand", "1,1,1", "--x", "max", "--format", "json"]
    first = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    assert first == second and json.loads(first)["value"] == "319"
