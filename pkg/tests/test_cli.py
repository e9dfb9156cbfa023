import json
import subprocess
import sys

import pytest

from pseudofield.cli import main

PAPER_WITNESS = '{"p":199,"target":10,"k":2,"n":2,"m":1,"entries":[[-1,-1],[-1,1]],"cost":3}'


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_reconstruct_q(capsys):
    code, doc = run_json(capsys, "reconstruct", "--kind", "q", "--p", "13", "--x", "7")
    assert code == 0 and doc["result"]["value"] == 2 and doc["result"]["witness"]["text"] == "+1/2"
    assert doc["config"]["command"] == "reconstruct" and "version" in doc
    code, doc = run_json(capsys, "reconstruct", "--kind", "q", "--p", "13", "--x", "0", "--check-oracle")
    assert doc["result"]["value"] == 1


def test_reconstruct_qbar(capsys):
    code, doc = run_json(capsys, "reconstruct", "--kind", "qbar", "--p", "199", "--x", "10", "--budget", "4")
    assert code == 0 and doc["result"]["value"] == 3 and doc["result"]["witness"]["cost"] == 3


def test_exit_codes(capsys):
    assert run(capsys, "reconstruct", "--kind", "qbar", "--p", "199", "--x", "10", "--budget", "9")[0] == 3
    assert run(capsys, "reconstruct", "--p", "12", "--x", "1")[0] == 2
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys, "reconstruct", "--kind", "qbar", "--p", "199", "--x", "10", "--deadline", "-1")[0] == 3
    code, doc = run_json(capsys, "probe", "--p", "199", "--d", "3", "--budget", "4", "--enum-ceiling", "10")
    assert code == 3 and doc["error"]["type"] == "EnumerationTooLarge"


def test_deadline_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("PSEUDOFIELD_DEADLINE_SECS", "-1")
    assert run(capsys, "reconstruct", "--kind", "qbar", "--p", "199", "--x", "10")[0] == 3


def test_witness_commands(capsys):
    code, doc = run_json(capsys, "witness", "verify", PAPER_WITNESS)
    assert code == 0 and doc["result"]["valid"]
    code, doc = run_json(capsys, "witness", "combine", "--op", "inverse", PAPER_WITNESS)
    assert doc["result"]["valid"] and doc["result"]["witness"]["target"] == 20
    assert doc["result"]["cost"] <= doc["result"]["cost_bound"]


def test_witness_from_file(capsys, tmp_path):
    path = tmp_path / "w.json"
    path.write_text(PAPER_WITNESS)
    code, doc = run_json(capsys, "witness", "combine", "--op", "neg", str(path))
    assert doc["result"]["witness"]["target"] == 189


def test_probe_outputs(capsys, tmp_path):
    code, doc = run_json(capsys, "probe", "--p", "3", "--d", "2", "--budget", "2")
    assert code == 0 and doc["result"]["max_satisfying"] == 1
    code, doc = run_json(capsys, "probe", "--p", "7", "--d", "3", "--budget", "2")
    assert len(doc["result"]["rows"]) == 3
    code, out = run(capsys, "probe", "--p", "7", "--d", "2", "--budget", "0", "--format", "csv")
    lines = out.splitlines()
    assert lines[0].startswith("# ") and lines[2] == "7,2,0,0,1,0,"
    target = tmp_path / "r.json"
    assert main(["probe", "--p", "3", "--d", "2", "--budget", "2", "--out", str(target)]) == 0
    assert json.loads(target.read_text())["result"]["max_satisfying"] == 1


def test_probe_is_deterministic(capsys):
    first = run(capsys, "probe", "--p", "31", "--d", "3", "--budget", "3")[1]
    second = run(capsys, "probe", "--p", "31", "--d", "3", "--budget", "3")[1]
    assert first == second


@pytest.mark.parametrize("argv", [["--poly", "0,1", "--lo", "1", "--hi", "2"], ["--lo", "3", "--hi", "4"],
                                  ["--poly", "1,0,1", "--lo", "1", "--hi", "2"]])
def test_unitfind(capsys, argv):
    code, doc = run_json(capsys, "unitfind", *argv)
    r = doc["result"]
    assert code == 0 and r["minpoly"][-1] == 1
    assert abs(r["verification"]["resultant"]) == 1 and r["verification"]["sturm_count"] == 1
    assert "/" in r["interval"]["lo"]


def test_toolkit(capsys):
    assert run_json(capsys, "toolkit", "resultant", "--f=-2,1", "--g=-5,1")[1]["result"]["resultant"] == -3
    factors = run_json(capsys, "toolkit", "factor", "--f", "0,0,1,0,-1")[1]["result"]["factors"]
    assert {f["poly"] for f in factors} == {"-1,1", "0,1", "1,1"}
    assert run_json(capsys, "toolkit", "monic-multiple", "--f", "0,3,2", "--ell", "2", "--exponent", "2")[1]["result"]["v"] == [0, 1]
    doc = run_json(capsys, "toolkit", "express", "--f", "deg=1;0,1", "--g", "deg=1;1,0", "--h", "deg=2;0,1,3")[1]
    assert doc["result"] == {"a": "deg=1;0,3", "b": "deg=1;0,1"}
    assert run_json(capsys, "toolkit", "partner", "--f", "1,0,1")[1]["result"]["resultant"] in (1, -1)
    assert run_json(capsys, "toolkit", "roots", "--f=-2,0,1")[1]["result"]["intervals"]


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "pseudofield", "reconstruct", "--p", "13", "--x", "7"],
                         capture_output=True, text=True, check=True).stdout
    assert json.loads(out)["result"]["value"] == 2
