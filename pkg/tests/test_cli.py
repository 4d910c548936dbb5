import io
import json
import subprocess
import sys

import pytest

from bgs_forge import cli
from bgs_forge.errors import InvariantViolation

DIMACS = "c two clauses\np cnf 3 2\n1 -2 0\n2 3 0\n"

COMMANDS = [
    ["decode-machine", "414"],
    ["decode-bgs", "12345"],
    ["run-clocked", "0", "0110"],
    ["decode", "11100"],
    ["decode", "--rank", "61"],
    ["instances", "--upto", "64"],
    ["witness-check", "--index", "0", "--a", "1", "--b", "1", "--upto", "8"],
    ["witness-check", "--index", "0", "--a", "1", "--b", "1", "--upto", "64", "--family", "native"],
    ["folklore-chain", "--upto", "4"],
    ["dominates", "--left", "lookup:1", "--right", "decline", "--upto", "8"],
    ["search", "", "--rounds", "3"],
    ["search", "11110", "--rounds", "5", "--guard", "on", "--trace"],
    ["counterexample", "--k", "0", "--rank-budget", "64"],
    ["fprime", "--k", "3", "--rank-budget", "64"],
    ["empirical-r", "--upto", "64", "--index-budget", "3", "--family", "native", "--chain", "0,64"],
    ["growth", "--ks", "0,1,2", "--rank-budget", "64"],
    ["beaver", "--n", "2", "--cutoff", "100"],
    ["compare-growth", "--ns", "1,2", "--cutoff", "50", "--ks", "0"],
]


def _run(capsys, argv):
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv", COMMANDS, ids=lambda a: " ".join(a) or "empty")
def test_command_emits_one_stable_record(capsys, argv):
    code, out, err = _run(capsys, argv)
    assert code == 0, err
    lines = out.splitlines()
    assert len(lines) == 1
    rec = json.loads(lines[0])
    assert rec["schema_version"] == 1 and rec["command"] == argv[0]
    assert set(rec) == {"schema_version", "command", "parameters", "result", "wall_time_ms", "artifact_version"}
    assert err.strip()
    code2, out2, _ = _run(capsys, argv)
    rec2 = json.loads(out2)
    rec.pop("wall_time_ms"), rec2.pop("wall_time_ms")
    assert code2 == 0 and rec == rec2


def test_known_results(capsys):
    _, out, _ = _run(capsys, ["counterexample", "--k", "0", "--rank-budget", "64"])
    assert json.loads(out)["result"]["z"] == 61
    _, out, _ = _run(capsys, ["beaver", "--n", "2", "--cutoff", "1000"])
    res = json.loads(out)["result"]
    assert (res["sigma"], res["s_max"]) == (4, 6)
    _, out, _ = _run(capsys, ["search", "", "--rounds", "1"])
    assert json.loads(out)["result"]["kind"] == "found"


def test_dimacs_from_file_and_stdin(capsys, tmp_path, monkeypatch):
    path = tmp_path / "f.cnf"
    path.write_text(DIMACS)
    _, from_file, _ = _run(capsys, ["encode", str(path)])
    monkeypatch.setattr(sys, "stdin", io.StringIO(DIMACS))
    _, from_stdin, _ = _run(capsys, ["encode", "-"])
    assert json.loads(from_file)["result"] == json.loads(from_stdin)["result"]

    _, out, _ = _run(capsys, ["solve", str(path)])
    line = json.loads(out)["result"]["line"]
    _, out, _ = _run(capsys, ["verify", str(path), line])
    assert json.loads(out)["result"]["satisfied"] is True

    code, out, _ = _run(capsys, ["search", str(path), "--rounds", "4", "--family", "native"])
    assert code == 0 and json.loads(out)["result"]["kind"] == "found"


@pytest.mark.parametrize(
    "argv, code",
    [
        ([], 1),
        (["nope"], 1),
        (["run-clocked", "0", "012"], 1),
        (["beaver", "--n", "9", "--cutoff", "10"], 1),
        (["decode-machine", "-1"], 1),
        (["dominates", "--left", "wat:1", "--right", "decline", "--upto", "8"], 1),
        (["solve", "/nonexistent/file.cnf"], 1),
        (["beaver", "--n", "4", "--cutoff", "10"], 2),
        (["counterexample", "--k", "0", "--rank-budget", "64", "--var-cap", "0", "--family", "native"], 2),
    ],
)
def test_exit_codes(capsys, monkeypatch, argv, code):
    monkeypatch.delenv("BGS_FORGE_LONG_RUNS", raising=False)
    got, out, _ = _run(capsys, argv)
    assert got == code
    if code:
        assert out == ""


def test_refusal_exit_code(capsys):
    assert _run(capsys, ["empirical-r", "--upto", "20000", "--index-budget", "0",
                         "--family", "native", "--chain", "20000"])[0] == 2


def test_malformed_dimacs_exit_code(capsys, tmp_path):
    path = tmp_path / "bad.cnf"
    path.write_text("p cnf 1 1\n2 0\n")
    assert _run(capsys, ["solve", str(path)])[0] == 1


def test_invariant_exit_code(capsys, monkeypatch):
    import bgs_forge.counterexample as ce

    def broken(*a, **k):
        raise InvariantViolation("forced")

    monkeypatch.setattr(ce, "audit_minimality", broken)
    code, out, err = _run(capsys, ["counterexample", "--k", "0", "--rank-budget", "64"])
    assert code == 3 and out == "" and "forced" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "bgs_forge", "decode-bgs", "0"],
                          capture_output=True, text=True, check=True)
    rec = json.loads(proc.stdout)
    assert (rec["result"]["machine_index"], rec["result"]["poly_index"]) == (0, 0)
