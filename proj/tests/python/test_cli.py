import json
import os
import subprocess

import pytest

KCUT = os.environ.get("KCUT_BIN")
pytestmark = pytest.mark.skipif(not KCUT, reason="KCUT_BIN not set")


def run(*args, stdin=None):
    return subprocess.run([KCUT, *args], capture_output=True, text=True, input=stdin)


def test_solve_json():
    r = run("solve", "--instance", "bridged-cliques:4,4,1", "--k", "4", "--mode", "psp-kt", "--emit", "json")
    assert r.returncode == 0, r.stderr
    out = json.loads(r.stdout)
    assert out["value"] == 6
    assert out["audit"]["branch"] == "psp-kt"


def test_gen_then_solve(tmp_path):
    path = tmp_path / "g.dimacs"
    assert run("gen", "cycle-of-cliques:3,5,2", "-o", str(path)).returncode == 0
    r = run("solve", "--input", str(path), "--k", "3", "--emit", "json")
    assert r.returncode == 0, r.stderr
    assert json.loads(r.stdout)["value"] == 6


def test_exit_codes(tmp_path):
    bad = tmp_path / "bad.dimacs"
    bad.write_text("p edge 2 1\ne 1 1\n")
    assert run("solve", "--input", str(bad), "--k", "2").returncode == 2
    assert run("solve", "--instance", "bridged-cliques:4,4,1", "--k", "9").returncode == 1
    assert run("solve", "--instance", "cycle-of-cliques:4,5,1", "--k", "3", "--mode", "oracle").returncode == 3


def test_bench_and_verify(tmp_path):
    suite = tmp_path / "suite.json"
    suite.write_text(json.dumps({"records": [{"instance": "bridged-cliques:4,4,1", "k": [2, 3]}]}))
    csv = tmp_path / "out.csv"
    r = run("bench", "--suite", str(suite), "--csv", str(csv))
    assert r.returncode == 0, r.stderr
    lines = csv.read_text().splitlines()
    assert lines[0].startswith("# kcut-bench-v1")
    assert len(lines) == 4

    sol = tmp_path / "sol.json"
    r = run("solve", "--instance", "bridged-cliques:4,4,1", "--k", "3", "--emit", "json")
    sol.write_text(r.stdout)
    g = tmp_path / "ex1.dimacs"
    run("gen", "bridged-cliques:4,4,1", "-o", str(g))
    assert run("verify", "--input", str(g), "--solution", str(sol), "--k", "3").returncode == 0
    assert run("verify", "--input", str(g), "--solution", str(sol), "--k", "4").returncode == 1
