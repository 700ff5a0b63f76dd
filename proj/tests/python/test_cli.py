import json
import os
import subprocess

import pytest

CLI = os.environ.get("TWISTLINK_CLI")
pytestmark = pytest.mark.skipif(not CLI, reason="TWISTLINK_CLI not set")


def run(*args):
    return subprocess.run([CLI, *map(str, args)], capture_output=True, text=True)


def test_invariants_json(corpus):
    r = run("invariants", corpus / "onefoil.tld", "--json")
    assert r.returncode == 0
    report = json.loads(r.stdout)
    assert report["schema"] == "twistlink/1"
    assert sorted(map(tuple, report["twisted_jones"])) == [(-6, 0, 1), (-2, 0, 1), (-2, 2, -1)]
    assert report["euler_genus"] == [2]


def test_validate_dangling_edge(tmp_path):
    f = tmp_path / "bad.tld"
    f.write_text("X c -a +b +a -c\n")
    r = run("validate", f)
    assert r.returncode == 1
    assert "edge multiplicity" in r.stderr


def test_usage_errors(corpus):
    assert run().returncode == 2
    assert run("group", corpus / "onefoil.tld", "--level", "sideways").returncode == 2
    assert run("walk", corpus / "onefoil.tld").returncode == 2
    assert run("invariants", corpus / "missing.tld").returncode == 1


def test_group_torus(corpus):
    r = run("group", corpus / "torus1212.tld", "--homs", "3,4", "--json")
    assert r.returncode == 0
    levels = {g["level"]: g for g in json.loads(r.stdout)["levels"]}
    assert levels["twisted"]["homs"] == {"S3": 36, "S4": 576}
    assert levels["upper"]["abelianization"] == [0]
    assert levels["lower"]["abelianization"] == [0]


def test_moves_round_trip(corpus, tmp_path):
    sites = run("moves-list", corpus / "trefoil-barred.tld", "--tags", "T3").stdout.split("\n")
    assert "T3 expand c1 : 0" in sites
    out = tmp_path / "t3.tld"
    assert run("moves-apply", corpus / "trefoil-barred.tld", "--site", "T3 expand c1 : 0", "--out", out).returncode == 0
    assert run("validate", out).returncode == 0


def test_walk_and_equiv_deterministic(corpus, tmp_path):
    a = run("walk", corpus / "onefoil.tld", "--seed", 9, "--steps", 5)
    b = run("walk", corpus / "onefoil.tld", "--seed", 9, "--steps", 5)
    assert a.returncode == 0 and a.stdout == b.stdout

    r = run("equiv", corpus / "unknot.tld", corpus / "fig4-rightmost.tld", "--depth", 3)
    moves = r.stdout.strip().split("\n")
    assert [m.split()[0] for m in moves] == ["T2", "V1", "R2"]
    replay = tmp_path / "moves.txt"
    replay.write_text(r.stdout)
    out = run("moves-apply", corpus / "unknot.tld", "--replay", replay)
    assert out.returncode == 0


def test_realize(corpus):
    r = run("realize", corpus / "torus1212.tld")
    assert r.returncode == 0
    assert r.stdout.count("\nV ") + r.stdout.startswith("V ") >= 1
