import json
import subprocess
import sys


def run(*args):
    return subprocess.run([sys.executable, "-m", "plat_tracks.cli", *args],
                          capture_output=True, text=True)


def test_gen_validate_roundtrip(tmp_path):
    spec = tmp_path / "s.json"
    r = run("gen", "--m", "3", "--n2", "4", "--seed", "0", "-o", str(spec))
    assert r.returncode == 0
    r = run("validate", str(spec))
    assert r.returncode == 0 and "ok" in r.stdout


def test_validate_failures(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"m":3,"n":6,"rows":[[3,0],[4,-4,0],[4,0],[-4,-4,0],[4,4]]}')
    r = run("validate", str(bad))
    assert r.returncode == 1
    assert "magnitude below 4" in r.stdout
    garbled = tmp_path / "g.json"
    garbled.write_text("{nope")
    assert run("validate", str(garbled)).returncode == 2
    assert run("validate", str(tmp_path / "missing.json")).returncode == 2


def test_tracks_deterministic(tmp_path):
    spec = tmp_path / "s.json"
    run("gen", "--m", "3", "--n2", "4", "--seed", "1", "-o", str(spec))
    s1, s2 = tmp_path / "a.svg", tmp_path / "b.svg"
    r1 = run("tracks", str(spec), "--level", "1", "--svg", str(s1),
             "--dot", str(tmp_path / "a.dot"))
    r2 = run("tracks", str(spec), "--level", "1", "--svg", str(s2))
    assert r1.returncode == 0 and r2.returncode == 0
    assert s1.read_bytes() == s2.read_bytes()
    assert (tmp_path / "a.dot").read_text().startswith("graph")
    assert run("tracks", str(spec), "--level", "99").returncode == 1


def test_trace(tmp_path):
    spec = tmp_path / "s.json"
    run("gen", "--m", "3", "--n2", "4", "--seed", "0", "-o", str(spec))
    r = run("trace", str(spec), "--curve", "round:1-2", "--to-level", "1")
    assert r.returncode == 0
    assert "rightmost cap arc crossings at level 1: 0" in r.stdout
    assert "coverage certificate" in r.stdout
    assert run("trace", str(spec), "--curve", "nonsense").returncode == 1


def test_weakpairs_report(tmp_path):
    spec = tmp_path / "s.json"
    run("gen", "--m", "3", "--n2", "4", "--seed", "0", "-o", str(spec))
    rep1 = tmp_path / "r1.json"
    rep2 = tmp_path / "r2.json"
    r1 = run("weakpairs", str(spec), "--depth", "0", "--report", str(rep1))
    r2 = run("weakpairs", str(spec), "--depth", "0", "--report", str(rep2))
    assert r1.returncode == 0, r1.stdout + r1.stderr
    assert "keen at depth 0" in r1.stdout
    assert rep1.read_bytes() == rep2.read_bytes()
    data = json.loads(rep1.read_text())
    assert data["keen_at_depth"] is True
    assert all(v.isdigit() for row in data["matrix"] for v in row)
