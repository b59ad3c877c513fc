import json
import subprocess
import sys
from pathlib import Path

import pytest

from reflexpoly.cli import main
from reflexpoly.gallery import cube, hexagon, wirth
from reflexpoly.polyio import dumps

ROOT = Path(__file__).resolve().parents[1]


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, p in (("hex", hexagon()), ("wirth", wirth()), ("cube2", cube(2))):
        path = tmp_path / f"{name}.poly"
        path.write_text(dumps(p))
        out[name] = str(path)
    bad = tmp_path / "bad.poly"
    bad.write_text("2 2\n1 0\n0 q\n")
    out["bad"] = str(bad)
    flat = tmp_path / "flat.poly"
    flat.write_text("2 2\n1 1\n2 2\n")
    out["flat"] = str(flat)
    return out


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_check_wirth(capsys, files):
    code, out = run(capsys, "check", files["wirth"])
    assert code == 0
    assert "reflexive=true" in out and "terminal=true" in out and "smooth=false" in out


def test_check_cube(capsys, files):
    code, out = run(capsys, "check", files["cube2"])
    assert code == 0 and "terminal=false" in out and "gorenstein_index=1" in out


def test_json_mirrors_text(capsys, files):
    _, text = run(capsys, "check", files["cube2"])
    _, js = run(capsys, "check", files["cube2"], "--format", "json")
    data = json.loads(js)
    keys = [line.split("=", 1)[0] for line in text.splitlines()]
    assert keys == list(data)


def test_exit_codes(capsys, files):
    assert main(["check", files["bad"]]) == 2
    assert main(["check", files["flat"]]) == 3
    assert main(["pair", files["hex"], "--v", "0,0", "--w", "1,0"]) == 4
    assert main(["gallery", "nosuch"]) == 5
    assert main(["project", files["hex"], "--v", "1,0,0"]) == 3


def test_pair(capsys, files):
    assert run(capsys, "pair", files["hex"], "--v", "1,0", "--w", "0,1")[1] == "Sum z=(1,1) a=1 b=1\n"
    assert run(capsys, "pair", files["hex"], "--v", "1,0", "--w", "-1,0")[1] == "Antipodal\n"


def test_project_dual_graph_normalform(capsys, files, tmp_path):
    code, out = run(capsys, "project", files["wirth"], "--v", "0,0,0,1")
    assert code == 0 and "\n3 6\n" in out
    code, out = run(capsys, "dual", files["hex"])
    assert out.splitlines()[0] == "2 6"
    code, out = run(capsys, "graph", files["hex"], "--vertices-only")
    assert out.endswith("diameter=3\n")
    code, out = run(capsys, "normalform", files["hex"])
    assert out == "1 -1 0 -1 0 1\n0 0 1 -1 -1 1\n"
    target = tmp_path / "lp.txt"
    assert main(["latticepoints", files["hex"], "--out", str(target)]) == 0
    assert len(target.read_text().splitlines()) == 7


def test_verify_exit_codes(capsys, files):
    code, out = run(capsys, "verify", files["wirth"])
    assert code == 0 and "all checks passed" in out
    code, out = run(capsys, "verify", files["cube2"], "--suite", "central")
    assert code == 0 and "central.bound=pass" in out


def test_gallery_pipe_into_check():
    env_cmd = [sys.executable, "-m", "reflexpoly"]
    gal = subprocess.run(env_cmd + ["gallery", "hexagon"], capture_output=True, text=True,
                         check=True)
    chk = subprocess.run(env_cmd + ["check", "-"], input=gal.stdout, capture_output=True,
                         text=True)
    assert chk.returncode == 0
    assert "reflexive=true" in chk.stdout and "smooth=true" in chk.stdout


def test_classify2d(capsys, tmp_path):
    code, out = run(capsys, "classify2d", str(tmp_path / "out"))
    assert code == 0 and out.startswith("16 classes")
    assert (tmp_path / "out" / "d2_9.poly").exists()


def test_verify_shipped_corpus(capsys):
    assert len(list((ROOT / "corpus").glob("*.poly"))) >= 30
    code, out = run(capsys, "verify", str(ROOT / "corpus"))
    assert code == 0, [line for line in out.splitlines() if "=fail" in line][:5]
    assert out.rstrip().endswith("all checks passed")
