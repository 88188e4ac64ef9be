import subprocess
import sys
from importlib.resources import files

import pytest

from qhook.cli import run_cli

DATA = files("qhook") / "data"


def run(capsys, *argv):
    code = run_cli(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_hooks_example(capsys):
    code, out, _ = run(capsys, "hooks", "--poset", str(DATA / "young-2-1.poset"))
    assert (code, out) == (0, "3 1 1\n")


def test_gf_example(capsys):
    code, out, _ = run(capsys, "gf", "--poset", str(DATA / "chain-2.poset"), "--N", "4")
    assert (code, out) == (0, "1 1 2 2 3\n")


def test_gf_hlf_instance(capsys):
    code, out, _ = run(capsys, "gf", "--instance", "class 3 lambda=1,0 mu=0,0 m=1", "--N", "10", "--hlf")
    assert code == 0
    assert out.splitlines()[-1] == "GF class 3 lambda=1,0 mu=0,0 m=1 N=10 MATCH"


def test_gf_hlf_not_d_complete(capsys, tmp_path):
    p = tmp_path / "v.poset"
    p.write_text("elem w\nelem x\nelem y\ncover w x\ncover w y\n")
    code, out, _ = run(capsys, "gf", "--poset", str(p), "--N", "5", "--hlf")
    assert code == 1 and "not d-complete" in out


def test_verify_class_example(capsys):
    code, out, err = run(capsys, "verify", "class", "3", "lambda=0,0", "mu=0,0", "m=0")
    assert code == 0
    assert out == "CLASS 3 lambda=0,0 mu=0,0 m=0 PASS\n"
    assert "1 passed, 0 failed" in err


def test_verify_batch(capsys):
    code, out, _ = run(capsys, "verify", "batch", str(DATA / "instances.txt"))
    lines = out.splitlines()
    assert code == 0 and len(lines) == 7 and all(line.endswith(" PASS") for line in lines)
    assert lines[0].startswith("CLASS 1 ")


def test_verify_all_deterministic_across_jobs(tmp_path, capsys):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    args = ["verify", "all", "--classes", "3,5,13", "--max-part", "1", "--max-km", "1"]
    assert run(capsys, *args, "--out", str(a))[0] == 0
    assert run(capsys, *args, "--out", str(b), "--jobs", "2")[0] == 0
    assert a.read_bytes() == b.read_bytes()
    # class 3: 3*3*2, class 5: 3*4, class 13: 3
    assert len(a.read_text().splitlines()) == 18 + 12 + 3


def test_qint_file(capsys):
    code, out, _ = run(capsys, "qint", "--expr", str(DATA / "class3.qint"))
    assert code == 0 and out.startswith("(q^6 + q^2) / (")


def test_pfe(capsys):
    code, out, _ = run(capsys, "pfe", "--id", "a_id", "--n", "3")
    assert (code, out) == (0, "PFE a_id n=3 PASS points=64\n")


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        ["verify", "class", "99"],
        ["verify", "class", "3", "lambda=0,1", "mu=0,0", "m=0"],
        ["verify", "class"],
        ["verify", "batch"],
        ["verify", "all", "--jobs", "0"],
        ["gf", "--poset", "/nonexistent/file"],
        ["gf"],
        ["gf", "--poset", "x", "--instance", "class 15"],
        ["hooks", "--instance", "class 3 lambda=0,0"],
        ["pfe", "--id", "nope", "--n", "2"],
        ["pfe", "--id", "a_id", "--n", "0"],
    ],
)
def test_bad_input_exit_2(capsys, argv):
    assert run_cli(argv) == 2


def test_gf_negative_N(capsys):
    assert run_cli(["gf", "--poset", str(DATA / "chain-2.poset"), "--N", "-1"]) == 2


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "qhook", "hooks", "--poset", str(DATA / "young-2-1.poset")],
                       capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout == "3 1 1\n"
