import json
import subprocess
import sys

import pytest

from tits3.algebra import Superalgebra
from tits3.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_gen_s(capsys, s3):
    code, out, _ = run(capsys, "gen", "s", "--field", "gf3")
    assert code == 0
    obj = json.loads(out)
    assert obj["dim"] == 7 and obj["field"] == {"char": 3}
    assert Superalgebra.from_json(out).table == s3[0].table


@pytest.mark.parametrize("target,dim", [("bj", 24), ("Bj:2", 144), ("Bj", 48), ("b12", 3),
                                        ("gamma:1", 3), ("bgamma:2", 18), ("cayley", 8),
                                        ("quaternion", 4), ("binarion", 2), ("h3:k", 6)])
def test_gen_dims(capsys, tmp_path, target, dim):
    path = tmp_path / "alg.json"
    argv = ["gen", target, "--out", str(path)]
    if target == "Bj":
        argv += ["--n", "1"]
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out == ""
    assert json.loads(path.read_text(encoding="utf-8"))["dim"] == dim


def test_gen_text(capsys):
    code, out, _ = run(capsys, "gen", "b12", "--format", "text")
    assert code == 0 and "u . v = 1*1" in out


@pytest.mark.parametrize("target", ["s", "bj", "Bj:1", "gamma:1", "tits:k:k"])
def test_round_trip_is_byte_identical(capsys, tmp_path, target):
    path = tmp_path / "a.json"
    assert run(capsys, "gen", target, "--out", str(path))[0] == 0
    text = path.read_text(encoding="utf-8")
    code, out, _ = run(capsys, "verify", str(path), "--suite", "full")
    assert code == 0 and json.loads(out)["pass"] is True
    assert Superalgebra.from_json(text).to_json() == text


def test_round_trip_over_rationals(capsys, tmp_path):
    path = tmp_path / "q.json"
    assert run(capsys, "gen", "quaternion", "--field", "q", "--out", str(path))[0] == 0
    text = path.read_text(encoding="utf-8")
    assert Superalgebra.from_json(text).to_json() == text
    assert run(capsys, "verify", str(path), "--suite", "alternative")[0] == 0


def test_verify_bj1_full(capsys):
    code, out, _ = run(capsys, "verify", "Bj:1", "--suite", "full")
    assert code == 0
    rep = json.loads(out)
    assert rep["pass"] and rep["seed"] == 0xC3A1
    assert {r["check"] for r in rep["reports"]} >= {"jacobi", "grading", "simple", "bj-profile"}


def test_verify_negative_control(capsys):
    code, out, _ = run(capsys, "verify", "s", "--field", "gf5", "--suite", "jacobi")
    assert code == 1
    rep = json.loads(out)
    (r,) = rep["reports"]
    assert not r["pass"] and len(r["counterexample"]["indices"]) == 3


def test_verify_b12_alternative(capsys):
    assert run(capsys, "verify", "b12", "--suite", "alternative")[0] == 0


def test_seed_is_recorded(capsys):
    code, out, _ = run(capsys, "verify", "s", "--suite", "random", "--seed", "17")
    assert code == 0 and json.loads(out)["reports"][0]["seed"] == 17


def test_magic_square_char3_is_usage_error(capsys):
    code, _, err = run(capsys, "magic-square", "--field", "gf3")
    assert code == 2 and "Bj" in err and "char-3" in err


@pytest.mark.parametrize("argv", [["gen", "nonsense"], ["gen", "h3:k", "--field", "gf3"],
                                  ["gen", "bj", "--field", "gf7"], ["gen", "Bj"],
                                  ["gen", "gamma:0"], ["gen", "s", "--field", "gf4"],
                                  ["verify", "bj", "--suite", "tits"], ["frobnicate"],
                                  ["verify", "s", "--suite", "nope"], ["gen", "Bj", "--n", "0"],
                                  ["verify", "gamma:1", "--field", "q", "--suite", "simple"]])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_bad_file_is_usage_error(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json", encoding="utf-8")
    assert run(capsys, "verify", str(p))[0] == 2


def test_verify_text_format(capsys):
    code, out, _ = run(capsys, "verify", "cayley", "--format", "text")
    assert code == 0 and "PASS composition" in out


def test_console_script_magic_square_json(tmp_path):
    """The installed entry point, on a cheap field, in JSON."""
    out = tmp_path / "ms.json"
    proc = subprocess.run([sys.executable, "-m", "tits3.cli", "magic-square", "--field", "gf5",
                           "--format", "json", "--out", str(out)], capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    obj = json.loads(out.read_text(encoding="utf-8"))
    dims = [[e["dim"] for e in row] for row in obj["entries"]]
    assert dims[3][3] == 248 and obj["symmetric"] and obj["pass"]
