import json
import subprocess
import sys

import pytest

from platorder.braid import parse_word
from platorder.cli import main
from platorder.garside import from_key, normal_form


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compare(capsys):
    assert run(capsys, "compare", "--strands", "4", "2", "1") == (0, "LT\n", "")
    assert run(capsys, "compare", "--strands", "4", "1 2 1", "2 1 2")[1] == "EQ\n"
    assert run(capsys, "compare", "--strands", "4", "1", "-1")[1] == "GT\n"


def test_compare_bad_index(capsys):
    code, out, err = run(capsys, "compare", "--strands", "4", "4", "1")
    assert code == 1
    assert out == ""
    assert err.startswith("error: ") and err.count("\n") == 1


def test_compare_step_budget(capsys):
    code, _, err = run(capsys, "compare", "--strands", "4", "--step-budget", "1",
                       "1 2 3 -2 -1", "2 3 -2 -3 1")
    assert code == 2
    assert err.startswith("error: ")


def test_usage_errors(capsys):
    assert run(capsys)[0] == 1
    assert run(capsys, "nf", "1")[0] == 1
    assert run(capsys, "frobnicate")[0] == 1
    assert run(capsys, "cell", "--strands", "4", "--complexity", "nope", "")[0] == 1


def test_nf(capsys):
    code, out, _ = run(capsys, "nf", "--strands", "3", "-1")
    assert (code, out) == (0, "-1|3,1,2\n")
    assert from_key(out.strip(), 3) == normal_form(parse_word("-1", 3))


def test_plat(capsys):
    code, out, _ = run(capsys, "plat", "--strands", "4", "")
    assert code == 0
    data = json.loads(out)
    assert data["components"] == 2
    assert data["brackets"] == ["-1*A^2 + -1*A^-2"] * 2


def test_plat_odd_strands(capsys):
    assert run(capsys, "plat", "--strands", "3", "1")[0] == 1


def test_ball(capsys):
    code, out, _ = run(capsys, "ball", "--strands", "4", "--radius", "1")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 7
    for line in lines:
        key, length, word = line.split(" ", 2)
        witness = parse_word(word, 4)
        assert from_key(key, 4) == normal_form(witness)
        assert int(length) == len(witness)


def test_ball_cap_env(capsys, monkeypatch):
    from platorder.complexity import clear_ball_cache
    monkeypatch.setenv("PLATORDER_BALL_CAP", "10")
    clear_ball_cache()
    try:
        assert run(capsys, "ball", "--strands", "4", "--radius", "3")[0] == 2
    finally:
        monkeypatch.delenv("PLATORDER_BALL_CAP")
        clear_ball_cache()


def test_hilden(capsys):
    code, out, _ = run(capsys, "hilden", "--n", "2")
    assert code == 0
    assert out.splitlines() == ["CapTwist(1) 1", "CapTwist(2) 3",
                                "CapThrough(1) 2 1 1 2", "CapInterchange(1) 2 3 1 2"]


def test_cell_report(capsys):
    code, out, _ = run(capsys, "cell", "--strands", "4", "--radius", "3", "2")
    assert code == 0
    data = json.loads(out)
    assert data["c_min"] == 1
    assert data["budget"] == {"ball_radius": 3, "move_depth": 4, "complexity": "geodesic:8"}
    assert from_key(data["nf_key"], 4) == normal_form(parse_word(data["canonical"], 4))


def test_cell_outside_ball(capsys):
    assert run(capsys, "cell", "--strands", "4", "--radius", "1", "2 2")[0] == 1


def test_order_is_byte_identical(capsys, tmp_path):
    argv = ["order", "--strands", "4", "--radius", "3", "", "2"]
    first = run(capsys, *argv)[1]
    second = run(capsys, *argv)[1]
    assert first == second
    target = tmp_path / "order.json"
    assert run(capsys, *argv, "--output", str(target)) == (0, "", "")
    assert target.read_text(encoding="utf-8") == first
    assert json.loads(first)["cell_count"] == 2


def test_canplat(capsys):
    code, out, _ = run(capsys, "canplat", "--strands", "4", "--radius", "2", "--target", "2")
    assert code == 0
    data = json.loads(out)
    assert data["beta_global"] == "-2"
    assert data["compatible"] is True
    sig = json.dumps(data["target_signature"])
    again = run(capsys, "canplat", "--strands", "4", "--radius", "2", "--target-signature", sig)
    assert json.loads(again[1]) == data


def test_canplat_flags(capsys):
    assert run(capsys, "canplat", "--strands", "4")[0] == 1
    assert run(capsys, "canplat", "--strands", "4", "--target-signature", "{}")[0] == 1
    assert run(capsys, "canplat", "--strands", "4", "--radius", "2", "--target", "2 2 2")[0] == 2


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest", "--max-level", "2")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 2 + 8 + 4
    assert all(line.startswith("PASS") for line in lines)


def test_integrity_exit_code(capsys, monkeypatch):
    import platorder.cli as cli
    from platorder.errors import IntegrityError

    def broken(n):
        raise IntegrityError("generator fails unlink check: Bogus(1)")

    monkeypatch.setattr(cli, "verify_generators", broken)
    code, _, err = run(capsys, "selftest")
    assert code == 3
    assert err == "error: integrity: generator fails unlink check: Bogus(1)\n"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "platorder", "compare", "--strands", "4", "2", "1"],
                          capture_output=True, text=True, check=False)
    assert (proc.returncode, proc.stdout) == (0, "LT\n")
