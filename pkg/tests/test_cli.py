import json
import os
import subprocess
import sys

import pytest

from bracketlab.cli import main

SPEC = """\
n: 2
d: 2
N: 3
t: 1
h: "x2"
F:
  1: "x1"
a:
  3: 1
"""


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def spec_file(tmp_path):
    p = tmp_path / "spec.yaml"
    p.write_text(SPEC)
    return str(p)


def test_bracket(capsys):
    code, out, _ = run(capsys, "bracket", "--n", "2", "--f", "x1^2", "--g", "x1*x2")
    data = json.loads(out)
    assert code == 0
    assert data == {"bracket": [{"i": 1, "j": 2, "poly": "2*x1^2"}], "degree": "4"}


def test_bracket_deg_neg_inf(capsys):
    code, out, _ = run(capsys, "bracket-deg", "--f", "x1", "--g", "x1^2")
    assert code == 0 and json.loads(out)["degree"] == "-inf"


def test_lattice_min_both(capsys):
    code, out, _ = run(capsys, "lattice-min", "--d", "4", "--N", "6", "--j", "4", "--t", "1", "--mode", "both")
    data = json.loads(out)
    assert code == 0
    assert data["value"] == "-2" and data["argmins"] == [[-2, 0, 0, 2]] and data["agree"] is True


def test_lattice_min_simplex_and_weight(capsys):
    code, out, _ = run(capsys, "lattice-min", "--d", "4", "--N", "6", "--j", "4", "--k", "1", "--simplex")
    data = json.loads(out)
    assert code == 0 and data["simplex"]["minimum"] == "0"
    code, out, _ = run(capsys, "lattice-min", "--d", "2", "--N", "3", "--j", "2", "--weight", "0,0", "--mode", "brute")
    assert code == 0 and len(json.loads(out)["argmins"]) == 2
    code, _, err = run(capsys, "lattice-min", "--d", "2", "--N", "3", "--j", "2", "--weight", "1,0")
    assert code == 1 and json.loads(err)["error"] == "NotApplicable"


def test_hreduce_and_express(capsys):
    code, out, _ = run(capsys, "hreduce", "--H", "x1*x2", "--P", "9*x1^2*x2^2")
    assert code == 0 and json.loads(out) == {"a": "9", "k": 2}
    code, out, _ = run(capsys, "express", "--H", "x1*x2", "--P", "2*(x1*x2)^3 - x1*x2")
    assert json.loads(out)["coefficients"] == ["0", "-1", "0", "2"]


def test_domain_error_exit_1(capsys):
    code, out, err = run(capsys, "hreduce", "--H", "(x1+x2)^2", "--P", "(x1+x2)^4")
    assert code == 1 and out == ""
    diag = json.loads(err)
    assert diag["error"] == "HIsProperPower" and diag["command"] == "hreduce"


def test_parse_error_exit_1(capsys):
    code, _, err = run(capsys, "bracket", "--f", "x1 +", "--g", "x2")
    assert code == 1 and json.loads(err)["error"] == "ParseError"


def test_usage_error_exit_2(capsys):
    assert run(capsys, "bracket", "--f", "x1")[0] == 2
    assert run(capsys, "no-such-command")[0] == 2
    assert run(capsys, "selftest", "--threads", "0")[0] == 2


def test_bad_env_seed_is_usage_error(capsys, monkeypatch):
    monkeypatch.setenv("BRACKETLAB_SEED", "abc")
    assert run(capsys, "selftest")[0] == 2


def test_build_g_and_verify(capsys, spec_file):
    code, out, _ = run(capsys, "build-g", "--spec", spec_file, "--i", "2")
    data = json.loads(out)
    assert code == 0 and data["G"] == "x2^3 + 3/2*x1*x2" and data["below_bound"] is True
    code, out, _ = run(capsys, "verify-formula", "--spec", spec_file, "--table")
    data = json.loads(out)
    assert code == 0 and data["ok"] and data["table"]


def test_spec_errors(capsys, tmp_path):
    p = tmp_path / "bad.yaml"
    p.write_text(SPEC.replace("a:\n  3: 1", "a:\n  3: 0"))
    code, _, err = run(capsys, "build-g", "--spec", str(p))
    assert code == 1 and "a_N" in json.loads(err)["message"]


def test_checks_via_cli(capsys, tmp_path):
    p = tmp_path / "dep.yaml"
    p.write_text('n: 2\nd: 4\nN: 6\nh: "x2"\nF:\n  2: "x1*x2"\na:\n  6: 1\n')
    code, out, _ = run(capsys, "check-dependence", "--spec", str(p), "--i", "2")
    assert code == 0 and json.loads(out)["relation_holds"] is True
    code, out, _ = run(capsys, "check-divisibility", "--spec", str(p), "--k", "0")
    assert code == 0 and json.loads(out)["conclusion"] is True


def test_oracle_and_su_bound(capsys):
    code, out, _ = run(capsys, "oracle-min-bracket", "--F", "x1 + x2^2", "--h", "x2", "--N", "3")
    data = json.loads(out)
    assert code == 0 and data["min_i"] == 2 and data["witness"] == "x2^3 + 3/2*x1*x2"
    code, out, _ = run(capsys, "su-bound", "--f", "x2^2 + x1", "--g", "x2^3 + 3/2*x1*x2", "--P", "x1*x2")
    data = json.loads(out)
    assert code == 0 and data["D"] == "7/6" and data["holds"] is False


def test_search_out_file_and_seed_env(capsys, tmp_path, monkeypatch):
    out_a = tmp_path / "a.json"
    out_b = tmp_path / "b.json"
    assert run(capsys, "search-conjecture", "--samples", "10", "--seed", "5", "--out", str(out_a))[0] == 0
    monkeypatch.setenv("BRACKETLAB_SEED", "5")
    assert run(capsys, "search-conjecture", "--samples", "10", "--threads", "2", "--out", str(out_b))[0] == 0
    assert out_a.read_bytes() == out_b.read_bytes()
    assert json.loads(out_a.read_text())["config"]["seed"] == 5


def test_search_config_file_seed_kept(capsys, tmp_path):
    cfg = tmp_path / "s.yaml"
    cfg.write_text("d: 2\nN: 3\nsamples: 3\nseed: 12\n")
    code, out, _ = run(capsys, "search-conjecture", "--config", str(cfg))
    assert code == 0 and json.loads(out)["config"]["seed"] == 12


def test_search_dump_dir(capsys, tmp_path):
    dump = tmp_path / "dump"
    code, out, _ = run(capsys, "search-conjecture", "--d", "3", "--N", "4", "--samples", "30",
                       "--mode", "family", "--dump-dir", str(dump))
    data = json.loads(out)
    assert code == 0
    assert data["candidates"]
    files = sorted(os.listdir(dump))
    assert files == [f"candidate_{i:06d}.json" for i in data["candidates"]]


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest", "--seed", "3")
    data = json.loads(out)
    assert code == 0 and data["ok"] and len(data["checks"]) == 7


def test_console_script_entry_point():
    res = subprocess.run([sys.executable, "-m", "bracketlab.cli", "bracket-deg", "--f", "x1", "--g", "x2"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and json.loads(res.stdout) == {"degree": "2"}
