import io
import json
import subprocess
import sys

import pytest

from heckeb2.cli import run


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue().strip()


def test_mu():
    assert call("mu", "e", "s") == (0, "1")


def test_kl():
    assert call("kl", "e", "s") == (0, "1")


def test_crt_s_mod_c0():
    assert call("crt-s", "1", "0", "--mod-c0") == (0, "C[rt] - [2]·C[rtsrt]")


def test_crt_s_full_json():
    code, text = call("--json", "crt-s", "0", "1")
    data = json.loads(text)
    assert code == 0 and data["version"] == 1 and data["result"]["basis"] == "C"
    assert [t[0] for t in data["result"]["terms"]] == ["w.rtsrt", "w.rt"]


def test_flags_after_verb():
    code, text = call("phi", "1", "0", "--json")
    assert code == 0
    table = json.loads(text)["result"]["a_kp"]
    assert {"k": 0, "p": 0, "coefficient": [[0, 1]]} in table
    assert {"k": 1, "p": 0, "coefficient": [[1, -1], [-1, -1]]} in table


def test_cell_and_avalue():
    assert call("cell", "rtsrt") == (0, "B_rt c_2")
    assert call("avalue", "w.rsr") == (0, "1")


def test_selement_and_cprod_and_tensor():
    assert call("selement", "0", "0", "--basis", "C") == (0, "C[e]")
    assert call("cprod", "s", "s") == (0, "[2]·C[s]")
    assert call("tensor", "0", "1", "0", "1") == (0, "V(0*x1+2*x2) + V(1*x1+0*x2) + V(0*x1+0*x2)")


def test_verify_thm36():
    code, text = call("verify", "thm36", "--range", "3")
    assert code == 0 and text.endswith("10/10 passed")


def test_verify_json():
    code, text = call("--json", "verify", "lemma32")
    data = json.loads(text)
    assert code == 0 and data["result"]["passed"]
    assert all(r["lhs"] == r["rhs"] for r in data["result"]["reports"])


def test_exit_codes():
    assert call("mu", "x", "s")[0] == 2
    assert call("crt-s", "-1", "0")[0] == 2
    assert call("nosuchverb")[0] == 2
    assert call("--budget", "5", "crt-s", "1", "1")[0] == 3


def test_mismatch_exit(monkeypatch):
    import heckeb2.phimaps as pm
    from heckeb2.repring import V
    monkeypatch.setattr(pm, "phi_S", lambda lam: V(7))
    assert call("verify", "thm36", "--range", "1")[0] == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "heckeb2", "mu", "e", "s"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "1"
