import io
import json
import subprocess
import sys

import pytest

from agmat.cli import run_cli


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_cli(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_check_json():
    code, out, _ = run("check", "--n", "5", "--t", "3", "--u", "4", "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert (d["n"], d["t"], d["u"], d["type"]) == (5, 3, 4, "TypeI")
    v = d["verdicts"]
    assert v["ag"]["holds"] and v["T3"]["holds"] and v["cancellative"]["holds"]
    assert not v["ag_band"]["holds"]
    assert v["idempotent"]["witness"] == {"law": "idempotent", "elements": [1], "lhs": 2, "rhs": 1}


def test_check_text_and_csv():
    code, out, _ = run("check", "--n", "8", "--t", "6", "--u", "4")
    assert code == 0 and "T3_l" in out and "(0, 0, 2)" in out
    code, out, _ = run("check", "--n", "8", "--t", "6", "--u", "4", "--format", "csv")
    assert code == 0
    assert "8,6,4,T3,false,both,0 0 2" in out.splitlines()


def test_check_with_shape():
    code, out, _ = run("check", "--n", "5", "--t", "4", "--u", "1", "--shape", "2x2", "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert d["matrix"]["shape"] == "2x2"
    assert d["ag_group"] and d["ag_group_identity"] == 0


def test_check_rejects_small_modulus():
    code, out, err = run("check", "--n", "2", "--t", "1", "--u", "1")
    assert code == 2 and out == ""
    assert ">= 3" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["check", "--n", "5", "--t", "1"],
        ["check", "--n", "five", "--t", "1", "--u", "1"],
        ["check", "--n", "5", "--t", "1", "--u", "1", "--shape", "2by2"],
        ["check", "--n", "5", "--t", "1", "--u", "1", "--format", "xml"],
        ["frobnicate"],
        ["verify", "--n-max", "99"],
        ["enumerate", "--n", "1000"],
    ],
)
def test_usage_errors(argv):
    assert run(*argv)[0] == 2


def test_max_n_env(monkeypatch):
    monkeypatch.setenv("AGMAT_MAX_N", "10")
    assert run("enumerate", "--n", "11")[0] == 2
    assert run("check", "--n", "11", "--t", "1", "--u", "1")[0] == 2
    assert run("enumerate", "--n", "10")[0] == 0


def test_verify():
    code, out, _ = run("verify", "--n-max", "8")
    assert code == 0 and "all theorem assertions pass" in out
    code, out, _ = run("verify", "--n-min", "5", "--n-max", "6", "--format", "json")
    assert json.loads(out)["passed"] is True


def test_verify_failure_exit_code(monkeypatch):
    from agmat import theorems

    real = theorems.evaluate_cell

    def broken(n, t, u):
        c = real(n, t, u)
        c.laws["left_invertive"] = not c.laws["left_invertive"]
        return c

    monkeypatch.setattr(theorems, "evaluate_cell", broken)
    code, out, _ = run("verify", "--n-max", "4")
    assert code == 1 and "FAIL" in out


def test_enumerate_formats():
    code, out, _ = run("enumerate", "--n", "3", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0].startswith("n,t,u,type,")
    assert len(out.splitlines()) == 9
    code, out, _ = run("enumerate", "--n", "3", "--include-degenerate", "--format", "json")
    assert len(json.loads(out)["rows"]) == 9
    code, out, _ = run("enumerate", "--n", "4")
    assert "TypeIII" in out


def test_table():
    code, out, _ = run("table", "--n", "3", "--t", "2", "--u", "1", "--format", "json")
    assert json.loads(out)["entries"] == [[0, 1, 2], [2, 0, 1], [1, 2, 0]]
    code, out, _ = run("table", "--n", "3", "--t", "2", "--u", "1")
    assert code == 0 and "0 | 0 1 2" in out
    code, out, _ = run("table", "--n", "3", "--t", "2", "--u", "1", "--format", "csv")
    assert out.splitlines()[1] == "0,0,1,2"


def test_matop(tmp_path):
    a = tmp_path / "a.txt"
    b = tmp_path / "b.txt"
    a.write_bytes(b"1 2 3\n1 2\n")
    b.write_bytes(b"1 2 3\n2 0\n")
    code, out, _ = run("matop", "--n", "3", "--t", "2", "--u", "1", "--a", str(a), "--b", str(b))
    assert code == 0 and out == "1 2 3\n1 1\n"


def test_matop_errors(tmp_path):
    a = tmp_path / "a.txt"
    b = tmp_path / "b.txt"
    a.write_bytes(b"1 2 3\n1 2\n")
    b.write_bytes(b"2 1 3\n2\n0\n")
    assert run("matop", "--n", "3", "--t", "2", "--u", "1", "--a", str(a), "--b", str(b))[0] == 2
    b.write_bytes(b"1 2 5\n2 0\n")
    assert run("matop", "--n", "3", "--t", "2", "--u", "1", "--a", str(a), "--b", str(b))[0] == 2
    assert run("matop", "--n", "3", "--t", "2", "--u", "1", "--a", str(a), "--b", str(tmp_path / "nope"))[0] == 2
    b.write_bytes(b"1 2 3\n2\n")
    code, _, err = run("matop", "--n", "3", "--t", "2", "--u", "1", "--a", str(a), "--b", str(b))
    assert code == 2 and "row length mismatch" in err


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "agmat", "check", "--n", "2", "--t", "1", "--u", "1"],
        capture_output=True,
        text=True,
    )
    assert res.returncode == 2
    res = subprocess.run(
        [sys.executable, "-m", "agmat", "table", "--n", "3", "--t", "1", "--u", "1"],
        capture_output=True,
        text=True,
    )
    assert res.returncode == 0 and res.stderr == ""
