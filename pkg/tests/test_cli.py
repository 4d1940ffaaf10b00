import json
import subprocess
import sys

import pytest

from nkcalc.cli import main, parse_n_range, UsageError
from nkcalc.serialize import table_from_json, validate


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_dual_numbers(capsys):
    code, out, _ = run(capsys, "compute", "ring Q[x]/(x^2)", "--n", "-1..3")
    assert code == 0
    rows = {ln.split()[0]: ln.split()[1:] for ln in out.splitlines() if ln.strip().startswith("TK_")}
    assert rows["TK_1"][:1] == ["1"] and rows["TK_2"][1] == "1"
    assert rows["TK_-1"] == ["0", "0"]


def test_compute_semigroup(capsys):
    code, out, _ = run(capsys, "compute", "--semigroup", "2,3", "--n", "-2..1", "--weight", "10", "--format", "json")
    assert code == 0
    T = table_from_json(out)
    assert T.dim(0, 1) == 1 and T.total(-1) == T.total(-2) == 0


def test_compute_etale_all_zero(capsys):
    code, out, _ = run(capsys, "compute", "ring Q[x]/(x^2-1)", "--n", "0..2", "--format", "json")
    assert code == 0 and all(v == 0 for v in json.loads(out)["totals"].values())


def test_text_and_json_agree(capsys):
    _, text, _ = run(capsys, "compute", "--builtin", "fat-point-3", "--n", "0..3")
    _, js, _ = run(capsys, "compute", "--builtin", "fat-point-3", "--n", "0..3", "--format", "json")
    T = table_from_json(js)
    for ln in text.splitlines():
        if ln.startswith("TK_"):
            parts = ln.split()
            assert int(parts[-1]) == T.total(int(parts[0][3:]))


def test_ring_from_file(tmp_path, capsys):
    f = tmp_path / "ring.txt"
    f.write_text("ring Q[x] / (x^2)\n")
    code, out, _ = run(capsys, "compute", str(f), "--n", "1..1", "--format", "json")
    assert code == 0 and json.loads(out)["totals"] == {"1": 1}


@pytest.mark.parametrize("suite,extra", [
    ("cartier", []),
    ("twopath", ["ring Q[x]/(x^3)", "--N", "3"]),
    ("cech", ["--builtin", "cross", "--degree", "6"]),
    ("cech", ["--builtin", "cusp"]),
    ("derham", ["--builtin", "cusp", "--weight", "10"]),
    ("hodge", ["--builtin", "dual-numbers"]),
    ("kunneth", []),
    ("sbi", ["--builtin", "cusp", "--N", "3"]),
])
def test_verify_suites(capsys, suite, extra):
    code, out, _ = run(capsys, "verify", suite, *extra)
    assert code == 0, out
    assert "PASS" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "cartier", "--format", "json")
    assert code == 0 and json.loads(out)["passed"] is True


def test_verify_failure_exit_code(capsys, monkeypatch):
    from nkcalc import suites

    def broken(rings=None, **kw):
        r = suites.SuiteResult("twopath")
        r.check(False, "forced", "witness vector {0: 1}")
        return r

    monkeypatch.setitem(suites.SUITES, "twopath", broken)
    code, out, _ = run(capsys, "verify", "twopath")
    assert code == 1 and "witness vector" in out


def test_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "bogus")
    assert code == 2 and "cartier" in err


def test_parse_error_position(capsys):
    code, _, err = run(capsys, "compute", "ring Q[x]/(x^2+)")
    assert code == 2 and "position" in err


def test_unsupported_class(capsys):
    code, _, err = run(capsys, "compute", "ring Q[x,y]/(x*y)")
    assert code == 2 and "supported classes" in err


def test_bad_usage(capsys):
    assert run(capsys, "compute", "--n", "3..1", "--builtin", "cusp")[0] == 2
    assert run(capsys, "compute")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2


def test_report(capsys):
    code, out, _ = run(capsys, "report", "--semigroup", "1", "--n", "0")
    assert code == 0 and "NK_0 = 0, NK_-1 = 0, N^2K_0 = 0" in out and "consistent" in out
    code, out, _ = run(capsys, "report", "--builtin", "cusp", "--n", "1")
    assert "NK_0 != 0" in out and "dim TK_1 = 1" in out
    code, out, _ = run(capsys, "report", "--builtin", "dual-numbers", "--n", "1", "--format", "json")
    doc = json.loads(out)
    validate(doc)
    v = doc["verdicts"][0]
    assert v["NK_n_zero"] is False and v["K_n_regular"] is False


def test_n_range_parser():
    assert parse_n_range("-2..3") == (-2, 3)
    assert parse_n_range("4") == (4, 4)
    with pytest.raises(UsageError):
        parse_n_range("a..b")


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "nkcalc", "compute", "--builtin", "dual-numbers", "--n", "0..1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "TK_1" in proc.stdout
