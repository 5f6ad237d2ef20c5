import json
import subprocess
import sys

import pytest

from cong13.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main
from cong13.selftest import EX81, J_988B1


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, (json.loads(out.out) if out.out.strip() else None), out.err


def test_verify_congruence_consistent(capsys):
    code, out, _ = run(capsys, "verify-congruence", "52a2", "988b1", "--bound", "1000")
    assert code == EXIT_OK
    assert out["result"]["report"]["verdict"] == "consistent"
    assert out["parameters"]["bound"] == 1000


def test_verify_congruence_refuted(capsys):
    code, out, _ = run(capsys, "verify-congruence", "52a1", "-1,0", "--bound", "500")
    assert code == EXIT_FAIL
    assert out["result"]["report"]["refuting_prime"] == 5


def test_jmap_from_bundle(capsys, tmp_path):
    a, b, P = EX81
    bundle = tmp_path / "model.json"
    code, out, _ = run(capsys, "build-xe", "--k", "1", "--a", str(a), "--b", str(b), "--out", str(bundle))
    assert code == EXIT_OK and bundle.exists()
    code, out, _ = run(capsys, "jmap", "--model", str(bundle), "--point", ",".join(map(str, P)))
    assert code == EXIT_OK
    assert out["result"]["j"] == f"{J_988B1.numerator}/{J_988B1.denominator}"


def test_surface_point(capsys):
    code, out, _ = run(capsys, "surface", "--k", "1", "--point", "4,5,3")
    assert code == EXIT_OK
    assert out["result"]["F"] == "33385284" and out["result"]["Y"] == "5778"


def test_family_row(capsys):
    code, out, _ = run(capsys, "family", "--kind", "skew", "--t", "1/3", "--bound", "500")
    assert code == EXIT_OK
    assert out["result"]["table_row"]["passed"]


def test_derive_g2(capsys):
    code, out, _ = run(capsys, "derive-g2", "--kind", "skew")
    assert code == EXIT_OK and out["result"]["degree"] == 23


def test_invariant_dims(capsys):
    code, out, _ = run(capsys, "invariant-dims", "--m", "4")
    assert code == EXIT_OK and out["result"]["dimension"] == 2


def test_appendix_point(capsys):
    code, out, _ = run(capsys, "appendix", "--point", "17/33,1,126340/35937")
    assert code == EXIT_OK and out["result"]["member"]
    code, out, _ = run(capsys, "appendix", "--point", "17/33,1,1")
    assert code == EXIT_FAIL


def test_curve_lookup(capsys):
    code, out, _ = run(capsys, "curve", "988b1", "--traces", "20")
    assert code == EXIT_OK
    assert out["result"]["conductor"] == 988
    assert [t["p"] for t in out["result"]["traces"]] == [2, 3, 5, 7, 11, 13, 17, 19]


@pytest.mark.parametrize("argv", [
    ["no-such-command"],
    ["surface", "--k", "1", "--point", "1,2"],
    ["build-xe", "--k", "3", "--a", "1", "--b", "1"],
    ["family", "--kind", "dir", "--t", "abc"],
    ["family", "--kind", "sideways", "--t", "1"],
    ["verify-congruence", "52a2", "0,0"],
    ["verify-congruence", "52a2", "988b1", "--n", "1"],
    ["jmap", "--point", "1,0,0,0,0,0,0"],
    ["curve", "../x"],
])
def test_usage_errors(capsys, argv, monkeypatch):
    monkeypatch.delenv("CURVEDB_URL", raising=False)
    code, _, _ = run(capsys, *argv)
    assert code == EXIT_USAGE


def test_output_is_deterministic(capsys):
    _, first, _ = run(capsys, "curve", "52a2")
    _, second, _ = run(capsys, "curve", "52a2")
    assert first == second


def test_console_script_fast_suite():
    proc = subprocess.run([sys.executable, "-m", "cong13.cli", "selftest", "--suite", "fast"],
                          capture_output=True, text=True, timeout=600)
    assert proc.returncode == 0, proc.stderr
    out = json.loads(proc.stdout)
    assert out["result"]["passed"]
    assert proc.stderr.count("PASS") == 9
