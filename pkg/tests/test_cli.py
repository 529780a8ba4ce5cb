import json
import subprocess
import sys

import numpy as np

from commvar import jsonio
from commvar.cli import main
from commvar.commodel import CommutingTuple, identity_tuple


def run_cli(args, stdin=None):
    proc = subprocess.run(
        [sys.executable, "-m", "commvar.cli", *args],
        input=stdin, capture_output=True, text=True,
    )
    return proc.returncode, proc.stdout, proc.stderr


def test_generate_deterministic_bytes():
    code1, out1, _ = run_cli(["generate", "--seed", "9", "--n", "2", "--s", "3"])
    code2, out2, _ = run_cli(["generate", "--seed", "9", "--n", "2", "--s", "3"])
    assert code1 == code2 == 0
    assert out1 == out2
    data = json.loads(out1)
    assert data["kind"] == "unitary" and data["n"] == 2 and data["s"] == 3


def test_generate_env_seed(monkeypatch, capsys):
    monkeypatch.setenv("COMMVAR_SEED", "31")
    assert main(["generate", "--n", "1", "--s", "2"]) == 0
    first = capsys.readouterr().out
    assert main(["generate", "--n", "1", "--s", "2", "--seed", "31"]) == 0
    assert capsys.readouterr().out == first


def test_stratify_identity_tuple(capsys):
    payload = jsonio.dumps(jsonio.tuple_to_json(identity_tuple(2, 3)))
    code, out, _ = run_cli(["stratify", "--input", "-"], stdin=payload)
    assert code == 0
    report = json.loads(out)
    assert report["rank"] == 0
    assert report["chart"]["X"]["s"] == 0
    assert report["decomposition_type"] == [3]


def test_stratify_generated_tuple(tmp_path):
    code, out, _ = run_cli(["generate", "--seed", "5", "--n", "2", "--s", "3",
                            "--kind", "unitary"])
    assert code == 0
    path = tmp_path / "tuple.json"
    path.write_text(out)
    code, out2, _ = run_cli(["stratify", "--input", str(path)])
    assert code == 0
    report = json.loads(out2)
    assert report["rank"] == 3
    assert len(report["split"]["tau"]) == 2


def test_stratify_skew_tuple_reports_type_only():
    code, out, _ = run_cli(["generate", "--seed", "6", "--n", "1", "--s", "2",
                            "--kind", "skew_hermitian"])
    payload = out
    code, out2, _ = run_cli(["stratify"], stdin=payload)
    assert code == 0
    report = json.loads(out2)
    assert report["rank"] is None
    assert sum(report["decomposition_type"]) == 2


def test_stratify_rejects_noncommuting():
    bad = {
        "n": 2, "s": 2, "kind": "unitary",
        "mats": [
            jsonio.matrix_to_json(np.diag([1j, -1j])),
            jsonio.matrix_to_json(np.array([[0.0, 1.0], [-1.0, 0.0]], dtype=complex)),
        ],
    }
    code, out, _ = run_cli(["stratify"], stdin=json.dumps(bad))
    assert code == 2
    assert json.loads(out)["error"] == "invalid_input"


def test_stratify_rejects_malformed_json():
    code, out, _ = run_cli(["stratify"], stdin="{nope")
    assert code == 2
    assert json.loads(out)["error"] == "invalid_input"


def test_stratify_tolerance_breach_exit_3():
    # eigenvalue at arc distance ~5e-9 from 1: outside the default basepoint
    # window (1e-9) so it stays in F, but inside a widened structural
    # tolerance, so the chart must refuse
    a = np.diag([np.exp(5e-9j), -1.0])
    payload = jsonio.dumps(jsonio.tuple_to_json(
        CommutingTuple("unitary", np.array([a]))))
    code, out, _ = run_cli(["stratify", "--tol-struct", "1e-7"], stdin=payload)
    assert code == 3
    assert json.loads(out)["error"] == "stratum_error"


def test_verify_cohomology_passes():
    code, out, _ = run_cli(["verify", "--suite", "cohomology", "--trials", "5"])
    assert code == 0
    summary = json.loads(out)
    assert summary["failures"] == 0
    assert summary["suite"] == "cohomology"


def test_verify_unknown_suite():
    code, out, _ = run_cli(["verify", "--suite", "nonsense"])
    assert code == 2


def test_verify_failure_exit_code():
    # an absurd structural tolerance makes every generated tuple fail
    # validation inside the suite, driving the failure count up
    code, out, _ = run_cli(["verify", "--suite", "cayley", "--trials", "2",
                            "--tol-struct", "1e-30"])
    assert code == 1
    assert json.loads(out)["failures"] > 0


def test_verify_text_output():
    code, out, _ = run_cli(["verify", "--suite", "cohomology", "--trials", "2",
                            "--output", "text"])
    assert code == 0
    assert "suite cohomology" in out


def test_poincare_command():
    code, out, _ = run_cli(["poincare", "--p", "3"])
    assert code == 0
    data = json.loads(out)
    assert data["poincare"] == {"0": 1, "3": 1, "4": 2, "5": 1}
    assert data["reduced"] == {"3": 1, "4": 2, "5": 1}
    assert "t^3" in data["string"]
    code, out, _ = run_cli(["poincare", "--p", "4"])
    assert code == 2
    code, out, _ = run_cli(["poincare", "--p", "5", "--output", "text"])
    assert code == 0 and "P(t)" in out


def test_verify_deterministic():
    args = ["verify", "--suite", "isotropy", "--trials", "3", "--seed", "4"]
    _, out1, _ = run_cli(args)
    _, out2, _ = run_cli(args)
    assert out1 == out2
