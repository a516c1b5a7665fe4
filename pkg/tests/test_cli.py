import json
import math

import pytest

from kbint import reports
from kbint.cli import main
from kbint.identities import IdentityCase, verify

T1 = ["--lambda", "1", "--rho", "1", "--v", "0.5", "--c", "1", "--k", "1", "--y", "1"]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def _value(out):
    return float(next(line for line in out.splitlines() if line.startswith("value:")).split()[1])


def test_eval_kgamma(capsys):
    code, out, _ = run(capsys, "eval", "kgamma", "--z", "2", "--k", "2")
    assert code == 0 and _value(out) == pytest.approx(1.0, rel=1e-15)


def test_eval_kbessel_j0(capsys):
    code, out, _ = run(capsys, "eval", "kbessel", "--k", "1", "--v", "0", "--c", "1", "--z", "1")
    assert code == 0
    assert _value(out) == pytest.approx(0.7651976865579666, rel=1e-15)
    assert "abs_error_estimate:" in out and "terms:" in out


def test_eval_jk_ik(capsys):
    _, out, _ = run(capsys, "eval", "ik", "--k", "1", "--v", "1", "--z", "1")
    assert _value(out) == pytest.approx(0.5651591039924851, rel=1e-15)


def test_eval_wright_at_zero(capsys):
    code, out, _ = run(capsys, "eval", "wright", "--upper", "2,1", "--lower", "3,1", "--z", "0")
    assert code == 0 and _value(out) == pytest.approx(0.5, rel=1e-15)
    assert "terms: 1" in out


def test_eval_pfq(capsys):
    _, out, _ = run(capsys, "eval", "pfq", "--z", "1")
    assert _value(out) == pytest.approx(math.e, rel=1e-14)


def test_eval_domain_and_convergence_codes(capsys):
    code, _, err = run(capsys, "eval", "kgamma", "--z", "-2", "--k", "1")
    assert code == 3 and "domain error" in err
    code, _, err = run(capsys, "eval", "kbessel", "--k", "1", "--v", "0", "--c", "1", "--z", "30",
                       "--max-terms", "5")
    assert code == 4 and "evaluation failed" in err
    code, _, _ = run(capsys, "eval", "pfq", "--upper", "1", "1", "1", "--lower", "1", "--z", "0.1")
    assert code == 3


def test_verify_pass_json(capsys):
    code, out, _ = run(capsys, "verify", "theorem1", *T1)
    rec = json.loads(out)[0]
    assert code == 0 and rec["status"] == "pass" and rec["kind"] == "theorem1"
    assert rec["rel_err"] <= 1e-7


def test_verify_precondition(capsys):
    code, out, err = run(capsys, "verify", "theorem2", "--lambda", "0.1", "--rho", "1", "--v", "-0.5",
                         "--c", "1", "--k", "1", "--y", "1")
    assert code == 3 and "lambda + v/k > 0" in err
    assert json.loads(out)[0]["status"] == "precondition"


def test_verify_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["verify", "theorem1", "--lambda", "1"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["verify", "nonsense"])
    assert info.value.code == 2


def test_verify_fail_at_impossible_tolerance(capsys):
    args = ["--lambda", "0.6", "--rho", "0.5", "--v", "1.5", "--c", "1", "--k", "2", "--y", "2"]
    rep = verify("theorem1", IdentityCase(0.6, 0.5, 1.5, 1.0, 2.0, 2.0))
    assert rep.rel_err > 0
    code, out, _ = run(capsys, "verify", "theorem1", *args, "--tol", "1e-300")
    assert code == 1 and json.loads(out)[0]["status"] == "fail"


def test_verify_corollary_pins_c(capsys):
    code, out, _ = run(capsys, "verify", "corollary4", "--lambda", "1", "--rho", "1", "--v", "0.5",
                       "--k", "1", "--y", "2", "--format", "csv")
    assert code == 0
    rec = reports.loads(out, "csv")[0]
    assert rec["c"] == -1.0 and rec["status"] == "pass"


def test_verify_lavoie_trottier(capsys):
    code, out, _ = run(capsys, "verify", "lavoie-trottier", "--alpha", "2", "--beta", "1")
    rec = json.loads(out)[0]
    assert code == 0 and rec["rhs"] == pytest.approx(8 / 81, rel=1e-15)


GRID = ["--lambda", "0.6", "2", "--rho", "0.5", "--nu", "-0.5", "1.5", "--k", "1", "2",
        "--c", "-1", "1", "--y", "0.5:2:2"]


def test_grid_csv_json_round_trip(tmp_path, capsys):
    out_json, out_csv = tmp_path / "g.json", tmp_path / "g.csv"
    code, summary, _ = run(capsys, "grid", "theorem2", *GRID, "--out", str(out_json))
    assert code == 0 and "cases=32 pass=32 fail=0" in summary
    run(capsys, "grid", "theorem2", *GRID, "--format", "csv", "--out", str(out_csv))
    from_json = reports.loads(out_json.read_text(), "json")
    from_csv = reports.loads(out_csv.read_text(), "csv")
    assert from_json == from_csv


def test_grid_to_stdout_puts_summary_on_stderr(capsys):
    code, out, err = run(capsys, "grid", "theorem1", *GRID[:5], "--nu", "0", "--k", "1", "--c", "1",
                         "--y", "1")
    assert code == 0 and len(json.loads(out)) == 2 and err.startswith("cases=2 ")


def test_single_point_grid_matches_verify(capsys):
    _, grid_out, _ = run(capsys, "grid", "theorem1", "--lambda", "1", "--rho", "1", "--nu", "0.5",
                         "--k", "1", "--c", "1", "--y", "1")
    _, verify_out, _ = run(capsys, "verify", "theorem1", *T1)
    assert json.loads(grid_out) == json.loads(verify_out)


def test_grid_is_deterministic(capsys):
    first = run(capsys, "grid", "theorem1", *GRID, "--format", "csv")[1]
    second = run(capsys, "grid", "theorem1", *GRID, "--format", "csv", "--workers", "3")[1]
    assert first == second


def test_grid_lavoie_trottier(capsys):
    code, out, err = run(capsys, "grid", "lavoie-trottier")
    assert code == 0 and len(json.loads(out)) == 16 and "fail=0" in err


def test_grid_precondition_rows_do_not_fail(capsys):
    code, out, err = run(capsys, "grid", "theorem1", "--lambda", "0.1", "1", "--rho", "1", "--nu", "-0.5",
                         "--k", "1", "--c", "1", "--y", "1")
    assert code == 0 and "precondition=1" in err


def test_grid_io_error(tmp_path, capsys):
    code, _, err = run(capsys, "grid", "lavoie-trottier", "--alpha", "1", "--beta", "1",
                       "--out", str(tmp_path / "missing" / "x.json"))
    assert code == 5 and "cannot write" in err


def test_grid_bad_range(capsys):
    with pytest.raises(SystemExit) as info:
        main(["grid", "theorem1", "--y", "2:1:3"])
    assert info.value.code == 2
