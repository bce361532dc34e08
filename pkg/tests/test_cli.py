import json
import subprocess
import sys

import pytest

from qhankel import suite
from qhankel.cli import build_parser, latex_poly, main
from qhankel.polyring import lift, parse_poly, ratfunc, var

Q, X = var("q"), var("x")


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_hankel_bernoulli_n1(capsys):
    code, out, _ = run_cli(capsys, "hankel", "--family", "bernoulli", "--n", "1")
    assert code == 0
    assert out.strip() == "-1/12"


def test_hankel_q_binom_k2_n1(capsys):
    code, out, _ = run_cli(capsys, "hankel", "--family", "q-binom-k2", "--n", "1")
    assert code == 0
    assert out.strip() == "q - 1"


def test_hankel_matches_closed_form(capsys):
    for family in ("bernoulli", "bernoulli-even-half", "q-binom-k2",
                   "alpha-uv", "pochhammer-u"):
        _, direct, _ = run_cli(capsys, "hankel", "--family", family, "--n", "2")
        _, closed, _ = run_cli(capsys, "closed-form", "--family", family, "--n", "2")
        assert direct == closed, family


def test_json_format(capsys):
    code, out, _ = run_cli(capsys, "hankel", "--family", "bernoulli",
                           "--n", "2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload == {
        "command": "hankel", "family": "bernoulli", "n": 2, "value": "-1/540",
    }


def test_latex_format(capsys):
    code, out, _ = run_cli(capsys, "closed-form", "--family", "bernoulli-odd-half",
                           "--n", "1", "--format", "latex")
    assert code == 0
    assert out.strip() == r"-\frac{1}{48} x^{4} + \frac{1}{48} x^{2}"


def test_latex_poly_rendering():
    assert latex_poly(lift(0)) == "0"
    assert latex_poly(Q ** 2 - 1) == "q^{2} - 1"
    assert latex_poly(var("alpha_3") * X) == r"x \alpha_{3}"
    assert latex_poly(ratfunc(lift(1), Q + 1)) == r"\frac{1}{q + 1}"


def test_table_output_matches_fixture(capsys):
    for which in (1, 2, 3):
        code, out, _ = run_cli(capsys, "table", "--which", str(which))
        assert code == 0
        assert out.splitlines() == suite.fixture_lines(f"table{which}.txt")


def test_table_latex_parses_each_row(capsys):
    code, out, _ = run_cli(capsys, "table", "--which", "1", "--format", "latex")
    assert code == 0
    assert out.startswith(r"\begin{tabular}")
    assert r"\frac{1}{45}" in out


def test_verify_passes(capsys):
    code, out, _ = run_cli(capsys, "verify", "--max-n", "2")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[-1].startswith("passed ")
    assert all(line.startswith("[ok]") for line in lines[:-1])


def test_verify_deterministic(capsys):
    runs = []
    for _ in range(2):
        code, out, _ = run_cli(capsys, "verify", "--seed", "3", "--max-n", "1")
        assert code == 0
        runs.append(out)
    assert runs[0] == runs[1]


def test_verify_seed_changes_draws(capsys):
    _, out_a, _ = run_cli(capsys, "verify", "--seed", "1", "--max-n", "1")
    _, out_b, _ = run_cli(capsys, "verify", "--seed", "2", "--max-n", "1")
    # same identities checked, different random draws reported
    assert len(out_a.splitlines()) == len(out_b.splitlines())
    assert out_a != out_b


def test_verify_json(capsys):
    code, out, _ = run_cli(capsys, "verify", "--max-n", "0", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["failed"] == 0
    assert payload["passed"] == len(payload["reports"])
    assert all(r["ok"] for r in payload["reports"])


def test_verify_corrupted_golden_fails(capsys, monkeypatch):
    real = suite.fixture_lines

    def corrupted(name):
        lines = real(name)
        if name == "table1.txt":
            lines = [line.replace("1/45", "1/44") for line in lines]
        return lines

    monkeypatch.setattr(suite, "fixture_lines", corrupted)
    code, out, _ = run_cli(capsys, "verify", "--max-n", "2")
    assert code == 1
    assert "[FAIL] golden-table-1" in out


def test_verify_timings_flag(capsys):
    code, out, _ = run_cli(capsys, "verify", "--max-n", "0", "--format", "json",
                           "--timings")
    assert code == 0
    payload = json.loads(out)
    assert all("elapsed_ms" in r for r in payload["reports"])
    # and without the flag no timing field is emitted
    code, out, _ = run_cli(capsys, "verify", "--max-n", "0", "--format", "json")
    payload = json.loads(out)
    assert all("elapsed_ms" not in r for r in payload["reports"])


def test_internal_error_exit_code(capsys, monkeypatch):
    def boom(*args, **kwargs):
        raise RuntimeError("induced")

    monkeypatch.setattr("qhankel.cli.run_suite", boom)
    code, _, err = run_cli(capsys, "verify")
    assert code == 2
    assert "internal error" in err


def test_closed_form_without_formula(capsys):
    code, _, err = run_cli(capsys, "closed-form", "--family",
                           "bernoulli-even-center", "--n", "1")
    assert code == 2
    assert "no closed form" in err


def test_negative_n_rejected():
    with pytest.raises(SystemExit) as exc:
        build_parser().parse_args(["hankel", "--family", "bernoulli", "--n", "-1"])
    assert exc.value.code == 2


def test_console_script_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "qhankel.cli", "hankel", "--family",
         "bernoulli", "--n", "1"],
        capture_output=True, text=True, timeout=60,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "-1/12"


def test_table_rows_parse_back():
    for which, lines in ((1, suite.table1_lines()), (2, suite.table2_lines()),
                         (3, suite.table3_lines())):
        for line in lines:
            _, _, rest = line.partition(": ")
            parsed = parse_poly(rest)
            assert str(parsed) == rest
