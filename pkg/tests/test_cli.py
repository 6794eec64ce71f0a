import csv
import io
import json

import pytest

from coinv.cli import main

from golden import BIJECTION_TABLES


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_hilbert_text(capsys):
    code, out, _ = run_cli(capsys, "hilbert", "--n", "2", "--variant", "a12", "--format", "text")
    assert code == 0
    assert out.strip() == "q + u + v + 1"


def test_hilbert_json(capsys):
    code, out, _ = run_cli(capsys, "hilbert", "--n", "1", "--format", "json")
    assert code == 0
    assert json.loads(out) == [{"q": 0, "u": 0, "v": 0, "coeff": "1"}]


def test_basis_listing(capsys):
    code, out, _ = run_cli(capsys, "basis", "--n", "2", "--variant", "a12")
    assert code == 0
    assert out.split() == ["1", "x2", "th2", "xi2"]
    code, out, _ = run_cli(capsys, "basis", "--n", "1", "--variant", "b12", "--format", "json")
    assert code == 0
    assert json.loads(out) == [
        {"alpha": [0], "theta": [0], "xi": [0]},
        {"alpha": [1], "theta": [0], "xi": [0]},
        {"alpha": [0], "theta": [1], "xi": [0]},
        {"alpha": [0], "theta": [0], "xi": [1]},
    ]


def test_bijection_csv_matches_tables(capsys):
    for n, rows in BIJECTION_TABLES.items():
        code, out, _ = run_cli(capsys, "bijection", "--n", str(n), "--format", "csv")
        assert code == 0
        reader = csv.reader(io.StringIO(out))
        header = next(reader)
        assert header == ["sigma", "basis_element", "k", "l", "sminv", "split"]
        got = [(r[0], r[1], int(r[2]), int(r[3]), int(r[4]), r[5]) for r in reader]
        assert got == rows


def test_bijection_byte_stable(capsys):
    code, first, _ = run_cli(capsys, "bijection", "--n", "4", "--format", "csv")
    assert code == 0
    code, second, _ = run_cli(capsys, "bijection", "--n", "4", "--format", "csv")
    assert first == second


def test_frobenius_schur_json(capsys):
    code, out, _ = run_cli(capsys, "frobenius", "--n", "2", "--form", "schur", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["n"] == 2
    assert [entry["partition"] for entry in data["coeffs"]] == [[1, 1], [2]]


def test_frobenius_latex_order(capsys):
    code, out, _ = run_cli(capsys, "frobenius", "--n", "3", "--form", "schur", "--format", "latex")
    assert code == 0
    assert out.index("s_{1 1 1}") < out.index("s_{2 1}") < out.index("s_{3}")


def test_hook_table(capsys):
    code, out, _ = run_cli(capsys, "hook", "--n", "3", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["d", "k", "l", "enumeration", "q_binomial_form", "equal"]
    assert all(r[5] == "True" for r in rows[1:])


def test_hmu(capsys):
    code, out, _ = run_cli(capsys, "hmu", "--n", "3", "--mu", "3", "--k", "0", "--l", "0", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[1] == ["0", "0", "1"]


def test_hmu_rejects_bad_mu(capsys):
    code, _, err = run_cli(capsys, "hmu", "--n", "3", "--mu", "2,2")
    assert code == 2
    assert "partition of n" in err


def test_invalid_n(capsys):
    code, _, err = run_cli(capsys, "hilbert", "--n", "0")
    assert code == 2
    assert err


def test_invalid_flag_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["hilbert", "--n", "2", "--variant", "zz"])
    assert exc.value.code == 2


def test_verify_small(capsys):
    code, out, _ = run_cli(capsys, "verify", "--n", "2")
    assert code == 0
    assert "FAIL" not in out
    assert "ok" in out


def test_oracle_cli(capsys):
    code, out, _ = run_cli(capsys, "oracle", "--n", "2", "--variant", "a12", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["complete"] is True
    assert {tuple(d for d in row["degree"]): row["quotient"] for row in data["pieces"]}[(0, 0, 0)] == 1


def test_oracle_long_guard(capsys):
    code, _, err = run_cli(capsys, "oracle", "--n", "4", "--variant", "a12")
    assert code == 2
    assert "--long" in err
