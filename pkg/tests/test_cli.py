from __future__ import annotations

import csv
import io
import json

import pytest

from topgen.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parabolic_dims_table(capsys):
    code, out, _ = run(capsys, "parabolic-dims", "E8")
    assert code == 0
    assert out.split()[-8:] == ["78", "92", "98", "106", "104", "97", "83", "57"]


def test_minimal_t(capsys):
    code, out, _ = run(capsys, "minimal-t", "G2")
    assert code == 0 and out.split()[-1] == "4"
    code, out, _ = run(capsys, "--format", "json", "minimal-t", "G2")
    assert json.loads(out)["minimal_t"] == 4


def test_torsion_oracle(capsys):
    code, out, _ = run(capsys, "torsion", "F4", "5", "--oracle", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["dim_G_r"] == 40 and data["oracle_dim"] == 40
    assert data["oracle_agreement"] == "yes"


def test_budget_refusal(capsys):
    code, _, err = run(capsys, "torsion", "E8", "7", "--oracle")
    assert code == 3
    assert str(7**8 * 240) in err
    code, _, _ = run(capsys, "torsion", "G2", "5", "--oracle", "--budget", "10")
    assert code == 3


@pytest.mark.parametrize(
    "argv",
    [
        ("roots", "X9"),
        ("kappa", "D4"),
        ("alpha", "E8", "P8", "nonsense", "--char", "0"),
        ("alpha", "E8", "Q3", "u_a", "--char", "0"),
        ("gen-check", "E8", "--classes", "u_a,bogus", "--char", "0"),
        ("catalog", "E8", "--char", "4"),
        ("nonexistent-command",),
        ("torsion", "E8"),
    ],
)
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err


def test_unknown_names_are_listed(capsys):
    _, _, err = run(capsys, "roots", "X9")
    assert "E8" in err and "B2" in err
    _, _, err = run(capsys, "alpha", "E8", "P8", "nonsense", "--char", "0")
    assert "u_a" in err


def test_not_curated(capsys):
    # u_b is a known F4 class at p=2 but no alpha row pairs it with this subgroup
    code, _, err = run(capsys, "alpha", "F4", "B4", "u_b", "--char", "2")
    assert code == 3
    assert "not curated" in err


def test_gen_check_verdicts(capsys):
    code, out, _ = run(capsys, "--format", "json", "gen-check", "E8", "--classes", "u_a,u_a,u_a,u_a", "--char", "0")
    data = json.loads(out)
    assert code == 1 and data["verdict"] == "fail" and data["tightest"] == "P8"
    assert data["tightest_sum"] == "60/19"
    code, out, _ = run(capsys, "gen-check", "E8", "--classes", "u_a,u_a,u_a,u_a,u_a", "--char", "0")
    assert code == 0
    code, out, _ = run(
        capsys, "--format", "json", "gen-check", "E8", "--classes", "u_a,x,u_a,u_a,u_a", "--char", "0", "--allow-uncurated"
    )
    assert json.loads(out)["conservative"] is True


COMMANDS = [
    ("roots", "F4"),
    ("roots", "G2", "--list"),
    ("parabolic-dims", "E7"),
    ("maxrank", "E8"),
    ("maxrank", "F4", "--iterated"),
    ("catalog", "G2", "--char", "3"),
    ("torsion", "E6", "5"),
    ("gamma", "E8", "7", "--char", "0"),
    ("alpha", "E8", "P8", "u_a", "--char", "0"),
    ("kappa", "E7"),
    ("gen-check", "G2", "--classes", "u_a,u_a,u_a,u_a", "--char", "0"),
    ("minimal-t", "E6"),
    ("sharpness", "G2", "--t", "3"),
    ("cor1", "D4", "2", "3"),
    ("perm-char", "2", "3"),
    ("generic-free", "E8", "--dimv", "3875", "--classes", "u_a"),
    ("dump-data",),
]


@pytest.mark.parametrize("argv", COMMANDS)
def test_json_round_trip(capsys, argv):
    code, out, _ = run(capsys, "--format", "json", *argv)
    assert code == 0
    assert json.dumps(json.loads(out), sort_keys=True, indent=2) + "\n" == out


@pytest.mark.parametrize("argv", COMMANDS)
def test_table_and_csv(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out.strip()
    code, out, _ = run(capsys, "--format", "csv", *argv)
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert len(rows) >= 2 and all(len(r) == len(rows[0]) for r in rows)


def test_format_after_subcommand(capsys):
    _, out, _ = run(capsys, "kappa", "E8", "--format", "json")
    assert json.loads(out)["kappa"] == "15/19"


def test_json_is_stable(capsys):
    _, first, _ = run(capsys, "--format", "json", "cor1", "E8", "3", "5")
    _, second, _ = run(capsys, "--format", "json", "cor1", "E8", "3", "5")
    assert first == second


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify-all")
    assert code == 0
    assert out.count("[PASS]") == 12
    assert out.count("citation:") == 12
