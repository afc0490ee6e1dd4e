# Copyright 2024 Lauricella Matrix Functions.
# License LGPL-3 or later (http://www.gnu.org/licenses/lgpl).

import json
from io import StringIO

from pytest import mark

from lauricella.cli import main

from ..models.validation_batch import run_suite


def test_empty_filter_is_a_vacuous_pass():
    report = run_suite("no-such-entry*", seed=1)
    assert report.entry_count == 0
    assert report.passed
    assert report.failing_ids == []


def test_small_scalar_run():
    report = run_suite("FA.A.*", trials=1, n_max=1, seed=3)
    assert report.entry_count >= 7
    assert report.passed, report.failing_ids
    for record in report.entries:
        assert record.conclusive_trials > 0
        assert record.max_residual < 1e-10
    fixed = {r.id: r for r in report.entries}["FA.A.raise.twostep"]
    assert fixed.trials == 1


def test_report_hash_is_reproducible():
    first = run_suite("FD.B*", trials=2, n_max=1, seed=11)
    second = run_suite("FD.B*", trials=2, n_max=1, seed=11)
    other = run_suite("FD.B*", trials=2, n_max=1, seed=12)
    assert first.body_hash() == second.body_hash()
    assert first.body_hash() != other.body_hash()


def test_report_json_layout():
    payload = run_suite("FC.A.raise.unit", trials=1, n_max=1, seed=5).to_json()
    assert payload["pass"] is True
    assert "passed" not in payload
    assert payload["entries"][0]["pass"] is True
    assert len(payload["sha256"]) == 64
    assert payload["config"]["residual_tol"] == {"1": 1e-10}
    assert {"generated_at", "elapsed_seconds"} <= set(payload)


def test_typo_entries_record_the_printed_residual():
    report = run_suite("F12.A2.raise.*", trials=1, n_max=1, seed=2)
    records = {r.id: r for r in report.entries}
    assert records["F12.A2.raise.unit"].printed_variant_residual > 1e-7
    assert records["F12.A2.raise.unit"].passed


def test_sweep_command(tmp_path):
    out = tmp_path / "report.json"
    code = main(
        ["sweep", "--filter", "FD.B*", "--trials", "1", "--n-max", "1",
         "--seed", "4", "--out", str(out)],
        stdout=StringIO(),
    )
    assert code == 0
    report = json.loads(out.read_text())
    assert report["pass"] is True
    assert report["seed"] == 4


def test_sweep_keeps_the_size_tolerances(tmp_path):
    out = tmp_path / "report.json"
    code = main(
        ["sweep", "--filter", "FD.A.raise.unit", "--trials", "1", "--n-max", "1",
         "--dims", "1,2", "--commute-tol", "1e-9", "--seed", "4", "--out", str(out)],
        stdout=StringIO(),
    )
    config = json.loads(out.read_text())["config"]
    assert code == 0
    assert config["residual_tol"] == {"1": 1e-10, "2": 1e-8}
    assert config["commute_tol"] == 1e-9


def test_explicit_residual_tolerance_applies_to_every_size():
    report = run_suite(
        "FD.A.raise.unit", trials=1, dims=(1, 2), n_max=1, seed=4,
        tol={"residual_tol": 1e-9},
    )
    assert report.config.residual_tol == {"1": 1e-9, "2": 1e-9}


def test_sweep_without_matches(capsys):
    stdout = StringIO()
    code = main(["sweep", "--filter", "zzz*", "--seed", "1"], stdout=stdout)
    assert code == 0
    assert json.loads(stdout.getvalue())["entry_count"] == 0
    assert "0 entries match" in capsys.readouterr().err


def test_sweep_refuses_bad_sizes():
    assert main(["sweep", "--dims", "0"], stdout=StringIO()) == 2
    assert main(["sweep", "--dims", "2,x"], stdout=StringIO()) == 2


@mark.slow
def test_full_scalar_catalog():
    report = run_suite("*", trials=3, n_max=2, seed=20240101)
    assert report.passed, report.failing_ids
    assert not [r.id for r in report.entries if r.inconclusive]


@mark.slow
@mark.parametrize("dim", [2, 3])
def test_full_matrix_catalog(dim):
    report = run_suite("*", trials=3, dims=(dim,), n_max=2, seed=20240101)
    assert report.passed, report.failing_ids
    assert report.config.residual_tol == {str(dim): 1e-8}
