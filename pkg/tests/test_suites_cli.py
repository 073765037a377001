import math

import numpy as np
import pytest

from weyllab import SuiteConfig, emit_defect_table, registered_suites, run_suite, trial_seed
from weyllab.cli import main

ALL_SUITES = (
    "plancherel",
    "homomorphism",
    "riemann-lebesgue",
    "hausdorff-young",
    "covariance",
    "translation-isometry",
    "convolution-algebra",
    "interchange",
    "adjunction",
    "young-oplus",
    "arens",
    "measure-ideal",
    "multiplier-forward",
    "multiplier-converse",
    "equivalence-chain",
    "startimes-consistency",
)


def test_registry_is_complete():
    assert registered_suites() == ALL_SUITES


def test_trial_seed_mixing_frozen_and_injective():
    assert trial_seed(42, 0) == 13679457532755275413
    seeds = {trial_seed(42, i) for i in range(1000)}
    assert len(seeds) == 1000
    assert trial_seed(0, 0) != trial_seed(1, 0)


@pytest.mark.parametrize("suite", ALL_SUITES)
def test_every_suite_passes_its_smallest_config(suite):
    algebra = "c"
    group = (2,)
    if suite in ("adjunction", "arens", "young-oplus"):
        algebra = "dual"
    report = run_suite(SuiteConfig(suite=suite, group=group, algebra=algebra,
                                   trials=5, seed=11))
    assert report.passed
    assert report.max_defect <= report.tol
    assert len(report.trial_defects) == 5
    assert report.trial_seeds == [trial_seed(11, i) for i in range(5)]


def test_report_is_byte_identical_across_runs():
    cfg = SuiteConfig(suite="covariance", group=(2, 2), algebra="cn:2", trials=7, seed=3)
    r1 = run_suite(cfg).render()
    r2 = run_suite(cfg).render()
    assert r1 == r2


def test_report_field_order_and_formats():
    cfg = SuiteConfig(suite="hausdorff-young", group=(3,), algebra="c", trials=4, seed=2)
    report = run_suite(cfg)
    lines = report.render().splitlines()
    assert lines[0] == "weyllab-report v1"
    assert lines[1] == "suite hausdorff-young"
    assert lines[2] == "group 3"
    assert lines[3] == "algebra c"
    assert lines[4] == "trials 4"
    assert lines[5] == "seed 2"
    assert lines[6].startswith("tol ")
    assert lines[7] == "p 1.3333333333333333,1.5,1.8"
    assert lines[8].startswith("backend ")
    assert lines[9].startswith("version ")
    assert lines[10] == "pass 1"
    assert lines[11].startswith("max_defect ")
    assert lines[12].startswith("mean_defect ")
    assert lines[13].startswith("witness_defect ")
    trial_lines = [ln for ln in lines if ln.startswith("trial ")]
    assert len(trial_lines) == 4
    assert lines[-1] == "end"


def test_duration_is_tracked_but_not_serialized():
    cfg = SuiteConfig(suite="plancherel", group=(2,), trials=3, seed=1)
    report = run_suite(cfg)
    assert report.duration > 0.0
    assert "duration" not in report.render()


def test_pass_flag_matches_tolerance_exactly():
    cfg = SuiteConfig(suite="plancherel", group=(2, 2), trials=5, seed=42, tol=1e-30)
    report = run_suite(cfg)
    assert report.max_defect > 1e-30
    assert not report.passed
    relaxed = run_suite(SuiteConfig(suite="plancherel", group=(2, 2), trials=5,
                                    seed=42, tol=report.max_defect))
    assert relaxed.passed


def test_defect_table_has_header_plus_one_row_per_trial(tmp_path):
    path = tmp_path / "table.tsv"
    report = run_suite(SuiteConfig(suite="plancherel", group=(2, 2), trials=100, seed=42))
    emit_defect_table(report, path)
    lines = path.read_text().splitlines()
    assert len(lines) == 101
    assert lines[0] == "trial\tseed\tdefect\tpass"
    first = lines[1].split("\t")
    assert first[0] == "0"
    assert int(first[1]) == trial_seed(42, 0)
    assert first[3] == "1"


def test_equivalence_chain_breakdown_separates_subject_classes():
    report = run_suite(SuiteConfig(suite="equivalence-chain", group=(2,), trials=8, seed=4))
    labels = {label for label, _, _ in report.breakdown}
    assert "definition:multiplier" in labels
    assert "definition:generic" in labels
    for label, value, flag in report.breakdown:
        if label.endswith(":multiplier"):
            assert flag and value < 1e-10, label
        else:
            assert not flag and value > 1e-7, label


def test_forward_suite_reports_symbol_exactness():
    report = run_suite(SuiteConfig(suite="multiplier-forward", group=(2,), trials=5, seed=6))
    rows = {label: (value, flag) for label, value, flag in report.breakdown}
    assert rows["symbol-exactness"][1]
    assert rows["symbol-exactness"][0] <= 1e-12


def test_run_suite_writes_requested_files(tmp_path):
    out = tmp_path / "report.txt"
    table = tmp_path / "table.tsv"
    cfg = SuiteConfig(suite="adjunction", group=(2,), algebra="dual", trials=6,
                      seed=5, out=str(out), defect_table=str(table))
    report = run_suite(cfg)
    assert out.read_text() == report.render()
    assert len(table.read_text().splitlines()) == 7


def test_invalid_configs_are_rejected():
    from weyllab import InvalidSpecError, UnsupportedAlgebraError

    with pytest.raises(InvalidSpecError):
        run_suite(SuiteConfig(suite="not-a-suite", group=(2,)))
    with pytest.raises(InvalidSpecError):
        run_suite(SuiteConfig(suite="plancherel", group=(2,), trials=0))
    with pytest.raises(InvalidSpecError):
        run_suite(SuiteConfig(suite="plancherel", group=(2,), tol=-1.0))
    with pytest.raises(UnsupportedAlgebraError):
        run_suite(SuiteConfig(suite="plancherel", group=(2,), algebra="dual", trials=1))
    with pytest.raises(InvalidSpecError):
        run_suite(SuiteConfig(suite="hausdorff-young", group=(2,), trials=1, p=(3.0,)))


# -- command line --------------------------------------------------------


def test_cli_pass_run_exits_zero(tmp_path, capsys):
    out = tmp_path / "r.txt"
    code = main([
        "--suite", "plancherel", "--group", "2,2", "--algebra", "c",
        "--trials", "10", "--seed", "42", "--tol", "1e-10", "--out", str(out),
    ])
    captured = capsys.readouterr()
    assert code == 0
    assert "pass 1" in captured.out
    assert out.read_text() == captured.out


def test_cli_failing_suite_exits_one(capsys):
    code = main(["--suite", "plancherel", "--group", "2,2", "--trials", "5",
                 "--seed", "42", "--tol", "1e-30"])
    assert code == 1
    assert "pass 0" in capsys.readouterr().out


def test_cli_config_errors_exit_two(capsys):
    assert main(["--suite", "unheard-of"]) == 2
    err = capsys.readouterr().err
    assert "registered" in err and "plancherel" in err
    assert main(["--suite", "plancherel", "--trials", "0"]) == 2
    assert main(["--suite", "plancherel", "--group", "0"]) == 2
    assert main(["--suite", "plancherel", "--algebra", "cn:zero"]) == 2
    assert main(["--suite", "plancherel", "--out", "/no/such/dir/x.txt"]) == 2


def test_cli_rejects_malformed_flags(capsys):
    assert main(["--suite", "plancherel", "--group", "two"]) == 2
    assert main(["--suite", "plancherel", "--p", "x/y"]) == 2
    assert main([]) == 2  # --suite is required


def test_cli_parses_fractional_exponents(capsys):
    code = main(["--suite", "hausdorff-young", "--group", "2", "--trials", "3",
                 "--seed", "1", "--p", "4/3,3/2"])
    assert code == 0
    assert "p 1.3333333333333333,1.5" in capsys.readouterr().out


def test_cli_env_defaults(monkeypatch, capsys):
    monkeypatch.setenv("WEYLLAB_SEED", "123")
    monkeypatch.setenv("WEYLLAB_TOL", "1e-5")
    code = main(["--suite", "plancherel", "--group", "2", "--trials", "3"])
    out = capsys.readouterr().out
    assert code == 0
    assert "seed 123" in out
    assert "tol 1.0000000000000001e-05" in out
    # explicit flags still win
    code = main(["--suite", "plancherel", "--group", "2", "--trials", "3",
                 "--seed", "9", "--tol", "1e-10"])
    out = capsys.readouterr().out
    assert "seed 9" in out and "tol 1e-10" in out
    monkeypatch.setenv("WEYLLAB_SEED", "not-an-int")
    assert main(["--suite", "plancherel", "--group", "2", "--trials", "3"]) == 2


def test_cli_defect_table_matches_contract(tmp_path):
    table = tmp_path / "t.tsv"
    code = main(["--suite", "plancherel", "--group", "2,2", "--trials", "100",
                 "--seed", "42", "--defect-table", str(table)])
    assert code == 0
    assert len(table.read_text().splitlines()) == 101
