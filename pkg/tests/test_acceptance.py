"""Acceptance gate: ten numbered criteria, one verdict line each.

Each test prints `criterion NN <slug>: PASS|FAIL` with capture
suspended so the line always reaches the terminal, then asserts.  Tolerances are pinned inline;
groups stay at order <= 12 and algebras at dimension <= 3 so every
criterion runs on a desk machine in well under a minute.
"""

import numpy as np
import pytest

from weyllab import (
    OperatorOnL1,
    PhaseFunction,
    SuiteConfig,
    check_convolution_property,
    check_convolution_representation,
    check_module_map,
    check_startimes_representation,
    check_translation_commutation,
    check_weyl_symbol_factorization,
    conjugation_operator,
    delta,
    emit_defect_table,
    make_group,
    run_suite,
    scalar_algebra,
    translation_operator,
    twisted_convolve,
)

GROUPS = [(2,), (3,), (4,), (2, 2), (6,)]


def _verdict(capsys, num, slug, ok):
    line = f"criterion {num:02d} {slug}: {'PASS' if ok else 'FAIL'}"
    with capsys.disabled():
        print(line, flush=True)
    assert ok, line


def _suite(name, group, algebra, trials, seed, tol, p=None):
    return run_suite(SuiteConfig(suite=name, group=group, algebra=algebra,
                                 trials=trials, seed=seed, tol=tol, p=p))


def test_criterion_01_plancherel_isometry(capsys):
    ok = True
    for group in GROUPS:
        report = _suite("plancherel", group, "c", 40, 101, 1e-10)
        ok = ok and report.passed  # witness holds the delta extremizer defect
    _verdict(capsys, 1, "plancherel-isometry", ok)


def test_criterion_02_transform_homomorphism(capsys):
    ok = True
    for group in GROUPS:
        for algebra in ("c", "cn:2", "dual"):
            report = _suite("homomorphism", group, algebra, 67, 102, 1e-10)
            ok = ok and report.passed
    _verdict(capsys, 2, "transform-homomorphism", ok)


def test_criterion_03_translation_covariance(capsys):
    ok = True
    for group in GROUPS:
        for algebra in ("c", "dual"):
            report = _suite("covariance", group, algebra, 20, 103, 1e-10)
            ok = ok and report.passed
    _verdict(capsys, 3, "translation-covariance", ok)


def test_criterion_04_norm_inequalities_with_extremizers(capsys):
    ok = True
    for group in GROUPS:
        rl = _suite("riemann-lebesgue", group, "c", 200, 104, 1e-10)
        hy = _suite("hausdorff-young", group, "c", 200, 104, 1e-10,
                    p=(4.0 / 3.0, 1.5, 1.8))
        ok = ok and rl.passed and hy.passed
    _verdict(capsys, 4, "norm-inequalities", ok)


def test_criterion_05_adjunction_and_young(capsys):
    configs = [((2,), "c"), ((3,), "dual"), ((2, 2), "cn:2"), ((6,), "c"), ((2, 3), "c")]
    ok = True
    for group, algebra in configs:
        adj = _suite("adjunction", group, algebra, 50, 105, 1e-10)
        star = _suite("startimes-consistency", group, algebra, 50, 105, 1e-10)
        young = _suite("young-oplus", group, algebra, 50, 105, 1e-10)
        ok = ok and adj.passed and star.passed and young.passed
    _verdict(capsys, 5, "adjunction-and-young", ok)


def test_criterion_06_multiplier_forward(capsys):
    configs = [((2,), "c"), ((3,), "c"), ((2, 2), "c"), ((2,), "cn:2"), ((3,), "dual")]
    ok = True
    for group, algebra in configs:
        report = _suite("multiplier-forward", group, algebra, 100, 106, 1e-9)
        rows = {label: (value, flag) for label, value, flag in report.breakdown}
        symbol_value, symbol_flag = rows["symbol-exactness"]
        ok = ok and report.passed and symbol_flag and symbol_value <= 1e-12
    _verdict(capsys, 6, "multiplier-forward", ok)


def test_criterion_07_multiplier_converse_by_averaging(capsys):
    ok = True
    for group in [(2,), (3,)]:
        report = _suite("multiplier-converse", group, "c", 50, 107, 1e-9)
        ok = ok and report.passed
    _verdict(capsys, 7, "multiplier-converse", ok)


def test_criterion_08_equivalence_chain_coherence(capsys):
    plan = [((2,), "c", 200), ((3,), "c", 100), ((2, 2), "c", 100), ((2,), "cn:2", 100)]
    ok = True
    for group, algebra, trials in plan:
        report = _suite("equivalence-chain", group, algebra, trials, 108, 1e-8)
        # pass means every trial produced a unanimous verdict across conditions
        ok = ok and report.passed
        for label, value, flag in report.breakdown:
            if label.endswith(":multiplier"):
                ok = ok and flag
            else:
                ok = ok and not flag
    _verdict(capsys, 8, "equivalence-chain-coherence", ok)


def test_criterion_09_negative_witnesses_exact(capsys):
    g2 = make_group((2,))
    a = scalar_algebra()
    ok = True

    # order of spikes flips the sign of the twisted product
    u_x, u_c, u_xc = delta(g2, a, (1, 0)), delta(g2, a, (0, 1)), delta(g2, a, (1, 1))
    ok = ok and np.allclose(twisted_convolve(u_x, u_c).values, -u_xc.values, atol=1e-13)
    ok = ok and np.allclose(twisted_convolve(u_c, u_x).values, u_xc.values, atol=1e-13)

    # the t-side translation is no multiplier: exact defect 4 on both checks
    s = translation_operator("t", g2, a, (1, 0))
    for check in (check_translation_commutation, check_convolution_property):
        passed, defect = check(s, 1e-8)
        ok = ok and (not passed) and abs(defect - 4.0) < 1e-12

    # conjugation slips past translation commutation here but nothing else
    c = conjugation_operator(g2, a)
    passed, defect = check_translation_commutation(c, 1e-8)
    ok = ok and passed and defect < 1e-12
    for check, want in [
        (check_module_map, 4.0),
        (check_convolution_property, 4.0),
        (check_convolution_representation, 4.0),
        (check_startimes_representation, 2.0),
        (check_weyl_symbol_factorization, 2.0),
    ]:
        passed, defect = check(c, 1e-8)
        ok = ok and (not passed) and abs(defect - want) < 1e-12
    passed, defect = check_translation_commutation(conjugation_operator(make_group((4,)), a), 1e-8)
    ok = ok and (not passed) and abs(defect - 8.0) < 1e-12
    _verdict(capsys, 9, "negative-witnesses", ok)


def test_criterion_10_deterministic_reports(capsys, tmp_path):
    cfg = SuiteConfig(suite="multiplier-forward", group=(2,), algebra="c",
                      trials=25, seed=110, tol=1e-9)
    first = run_suite(cfg)
    second = run_suite(cfg)
    ok = first.render() == second.render()
    t1, t2 = tmp_path / "a.tsv", tmp_path / "b.tsv"
    emit_defect_table(first, t1)
    emit_defect_table(second, t2)
    ok = ok and t1.read_bytes() == t2.read_bytes()
    ok = ok and len(t1.read_text().splitlines()) == 26
    _verdict(capsys, 10, "deterministic-reports", ok)
