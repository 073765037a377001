import numpy as np
import pytest

from weyllab import (
    OperatorOnL1,
    PhaseFunction,
    UnsupportedAlgebraError,
    average_to_multiplier,
    check_convolution_property,
    check_convolution_representation,
    check_lambda_commutation,
    check_m_commutation,
    check_module_map,
    check_startimes_representation,
    check_translation_commutation,
    check_weyl_operator_factorization,
    check_weyl_symbol_factorization,
    conjugation_operator,
    convolution_identity,
    delta,
    dual_numbers,
    from_measure,
    identity_operator,
    load_operator,
    make_group,
    operator_norm_l1_to_lp,
    pointwise_algebra,
    random_operator,
    recover_operator_m,
    recover_symbol,
    save_operator,
    scalar_algebra,
    translation_operator,
    twisted_convolve,
    verify_equivalence_chain,
    weyl,
)
from weyllab.multipliers import DEFAULT_TOL

CONFIGS = [
    ((2,), scalar_algebra()),
    ((3,), scalar_algebra()),
    ((2, 2), pointwise_algebra(2)),
    ((3,), dual_numbers()),
]

ALL_CHECKS = [
    check_translation_commutation,
    check_module_map,
    check_lambda_commutation,
    check_m_commutation,
    check_convolution_property,
    check_convolution_representation,
    check_startimes_representation,
    check_weyl_symbol_factorization,
    check_weyl_operator_factorization,
]


def test_from_measure_applies_left_convolution():
    for orders, algebra in CONFIGS:
        g = make_group(orders)
        rng = np.random.default_rng(61)
        nu = PhaseFunction.random(g, algebra, rng)
        f = PhaseFunction.random(g, algebra, rng)
        t = from_measure(nu)
        np.testing.assert_allclose(
            t.apply(f).values, twisted_convolve(nu, f).values, atol=1e-12
        )


def test_recover_symbol_inverts_from_measure():
    for orders, algebra in CONFIGS:
        g = make_group(orders)
        nu = PhaseFunction.random(g, algebra, np.random.default_rng(62))
        back = recover_symbol(from_measure(nu))
        np.testing.assert_allclose(back.values, nu.values, atol=1e-12)


def test_convolution_operators_pass_every_check():
    for orders, algebra in CONFIGS:
        g = make_group(orders)
        nu = PhaseFunction.random(g, algebra, np.random.default_rng(63))
        t = from_measure(nu)
        for check in ALL_CHECKS:
            passed, defect = check(t, DEFAULT_TOL)
            assert passed, f"{check.__name__} failed on {orders}/{algebra.label}: {defect}"
            assert defect < 1e-10


def test_identity_operator_is_the_unit_multiplier():
    g = make_group((2, 2))
    a = pointwise_algebra(2)
    ident = identity_operator(g, a)
    e = convolution_identity(g, a)
    np.testing.assert_allclose(ident.matrix, from_measure(e).matrix, atol=1e-12)
    np.testing.assert_allclose(recover_symbol(ident).values, e.values, atol=1e-12)
    m = recover_operator_m(ident)
    np.testing.assert_allclose(m.entries, weyl(e).entries, atol=1e-13)


def test_left_translation_operators_are_multipliers():
    """The l-side translation is left convolution by a spike, so it passes."""
    g = make_group((2,))
    a = scalar_algebra()
    for z in [(1, 0), (0, 1), (1, 1)]:
        s = translation_operator("l", g, a, z)
        u = delta(g, a, z)
        np.testing.assert_allclose(s.matrix, from_measure(u).matrix, atol=1e-13)
        for check in ALL_CHECKS:
            assert check(s, DEFAULT_TOL)[0]


def test_right_translation_operator_fails_with_exact_defect():
    """The t-side translation is right convolution by a spike; twisting makes
    it fail both the commutation and the convolution property, and on the
    two-element group the obstruction is the exact sign flip: defect 4."""
    g = make_group((2,))
    a = scalar_algebra()
    s = translation_operator("t", g, a, (1, 0))
    passed, defect = check_translation_commutation(s, DEFAULT_TOL)
    assert not passed
    assert defect == pytest.approx(4.0, abs=1e-12)
    passed, defect = check_convolution_property(s, DEFAULT_TOL)
    assert not passed
    assert defect == pytest.approx(4.0, abs=1e-12)
    # it still respects the algebra module structure
    assert check_module_map(s, DEFAULT_TOL)[0]


def test_conjugation_fails_beyond_translation_commutation():
    """Conjugation commutes with every translation on the two-element group,
    where all phases are real, but the remaining conditions see that it is
    antilinear; the defects are exact small integers."""
    g = make_group((2,))
    a = scalar_algebra()
    c = conjugation_operator(g, a)
    assert c.conjugate_input
    passed, defect = check_translation_commutation(c, DEFAULT_TOL)
    assert passed and defect < 1e-12
    for check, want in [
        (check_module_map, 4.0),
        (check_convolution_property, 4.0),
        (check_convolution_representation, 4.0),
        (check_startimes_representation, 2.0),
        (check_weyl_symbol_factorization, 2.0),
    ]:
        passed, defect = check(c, DEFAULT_TOL)
        assert not passed, check.__name__
        assert defect == pytest.approx(want, abs=1e-12), check.__name__


def test_conjugation_fails_translation_commutation_on_z4():
    g = make_group((4,))
    c = conjugation_operator(g, scalar_algebra())
    passed, defect = check_translation_commutation(c, DEFAULT_TOL)
    assert not passed
    assert defect == pytest.approx(8.0, abs=1e-12)


def test_averaging_projects_onto_multipliers():
    for orders in [(2,), (3,)]:
        g = make_group(orders)
        a = scalar_algebra()
        raw = random_operator(g, a, np.random.default_rng(64))
        proj = average_to_multiplier(raw)
        for check in ALL_CHECKS:
            passed, defect = check(proj, DEFAULT_TOL)
            assert passed, f"{check.__name__}: {defect}"
        # averaged operator is exactly the convolution by its own symbol
        np.testing.assert_allclose(
            proj.matrix, from_measure(recover_symbol(proj)).matrix, atol=1e-12
        )
        # idempotent
        np.testing.assert_allclose(
            average_to_multiplier(proj).matrix, proj.matrix, atol=1e-12
        )


def test_averaging_fixes_multipliers():
    g = make_group((3,))
    a = scalar_algebra()
    nu = PhaseFunction.random(g, a, np.random.default_rng(65))
    t = from_measure(nu)
    np.testing.assert_allclose(average_to_multiplier(t).matrix, t.matrix, atol=1e-12)


def test_averaging_needs_scalar_algebra():
    g = make_group((2,))
    t = identity_operator(g, dual_numbers())
    with pytest.raises(UnsupportedAlgebraError):
        average_to_multiplier(t)


def test_random_dense_operator_fails_checks():
    g = make_group((2,))
    a = scalar_algebra()
    raw = random_operator(g, a, np.random.default_rng(66))
    failures = sum(0 if check(raw, DEFAULT_TOL)[0] else 1 for check in ALL_CHECKS)
    assert failures >= 8  # the scalar module condition alone is vacuous


def test_operator_norm_transfer_bound():
    for orders, algebra in CONFIGS:
        g = make_group(orders)
        rng = np.random.default_rng(67)
        nu = PhaseFunction.random(g, algebra, rng)
        t = from_measure(nu)
        norm = operator_norm_l1_to_lp(t, 1, rng=rng)
        assert norm <= nu.lp_norm(1) + 1e-10


def test_equivalence_chain_is_coherent_both_ways():
    g = make_group((3,))
    a = scalar_algebra()
    rng = np.random.default_rng(68)
    nu = PhaseFunction.random(g, a, rng)
    good = verify_equivalence_chain(from_measure(nu))
    assert good.coherent
    assert all(rec.passed for rec in good.conditions)
    assert good.max_defect < 1e-10
    bad = verify_equivalence_chain(random_operator(g, a, rng))
    assert bad.coherent
    assert not any(rec.passed for rec in bad.conditions)


def test_equivalence_chain_rejects_perturbed_multiplier():
    g = make_group((2,))
    a = scalar_algebra()
    rng = np.random.default_rng(69)
    nu = PhaseFunction.random(g, a, rng)
    base = from_measure(nu)
    for eps in (1e-2, 1e-6):
        noise = random_operator(g, a, rng)
        subject = OperatorOnL1(g, a, base.matrix + eps * noise.matrix)
        rep = verify_equivalence_chain(subject)
        assert rep.coherent
        assert not any(rec.passed for rec in rep.conditions)
        assert rep.max_defect > 10 * DEFAULT_TOL


def test_equivalence_report_renders_one_line_per_condition():
    g = make_group((2,))
    a = scalar_algebra()
    rep = verify_equivalence_chain(identity_operator(g, a))
    lines = rep.render_lines()
    assert len(lines) == len(rep.conditions) + 1
    assert all(line.startswith("check ") for line in lines[:-1])
    assert lines[-1] == "coherent 1"


def test_operator_file_round_trip(tmp_path):
    g = make_group((2,))
    a = scalar_algebra()
    nu = PhaseFunction.random(g, a, np.random.default_rng(70))
    t = from_measure(nu)
    path = tmp_path / "op.txt"
    save_operator(t, path)
    back = load_operator(path, algebra=a)
    assert np.array_equal(back.matrix, t.matrix)
    assert back.conjugate_input is False

    c = conjugation_operator(g, a)
    save_operator(c, path)
    back = load_operator(path, algebra=a)
    assert back.conjugate_input is True
    f = PhaseFunction.random(g, a, np.random.default_rng(71))
    np.testing.assert_allclose(back.apply(f).values, c.apply(f).values, atol=1e-13)


def test_antilinear_and_linear_operators_do_not_mix():
    g = make_group((2,))
    a = scalar_algebra()
    with pytest.raises(Exception):
        identity_operator(g, a) + conjugation_operator(g, a)
