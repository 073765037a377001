import numpy as np
import pytest

import weyllab.backends as backends
from weyllab import InvalidSpecError, algebra_from_name, make_group
from weyllab.backends import get_backend

CONFIGS = [((2,), "c"), ((3,), "dual"), ((2, 2), "cn:2"), ((6,), "c")]

PAIR_KERNELS = ["twisted_convolve_t", "twisted_convolve_l", "oplus", "startimes"]


def _inputs(orders, algebra_name, seed):
    group = make_group(orders)
    algebra = algebra_from_name(algebra_name)
    rng = np.random.default_rng(seed)
    n, da = group.order, algebra.dim
    f = rng.normal(size=(n, n, da)) + 1j * rng.normal(size=(n, n, da))
    g = rng.normal(size=(n, n, da)) + 1j * rng.normal(size=(n, n, da))
    return group, algebra, f, g


@pytest.fixture(scope="module")
def both():
    return get_backend("numpy"), get_backend("numba")


@pytest.mark.parametrize("orders,alg", CONFIGS, ids=lambda c: str(c))
def test_pair_kernels_agree(both, orders, alg):
    ref, jit = both
    group, algebra, f, g = _inputs(orders, alg, 81)
    args = (group.div_table, group.pairing_table, algebra.struct)
    for name in PAIR_KERNELS:
        got = getattr(jit, name)(f, g, *args)
        want = getattr(ref, name)(f, g, *args)
        np.testing.assert_allclose(got, want, atol=1e-12, err_msg=name)


@pytest.mark.parametrize("orders,alg", CONFIGS, ids=lambda c: str(c))
def test_weyl_kernels_agree(both, orders, alg):
    ref, jit = both
    group, algebra, f, _ = _inputs(orders, alg, 82)
    want = ref.weyl_build(f, group.div_table, group.pairing_table)
    got = jit.weyl_build(f, group.div_table, group.pairing_table)
    np.testing.assert_allclose(got, want, atol=1e-12)
    back_ref = ref.weyl_unbuild(want, group.mul_table, group.pairing_table)
    back_jit = jit.weyl_unbuild(got, group.mul_table, group.pairing_table)
    np.testing.assert_allclose(back_jit, back_ref, atol=1e-12)
    np.testing.assert_allclose(back_jit, f, atol=1e-12)


@pytest.mark.parametrize("orders,alg", CONFIGS, ids=lambda c: str(c))
def test_operator_matrix_kernel_agrees(both, orders, alg):
    ref, jit = both
    group, algebra, f, _ = _inputs(orders, alg, 83)
    args = (group.div_table, group.pairing_table, algebra.struct)
    np.testing.assert_allclose(
        jit.convolution_operator_matrix(f, *args),
        ref.convolution_operator_matrix(f, *args),
        atol=1e-12,
    )


def test_jacobi_kernels_agree(both):
    ref, jit = both
    rng = np.random.default_rng(84)
    for n in (1, 2, 4, 7):
        m = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
        h = m + m.conj().T
        np.testing.assert_allclose(jit.jacobi_eigvalsh(h), ref.jacobi_eigvalsh(h), atol=1e-11)
    z = np.zeros((3, 3), dtype=complex)
    np.testing.assert_allclose(jit.jacobi_eigvalsh(z), ref.jacobi_eigvalsh(z), atol=0)


def test_backend_names():
    assert get_backend("numpy").NAME == "numpy"
    assert get_backend("numba").NAME == "numba"


def test_set_backend_switches_and_validates():
    previous = backends.backend_name()
    try:
        backends.set_backend("numba")
        assert backends.backend_name() == "numba"
        assert backends.kernels().NAME == "numba"
        backends.set_backend("numpy")
        assert backends.backend_name() == "numpy"
        with pytest.raises(InvalidSpecError):
            backends.set_backend("fortran")
    finally:
        backends.set_backend(previous)


def test_results_identical_through_public_api():
    from weyllab import PhaseFunction, scalar_algebra, twisted_convolve

    g = make_group((3,))
    a = scalar_algebra()
    rng = np.random.default_rng(85)
    f = PhaseFunction.random(g, a, rng)
    h = PhaseFunction.random(g, a, rng)
    previous = backends.backend_name()
    try:
        backends.set_backend("numpy")
        ref = twisted_convolve(f, h).values
        backends.set_backend("numba")
        jit = twisted_convolve(f, h).values
    finally:
        backends.set_backend(previous)
    np.testing.assert_allclose(jit, ref, atol=1e-13)
