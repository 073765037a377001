"""Naive oracles used by the tests.

Everything here works on coordinate tuples with explicit Python loops
and dictionaries, sharing no index tables or vectorized machinery with
the package.  Slow and obviously literal on purpose.
"""

import cmath
from itertools import product

import numpy as np


def all_tuples(orders):
    return list(product(*(range(n) for n in orders)))


def t_add(orders, a, b):
    return tuple((x + y) % n for x, y, n in zip(a, b, orders))


def t_sub(orders, a, b):
    return tuple((x - y) % n for x, y, n in zip(a, b, orders))


def naive_pairing(orders, x, k):
    """chi_k(x) = exp(2 pi i sum_j k_j x_j / n_j)."""
    angle = sum(kj * xj / nj for xj, kj, nj in zip(x, k, orders))
    return cmath.exp(2j * cmath.pi * angle)


def naive_alg_mul(struct, a, b):
    da = struct.shape[0]
    out = np.zeros(da, dtype=complex)
    for i in range(da):
        for j in range(da):
            for k in range(da):
                out[k] += a[i] * b[j] * struct[i, j, k]
    return out


def as_dict(orders, values):
    """Map (x tuple, c tuple) -> algebra vector, from an (N, N, dA) array."""
    pts = all_tuples(orders)
    out = {}
    for ix, x in enumerate(pts):
        for ic, c in enumerate(pts):
            out[(x, c)] = np.array(values[ix, ic, :])
    return out


def as_array(orders, table, da):
    pts = all_tuples(orders)
    n = len(pts)
    out = np.zeros((n, n, da), dtype=complex)
    for ix, x in enumerate(pts):
        for ic, c in enumerate(pts):
            out[ix, ic, :] = table[(x, c)]
    return out


def naive_twisted_convolve(orders, struct, fd, gd):
    """(f x g)(x, c) = (1/N) sum f(x-x', c-c') g(x', c') chi_{c'}(x-x')."""
    pts = all_tuples(orders)
    n = len(pts)
    da = struct.shape[0]
    out = {}
    for x in pts:
        for c in pts:
            acc = np.zeros(da, dtype=complex)
            for xp in pts:
                for cp in pts:
                    fv = fd[(t_sub(orders, x, xp), t_sub(orders, c, cp))]
                    gv = gd[(xp, cp)]
                    ph = naive_pairing(orders, t_sub(orders, x, xp), cp)
                    acc += naive_alg_mul(struct, fv, gv) * ph
            out[(x, c)] = acc / n
    return out


def naive_translate(orders, side, z, fd):
    """Phase-twisted shift by z = (x0, c0); the phase matches `side`."""
    x0, c0 = z
    out = {}
    for (x, c) in fd:
        xs = t_sub(orders, x, x0)
        cs = t_sub(orders, c, c0)
        if side == "t":
            ph = naive_pairing(orders, xs, c0)
        else:
            ph = naive_pairing(orders, x0, cs)
        out[(x, c)] = fd[(xs, cs)] * ph
    return out


def naive_weyl(orders, fd, da):
    """entries[y, z] = (1/N) sum_c f(z - y, c) chi_c(y)."""
    pts = all_tuples(orders)
    n = len(pts)
    out = np.zeros((n, n, da), dtype=complex)
    for iy, y in enumerate(pts):
        for iz, z in enumerate(pts):
            acc = np.zeros(da, dtype=complex)
            for c in pts:
                acc += fd[(t_sub(orders, z, y), c)] * naive_pairing(orders, y, c)
            out[iy, iz, :] = acc / n
    return out


def naive_module_action(struct, a, w):
    """(a . w)_j = sum_{i,k} a_i c[j, i, k] w_k."""
    da = struct.shape[0]
    out = np.zeros(da, dtype=complex)
    for j in range(da):
        for i in range(da):
            for k in range(da):
                out[j] += a[i] * struct[j, i, k] * w[k]
    return out


def naive_oplus(orders, struct, gd, hd):
    """out(z') = (1/N) sum_z (shifted g)(z) . h(z), t-side shift by z'."""
    pts = all_tuples(orders)
    n = len(pts)
    da = struct.shape[0]
    out = {}
    for xp in pts:
        for cp in pts:
            shifted = naive_translate(orders, "l", (xp, cp), gd)
            acc = np.zeros(da, dtype=complex)
            for x in pts:
                for c in pts:
                    acc += naive_module_action(struct, shifted[(x, c)], hd[(x, c)])
            out[(xp, cp)] = acc / n
    return out


def naive_fourier(orders, values):
    """fhat[k] = sum_x f(x) conj(chi_k(x)), full-weight Haar sum."""
    pts = all_tuples(orders)
    out = np.zeros(len(pts), dtype=complex)
    for ik, k in enumerate(pts):
        for ix, x in enumerate(pts):
            out[ik] += values[ix] * naive_pairing(orders, x, k).conjugate()
    return out
