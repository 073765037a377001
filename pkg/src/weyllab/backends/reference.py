"""Pure numpy kernels.

Every function here has a jitted twin in `compiled`; the twins take the
same arguments in the same order and must agree to rounding.  Array
conventions: phase-space values have shape (N, N, dA) with group index,
dual index, algebra coordinate; `div` is the table a * b^-1; `pairing`
the matrix chi_k(x); `struct` the algebra structure constants c[i, j, k]
with (e_i e_j)_k = c[i, j, k].
"""

from __future__ import annotations

import numpy as np

NAME = "numpy"


def twisted_convolve_t(f, g, div, pairing, struct):
    """Twisted convolution, written with the phase on the f factor."""
    n = f.shape[0]
    fa = f[div[:, None, :, None], div[None, :, None, :], :]
    phase = pairing[div]  # phase[x, xp, cp] = pairing[div[x, xp], cp]
    return np.einsum("abxyi,xyj,ijk,axy->abk", fa, g, struct, phase, optimize=True) / n


def twisted_convolve_l(f, g, div, pairing, struct):
    """Same product, written with the phase on the g factor."""
    n = f.shape[0]
    ga = g[div[:, None, :, None], div[None, :, None, :], :]
    phase = pairing[:, div]  # phase[xp, c, cp] = pairing[xp, div[c, cp]]
    return np.einsum("sti,abstj,ijk,sbt->abk", f, ga, struct, phase, optimize=True) / n


def oplus(f, h, div, pairing, struct):
    """Module-valued product against a dual-side function.

    out[a, b, j] = (1/N) sum_{x,c} (shifted f value) acting on h(x, c),
    where the action is the algebra module action in coordinates,
    (v . w)_j = sum_{i,k} v_i c[j, i, k] w_k.
    """
    n = f.shape[0]
    dt = div.T
    fa = f[dt[:, None, :, None], dt[None, :, None, :], :]
    phase = pairing[np.arange(n)[:, None, None], dt[None, :, :]]
    return np.einsum("abxci,jik,xck,abc->abj", fa, struct, h, phase, optimize=True) / n


def startimes(nu, f, div, pairing, struct):
    """Product of a dual-dual element with a function, by adjunction.

    The coordinate r_m(z0) is read off by pairing nu against the dual
    product of f with the delta functional sitting at (z0, m).  This is
    deliberately the defining construction, not a rewrite into the
    twisted convolution; agreement of the two is checked elsewhere.
    """
    n, _, da = f.shape
    out = np.empty_like(np.asarray(nu))
    h = np.zeros((n, n, da), dtype=np.complex128)
    for xa in range(n):
        for ca in range(n):
            for m in range(da):
                h[xa, ca, m] = n
                g = oplus(f, h, div, pairing, struct)
                out[xa, ca, m] = np.sum(nu * g) / n
                h[xa, ca, m] = 0.0
    return out


def weyl_build(f, div, pairing):
    """Operator kernel of a phase-space function.

    entries[y, z, :] = (1/N) sum_c f[z * y^-1, c, :] * pairing[y, c].
    """
    n = f.shape[0]
    fa = f[div.T]  # fa[y, z, c, :] = f[div[z, y], c, :]
    return np.einsum("yzck,yc->yzk", fa, pairing, optimize=True) / n


def weyl_unbuild(entries, mul, pairing):
    """Inverse of weyl_build: f[x, c, :] = sum_y entries[y, x*y, :] conj(pairing[y, c])."""
    n = entries.shape[0]
    ga = entries[np.arange(n)[None, :], mul, :]
    return np.einsum("xyk,yc->xck", ga, pairing.conj(), optimize=True)


def convolution_operator_matrix(nu, div, pairing, struct):
    """Dense matrix of f -> nu x f on flattened coordinates (x, c, k)."""
    n, _, da = nu.shape
    na = nu[div[:, None, :, None], div[None, :, None, :], :]
    phase = pairing[div]
    mat = np.einsum("abxyi,ijk,axy->abkxyj", na, struct, phase, optimize=True) / n
    d = n * n * da
    return np.ascontiguousarray(mat.reshape(d, d))


def jacobi_eigvalsh(h, tol=1e-13, max_sweeps=100):
    """Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations.

    Each off-diagonal entry is first made real by a unimodular column
    scaling, then annihilated by a plane rotation.  Returns eigenvalues
    in ascending order.
    """
    a = np.array(h, dtype=np.complex128)
    n = a.shape[0]
    if n == 1:
        return np.array([a[0, 0].real])
    scale = np.sqrt((np.abs(a) ** 2).sum())
    if scale == 0.0:
        return np.zeros(n)
    for _ in range(max_sweeps):
        off2 = (np.abs(a) ** 2).sum() - (np.abs(np.diagonal(a)) ** 2).sum()
        if off2 <= (tol * scale) ** 2:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                hpq = a[p, q]
                ah = abs(hpq)
                if ah <= 1e-18 * scale:
                    continue
                u = hpq / ah
                app = a[p, p].real
                aqq = a[q, q].real
                tau = (aqq - app) / (2.0 * ah)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                # columns of the combined rotation: V[:, p] = c e_p - s conj(u) e_q,
                # V[:, q] = s e_p + c conj(u) e_q; update a <- V^H a V.
                colp = c * a[:, p] - s * np.conj(u) * a[:, q]
                colq = s * a[:, p] + c * np.conj(u) * a[:, q]
                a[:, p] = colp
                a[:, q] = colq
                rowp = c * a[p, :] - s * u * a[q, :]
                rowq = s * a[p, :] + c * u * a[q, :]
                a[p, :] = rowp
                a[q, :] = rowq
    return np.sort(np.diagonal(a).real)
