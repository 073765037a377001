"""Jitted kernels; same contracts as the pure numpy set, loop for loop.

Each function mirrors its twin in `reference` with explicit loops under
`numba.njit`.  Twins take identical arguments and agree to rounding;
the parity tests keep them honest.
"""

from __future__ import annotations

import numpy as np
from numba import njit

NAME = "numba"


@njit(cache=True)
def twisted_convolve_t(f, g, div, pairing, struct):
    n = f.shape[0]
    da = struct.shape[0]
    out = np.zeros((n, n, da), dtype=np.complex128)
    for a in range(n):
        for b in range(n):
            for x in range(n):
                fx = div[a, x]
                for y in range(n):
                    ph = pairing[fx, y]
                    fy = div[b, y]
                    for i in range(da):
                        fv = f[fx, fy, i] * ph
                        for j in range(da):
                            gv = g[x, y, j]
                            for k in range(da):
                                out[a, b, k] += fv * gv * struct[i, j, k]
    return out / n


@njit(cache=True)
def twisted_convolve_l(f, g, div, pairing, struct):
    n = f.shape[0]
    da = struct.shape[0]
    out = np.zeros((n, n, da), dtype=np.complex128)
    for a in range(n):
        for b in range(n):
            for s in range(n):
                gx = div[a, s]
                for t in range(n):
                    gc = div[b, t]
                    ph = pairing[s, gc]
                    for i in range(da):
                        fv = f[s, t, i] * ph
                        for j in range(da):
                            gv = g[gx, gc, j]
                            for k in range(da):
                                out[a, b, k] += fv * gv * struct[i, j, k]
    return out / n


@njit(cache=True)
def oplus(f, h, div, pairing, struct):
    n = f.shape[0]
    da = struct.shape[0]
    out = np.zeros((n, n, da), dtype=np.complex128)
    for a in range(n):
        for b in range(n):
            for x in range(n):
                fx = div[x, a]
                for c in range(n):
                    fc = div[c, b]
                    ph = pairing[a, fc]
                    for i in range(da):
                        fv = f[fx, fc, i] * ph
                        for k in range(da):
                            hv = h[x, c, k]
                            for j in range(da):
                                out[a, b, j] += fv * hv * struct[j, i, k]
    return out / n


@njit(cache=True)
def startimes(nu, f, div, pairing, struct):
    n = f.shape[0]
    da = struct.shape[0]
    out = np.zeros((n, n, da), dtype=np.complex128)
    h = np.zeros((n, n, da), dtype=np.complex128)
    for xa in range(n):
        for ca in range(n):
            for m in range(da):
                h[xa, ca, m] = n
                g = oplus(f, h, div, pairing, struct)
                acc = 0.0 + 0.0j
                for x in range(n):
                    for c in range(n):
                        for i in range(da):
                            acc += nu[x, c, i] * g[x, c, i]
                out[xa, ca, m] = acc / n
                h[xa, ca, m] = 0.0
    return out


@njit(cache=True)
def weyl_build(f, div, pairing):
    n = f.shape[0]
    da = f.shape[2]
    out = np.zeros((n, n, da), dtype=np.complex128)
    for y in range(n):
        for z in range(n):
            fx = div[z, y]
            for c in range(n):
                ph = pairing[y, c]
                for k in range(da):
                    out[y, z, k] += f[fx, c, k] * ph
    return out / n


@njit(cache=True)
def weyl_unbuild(entries, mul, pairing):
    n = entries.shape[0]
    da = entries.shape[2]
    out = np.zeros((n, n, da), dtype=np.complex128)
    for x in range(n):
        for c in range(n):
            for y in range(n):
                ph = np.conj(pairing[y, c])
                zz = mul[x, y]
                for k in range(da):
                    out[x, c, k] += entries[y, zz, k] * ph
    return out


@njit(cache=True)
def convolution_operator_matrix(nu, div, pairing, struct):
    n = nu.shape[0]
    da = struct.shape[0]
    d = n * n * da
    out = np.zeros((d, d), dtype=np.complex128)
    for a in range(n):
        for b in range(n):
            for x in range(n):
                nx = div[a, x]
                for y in range(n):
                    ph = pairing[nx, y]
                    ny = div[b, y]
                    for i in range(da):
                        nv = nu[nx, ny, i] * ph
                        for j in range(da):
                            col = (x * n + y) * da + j
                            for k in range(da):
                                row = (a * n + b) * da + k
                                out[row, col] += nv * struct[i, j, k]
    return out / n


@njit(cache=True)
def jacobi_eigvalsh(h, tol=1e-13, max_sweeps=100):
    n = h.shape[0]
    a = np.empty((n, n), dtype=np.complex128)
    for i in range(n):
        for j in range(n):
            a[i, j] = h[i, j]
    out = np.empty(n, dtype=np.float64)
    if n == 1:
        out[0] = a[0, 0].real
        return out
    total = 0.0
    for i in range(n):
        for j in range(n):
            total += abs(a[i, j]) ** 2
    scale = np.sqrt(total)
    if scale == 0.0:
        for i in range(n):
            out[i] = 0.0
        return out
    for _ in range(max_sweeps):
        off2 = 0.0
        for i in range(n):
            for j in range(n):
                if i != j:
                    off2 += abs(a[i, j]) ** 2
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
                uc = np.conj(u)
                for r in range(n):
                    colp = c * a[r, p] - s * uc * a[r, q]
                    colq = s * a[r, p] + c * uc * a[r, q]
                    a[r, p] = colp
                    a[r, q] = colq
                for r in range(n):
                    rowp = c * a[p, r] - s * u * a[q, r]
                    rowq = s * a[p, r] + c * u * a[q, r]
                    a[p, r] = rowp
                    a[q, r] = rowq
    for i in range(n):
        out[i] = a[i, i].real
    return np.sort(out)
