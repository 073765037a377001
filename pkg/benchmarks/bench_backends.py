"""Timing comparison of the numpy and numba kernel sets.

Runs each kernel on a grid of group sizes and algebra dimensions,
warming up once (which also triggers jit compilation) before timing.

    python3 benchmarks/bench_backends.py [--repeat 20]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from weyllab import algebra_from_name, make_group
from weyllab.backends import get_backend


def _inputs(orders, algebra_name, seed=0):
    group = make_group(orders)
    algebra = algebra_from_name(algebra_name)
    rng = np.random.default_rng(seed)
    n, da = group.order, algebra.dim
    f = rng.normal(size=(n, n, da)) + 1j * rng.normal(size=(n, n, da))
    g = rng.normal(size=(n, n, da)) + 1j * rng.normal(size=(n, n, da))
    return group, algebra, f, g


def _time(fn, args, repeat):
    fn(*args)  # warmup / compile
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=20)
    args = parser.parse_args()

    backends = {name: get_backend(name) for name in ("numpy", "numba")}
    cases = [((4,), "c"), ((8,), "c"), ((12,), "c"), ((2, 2), "cn:2"), ((6,), "dual")]

    print(f"{'kernel':28s} {'config':16s} {'numpy':>10s} {'numba':>10s} {'speedup':>8s}")
    for orders, alg in cases:
        group, algebra, f, g = _inputs(orders, alg)
        tables = (group.div_table, group.pairing_table, algebra.struct)
        n = group.order
        hmat = f[:, :, 0] + f[:, :, 0].conj().T
        jobs = [
            ("twisted_convolve_t", (f, g) + tables),
            ("twisted_convolve_l", (f, g) + tables),
            ("oplus", (f, g) + tables),
            ("startimes", (f, g) + tables),
            ("weyl_build", (f, group.div_table, group.pairing_table)),
            ("weyl_unbuild", (f, group.mul_table, group.pairing_table)),
            ("convolution_operator_matrix", (f,) + tables),
            ("jacobi_eigvalsh", (hmat,)),
        ]
        label = "Z" + "xZ".join(str(o) for o in orders) + f" {alg}"
        for name, job_args in jobs:
            times = {bk: _time(getattr(mod, name), job_args, args.repeat)
                     for bk, mod in backends.items()}
            ratio = times["numpy"] / times["numba"] if times["numba"] > 0 else float("inf")
            print(f"{name:28s} {label:16s} {times['numpy'] * 1e3:9.3f}m {times['numba'] * 1e3:9.3f}m {ratio:7.1f}x")


if __name__ == "__main__":
    main()
