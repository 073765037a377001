"""The Weyl transform: phase-space functions as operator kernels.

The transform sends an algebra-valued phase-space function to an N x N
matrix of algebra elements,

    entries[y, z] = (1/N) sum_c f(z y^-1, c) chi_c(y),

and is a bijection with the closed-form inverse

    f(x, c) = sum_y entries[y, x y] conj(chi_c(y)).

Under the package normalization it is isometric from the weighted
2-norm onto the Hilbert-Schmidt matrices (constant exactly 1), turns
twisted convolution into matrix multiplication, and intertwines the two
twisted translation families with right / left multiplication by the
projective representation `rho`.

Schatten norms go through a hand-rolled cyclic Jacobi eigensolver on
the Gram matrix (scalar algebra only); numpy's eigensolver appears only
in tests as an independent check.
"""

from __future__ import annotations

import math

import numpy as np

from . import backends
from .algebras import AlgebraSpec
from .errors import FormatError, InvalidSpecError, SpecMismatchError, UnsupportedAlgebraError
from .groups import GroupSpec, make_group
from .phase import PhaseFunction, as_point

__all__ = [
    "WeylOperator",
    "rho",
    "weyl",
    "weyl_inverse",
    "singular_values",
    "schatten_norm",
    "save_weyl",
    "load_weyl",
]


class WeylOperator:
    """An N x N matrix with algebra-element entries, shape (N, N, dA)."""

    __slots__ = ("group", "algebra", "entries")

    def __init__(self, group: GroupSpec, algebra: AlgebraSpec, entries):
        entries = np.asarray(entries, dtype=np.complex128)
        n = group.order
        if entries.shape != (n, n, algebra.dim):
            raise InvalidSpecError(
                f"entries must have shape ({n}, {n}, {algebra.dim}), got {entries.shape}"
            )
        self.group = group
        self.algebra = algebra
        self.entries = entries

    def _check(self, other):
        if self.group != other.group or self.algebra != other.algebra:
            raise SpecMismatchError("operators over different groups or algebras")

    @classmethod
    def identity(cls, group, algebra):
        n = group.order
        entries = np.zeros((n, n, algebra.dim), dtype=np.complex128)
        entries[np.arange(n), np.arange(n), :] = algebra.unit
        return cls(group, algebra, entries)

    def __matmul__(self, other) -> "WeylOperator":
        self._check(other)
        prod = np.einsum(
            "ytj,tzk,jkl->yzl", self.entries, other.entries, self.algebra.struct
        )
        return WeylOperator(self.group, self.algebra, prod)

    def __add__(self, other):
        self._check(other)
        return WeylOperator(self.group, self.algebra, self.entries + other.entries)

    def __sub__(self, other):
        self._check(other)
        return WeylOperator(self.group, self.algebra, self.entries - other.entries)

    def __mul__(self, scalar):
        return WeylOperator(self.group, self.algebra, self.entries * scalar)

    __rmul__ = __mul__

    def apply(self, vec):
        """Act on a function on the group, shape (N,) scalar or (N, dA)."""
        vec = np.asarray(vec, dtype=np.complex128)
        n = self.group.order
        bare = vec.shape == (n,)
        if bare:
            if self.algebra.dim != 1:
                raise SpecMismatchError("bare vectors only pair with the scalar algebra")
            vec = vec[:, None]
        if vec.shape != (n, self.algebra.dim):
            raise InvalidSpecError(f"vector must have shape ({n},) or ({n}, dA)")
        out = np.einsum("yzj,zk,jkl->yl", self.entries, vec, self.algebra.struct)
        return out[:, 0] if bare else out

    def scalar_matrix(self) -> np.ndarray:
        if self.algebra.dim != 1:
            raise UnsupportedAlgebraError("only the scalar algebra flattens to a matrix")
        return self.entries[:, :, 0]

    def __repr__(self):
        return f"WeylOperator({self.group!r}, {self.algebra.label})"


def rho(group: GroupSpec, algebra: AlgebraSpec, point) -> WeylOperator:
    """The projective representation at a phase point.

    (rho(x, chi) phi)(y) = chi(y) phi(x y); its matrix has chi(y) * unit
    at row y, column x y.  Composition law:
    rho(z) rho(z') = chi'(x) rho(z z').
    """
    ix, ic = as_point(group, point)
    n = group.order
    entries = np.zeros((n, n, algebra.dim), dtype=np.complex128)
    rows = np.arange(n)
    cols = group.mul_table[ix, :]
    entries[rows, cols, :] = group.pairing_table[rows, ic][:, None] * algebra.unit
    return WeylOperator(group, algebra, entries)


def weyl(f: PhaseFunction) -> WeylOperator:
    """Forward transform of an algebra-valued phase-space function."""
    if f.dual:
        raise SpecMismatchError("the transform acts on algebra-valued functions")
    g = f.group
    k = backends.kernels()
    entries = k.weyl_build(f.values, g.div_table, g.pairing_table)
    return WeylOperator(g, f.algebra, entries)


def weyl_inverse(op: WeylOperator) -> PhaseFunction:
    """Closed-form inverse of the transform."""
    g = op.group
    k = backends.kernels()
    vals = k.weyl_unbuild(op.entries, g.mul_table, g.pairing_table)
    return PhaseFunction(g, op.algebra, vals, dual=False)


def singular_values(op: WeylOperator) -> np.ndarray:
    """Descending singular values, from the Jacobi eigensolver on the Gram matrix."""
    m = op.scalar_matrix()
    k = backends.kernels()
    gram = m.conj().T @ m
    eigs = k.jacobi_eigvalsh(gram)
    return np.sqrt(np.clip(eigs, 0.0, None))[::-1]


def schatten_norm(op: WeylOperator, p) -> float:
    """Schatten p-norm (counting trace, no weight) of a scalar operator."""
    s = singular_values(op)
    if p == math.inf:
        return float(s[0]) if s.size else 0.0
    p = float(p)
    if p < 1.0:
        raise InvalidSpecError(f"exponent must be in [1, inf], got {p}")
    return float((s ** p).sum() ** (1.0 / p))


# -- serialization -------------------------------------------------------


def save_weyl(op: WeylOperator, path) -> None:
    lines = [
        "weyllab-weyl v1",
        "group " + ",".join(str(n) for n in op.group.orders),
        f"algebra {op.algebra.label}",
        f"dim {op.algebra.dim}",
    ]
    n = op.group.order
    for y in range(n):
        for z in range(n):
            for k in range(op.algebra.dim):
                w = op.entries[y, z, k]
                if w != 0:
                    lines.append(f"e {y} {z} {k} {float(w.real)!r} {float(w.imag)!r}")
    lines.append("end")
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")


def load_weyl(path, algebra: AlgebraSpec | None = None) -> WeylOperator:
    from .algebras import algebra_from_name

    with open(path, "r", encoding="ascii") as fh:
        raw = [ln.strip() for ln in fh]
    lines = [ln for ln in raw if ln and not ln.startswith("#")]
    if not lines or lines[0] != "weyllab-weyl v1":
        raise FormatError(f"{path}: missing operator header")
    if lines[-1] != "end":
        raise FormatError(f"{path}: missing end line")
    group = None
    label = None
    dim = None
    entries = []
    for ln in lines[1:-1]:
        parts = ln.split()
        try:
            if parts[0] == "group":
                group = make_group(int(t) for t in parts[1].split(","))
            elif parts[0] == "algebra":
                label = parts[1]
            elif parts[0] == "dim":
                dim = int(parts[1])
            elif parts[0] == "e":
                entries.append(
                    (int(parts[1]), int(parts[2]), int(parts[3]),
                     float(parts[4]) + 1j * float(parts[5]))
                )
            else:
                raise FormatError(f"{path}: unknown record {parts[0]!r}")
        except (IndexError, ValueError) as exc:
            raise FormatError(f"{path}: bad record {ln!r}") from exc
    if group is None or dim is None:
        raise FormatError(f"{path}: group and dim records are required")
    if algebra is None:
        if label is None:
            raise FormatError(f"{path}: no algebra label; pass one explicitly")
        algebra = algebra_from_name(label)
    if algebra.dim != dim:
        raise SpecMismatchError(f"{path}: recorded dim {dim} != algebra dim {algebra.dim}")
    n = group.order
    arr = np.zeros((n, n, dim), dtype=np.complex128)
    for y, z, k, w in entries:
        arr[y, z, k] = w
    return WeylOperator(group, algebra, arr)
