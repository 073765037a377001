"""Finite-dimensional commutative Banach algebras in coordinates.

An algebra is a complex coordinate space C^d with structure constants
c[i, j, k], meaning (e_i e_j)_k = c[i, j, k], a distinguished unit
vector, and a coordinate norm (sup or sum over coordinates).  The
constructor validates commutativity, associativity and the unit law.

The dual space is identified with C^d through the bilinear pairing
<a, f> = sum_i a_i f_i (no conjugation), and the dual norm is the
opposite coordinate norm (sup <-> sum).  The second dual machinery
(module action, its transpose, and the bidual product evaluated on the
dual basis) is written out step by step; in finite dimensions the bidual
product collapses back to the algebra product, and tests pin that down.
"""

from __future__ import annotations

import numpy as np

from .errors import FormatError, InvalidSpecError, SpecMismatchError

__all__ = [
    "AlgebraSpec",
    "AlgebraElement",
    "DualFunctional",
    "scalar_algebra",
    "pointwise_algebra",
    "dual_numbers",
    "algebra_from_name",
    "load_algebra_file",
    "save_algebra_file",
]

_NORM_KINDS = ("sup", "sum")


class AlgebraSpec:
    """A commutative unital algebra on C^dim with a coordinate norm."""

    def __init__(self, struct, norm_kind, unit=None, label=None, check_tol=1e-12):
        struct = np.asarray(struct, dtype=np.complex128)
        if struct.ndim != 3 or len(set(struct.shape)) != 1:
            raise InvalidSpecError(f"structure constants must be (d, d, d), got {struct.shape}")
        self.dim = struct.shape[0]
        self.struct = struct
        if norm_kind not in _NORM_KINDS:
            raise InvalidSpecError(f"norm kind must be one of {_NORM_KINDS}, got {norm_kind!r}")
        self.norm_kind = norm_kind
        self.norm_constant = 1.0
        self.label = label if label is not None else f"custom:{self.dim}"

        comm = np.abs(struct - struct.transpose(1, 0, 2)).max()
        if comm > check_tol:
            raise InvalidSpecError(f"structure constants not commutative (defect {comm:.3e})")
        # associativity: (e_i e_j) e_k == e_i (e_j e_k)
        left = np.einsum("ijm,mkl->ijkl", struct, struct)
        right = np.einsum("jkm,iml->ijkl", struct, struct)
        assoc = np.abs(left - right).max()
        if assoc > check_tol:
            raise InvalidSpecError(f"structure constants not associative (defect {assoc:.3e})")

        if unit is None:
            unit = self._solve_unit(check_tol)
        unit = np.asarray(unit, dtype=np.complex128)
        if unit.shape != (self.dim,):
            raise InvalidSpecError(f"unit must have shape ({self.dim},)")
        eye = np.eye(self.dim)
        law = np.abs(np.einsum("i,ijk->jk", unit, struct) - eye).max()
        if law > check_tol:
            raise InvalidSpecError(f"unit law fails (defect {law:.3e})")
        self.unit = unit

    def _solve_unit(self, check_tol):
        # unit u satisfies sum_i u_i c[i, j, k] = delta_jk for all j, k
        a = self.struct.reshape(self.dim, self.dim * self.dim).T
        b = np.eye(self.dim, dtype=np.complex128).reshape(-1)
        u, *_ = np.linalg.lstsq(a, b, rcond=None)
        if np.abs(a @ u - b).max() > check_tol:
            raise InvalidSpecError("algebra has no unit")
        return u

    # -- arithmetic on raw coordinate arrays -----------------------------

    def mul(self, a, b):
        """Algebra product; operands broadcast over leading axes."""
        return np.einsum("...i,...j,ijk->...k", a, b, self.struct)

    def norm(self, values, dual=False):
        """Coordinate norm over the last axis (dual flips sup <-> sum)."""
        values = np.asarray(values)
        kind = self.norm_kind
        if dual:
            kind = "sum" if kind == "sup" else "sup"
        if kind == "sup":
            return np.abs(values).max(axis=-1)
        return np.abs(values).sum(axis=-1)

    def pair_dual(self, a, f):
        """Bilinear pairing of an algebra vector with a dual vector."""
        return complex(np.einsum("i,i->", np.asarray(a), np.asarray(f)))

    # -- second dual machinery, spelled out ------------------------------

    def module_action(self, a, f):
        """Dual module action: <b, a . f> = <b a, f> for all b."""
        return np.einsum("i,jik,k->j", np.asarray(a), self.struct, np.asarray(f))

    def functional_action(self, f, cap):
        """Transpose action of a bidual vector on a dual vector.

        (f . F)_j = F(e_j . f), evaluated on each basis vector e_j.
        """
        f = np.asarray(f)
        cap = np.asarray(cap)
        out = np.empty(self.dim, dtype=np.complex128)
        for j in range(self.dim):
            ej = np.zeros(self.dim, dtype=np.complex128)
            ej[j] = 1.0
            out[j] = np.einsum("m,m->", cap, self.module_action(ej, f))
        return out

    def bidual_product(self, capf, capg):
        """Product on the second dual: (F G)(f) = G(f . F).

        Read off coordinatewise against the dual basis functionals.
        """
        capf = np.asarray(capf)
        capg = np.asarray(capg)
        out = np.empty(self.dim, dtype=np.complex128)
        for k in range(self.dim):
            fk = np.zeros(self.dim, dtype=np.complex128)
            fk[k] = 1.0
            out[k] = np.einsum("j,j->", capg, self.functional_action(fk, capf))
        return out

    # -- helpers ---------------------------------------------------------

    def basis(self):
        return [np.eye(self.dim, dtype=np.complex128)[i] for i in range(self.dim)]

    def random_element(self, rng):
        re = rng.standard_normal(self.dim)
        im = rng.standard_normal(self.dim)
        return (re + 1j * im) / np.sqrt(2.0)

    def element(self, coords) -> "AlgebraElement":
        return AlgebraElement(self, coords)

    def functional(self, coords) -> "DualFunctional":
        return DualFunctional(self, coords)

    @property
    def cache_key(self):
        return (self.dim, self.norm_kind, self.struct.tobytes(), self.unit.tobytes())

    def __eq__(self, other):
        return isinstance(other, AlgebraSpec) and self.cache_key == other.cache_key

    def __hash__(self):
        return hash(self.cache_key)

    def __repr__(self):
        return f"AlgebraSpec({self.label}, dim={self.dim}, norm={self.norm_kind})"


class AlgebraElement:
    """A vector of algebra coordinates bound to its AlgebraSpec."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: AlgebraSpec, coords):
        coords = np.asarray(coords, dtype=np.complex128)
        if coords.shape != (algebra.dim,):
            raise InvalidSpecError(f"expected {algebra.dim} coordinates")
        self.algebra = algebra
        self.coords = coords

    def _check(self, other):
        if self.algebra != other.algebra:
            raise SpecMismatchError("elements of different algebras")

    def __mul__(self, other):
        self._check(other)
        return AlgebraElement(self.algebra, self.algebra.mul(self.coords, other.coords))

    def __add__(self, other):
        self._check(other)
        return AlgebraElement(self.algebra, self.coords + other.coords)

    def norm(self):
        return float(self.algebra.norm(self.coords))

    def __repr__(self):
        return f"AlgebraElement({self.coords})"


class DualFunctional:
    """A dual vector; calling it pairs bilinearly with an element."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: AlgebraSpec, coords):
        coords = np.asarray(coords, dtype=np.complex128)
        if coords.shape != (algebra.dim,):
            raise InvalidSpecError(f"expected {algebra.dim} coordinates")
        self.algebra = algebra
        self.coords = coords

    def __call__(self, a: AlgebraElement) -> complex:
        if self.algebra != a.algebra:
            raise SpecMismatchError("functional applied to a foreign element")
        return self.algebra.pair_dual(a.coords, self.coords)

    def norm(self):
        return float(self.algebra.norm(self.coords, dual=True))

    def __repr__(self):
        return f"DualFunctional({self.coords})"


# -- presets -------------------------------------------------------------


def scalar_algebra() -> AlgebraSpec:
    """The complex numbers themselves."""
    struct = np.ones((1, 1, 1), dtype=np.complex128)
    return AlgebraSpec(struct, "sup", unit=np.ones(1), label="c")


def pointwise_algebra(n: int) -> AlgebraSpec:
    """C^n with coordinatewise product and sup norm."""
    n = int(n)
    if n < 1:
        raise InvalidSpecError("pointwise algebra needs dimension >= 1")
    struct = np.zeros((n, n, n), dtype=np.complex128)
    for i in range(n):
        struct[i, i, i] = 1.0
    return AlgebraSpec(struct, "sup", unit=np.ones(n), label=f"cn:{n}")


def dual_numbers() -> AlgebraSpec:
    """C[t]/(t^2) with basis (1, t) and sum norm."""
    struct = np.zeros((2, 2, 2), dtype=np.complex128)
    struct[0, 0, 0] = 1.0
    struct[0, 1, 1] = 1.0
    struct[1, 0, 1] = 1.0
    return AlgebraSpec(struct, "sum", unit=np.array([1.0, 0.0]), label="dual")


def algebra_from_name(name: str) -> AlgebraSpec:
    """Resolve an algebra selector: 'c', 'cn:<n>', 'dual', 'file:<path>'."""
    if name == "c":
        return scalar_algebra()
    if name == "dual":
        return dual_numbers()
    if name.startswith("cn:"):
        try:
            n = int(name[3:])
        except ValueError as exc:
            raise InvalidSpecError(f"bad pointwise dimension in {name!r}") from exc
        return pointwise_algebra(n)
    if name.startswith("file:"):
        return load_algebra_file(name[5:])
    raise InvalidSpecError(
        f"unknown algebra {name!r}; use 'c', 'cn:<n>', 'dual' or 'file:<path>'"
    )


# -- file format ---------------------------------------------------------


def save_algebra_file(algebra: AlgebraSpec, path) -> None:
    """Write the structured text form; exact float round trip via repr."""
    lines = ["weyllab-algebra v1", f"dim {algebra.dim}", f"norm {algebra.norm_kind}"]
    lines.append("unit " + " ".join(
        f"{float(z.real)!r} {float(z.imag)!r}" for z in algebra.unit
    ))
    d = algebra.dim
    for i in range(d):
        for j in range(d):
            for k in range(d):
                z = algebra.struct[i, j, k]
                if z != 0:
                    lines.append(f"c {i} {j} {k} {float(z.real)!r} {float(z.imag)!r}")
    lines.append("end")
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")


def load_algebra_file(path) -> AlgebraSpec:
    with open(path, "r", encoding="ascii") as fh:
        raw = [ln.strip() for ln in fh]
    lines = [ln for ln in raw if ln and not ln.startswith("#")]
    if not lines or lines[0] != "weyllab-algebra v1":
        raise FormatError(f"{path}: missing algebra header")
    if lines[-1] != "end":
        raise FormatError(f"{path}: missing end line")
    dim = None
    norm_kind = None
    unit = None
    entries = []
    for ln in lines[1:-1]:
        parts = ln.split()
        try:
            if parts[0] == "dim":
                dim = int(parts[1])
            elif parts[0] == "norm":
                norm_kind = parts[1]
            elif parts[0] == "unit":
                vals = [float(v) for v in parts[1:]]
                unit = np.array(vals[0::2]) + 1j * np.array(vals[1::2])
            elif parts[0] == "c":
                i, j, k = int(parts[1]), int(parts[2]), int(parts[3])
                entries.append((i, j, k, float(parts[4]) + 1j * float(parts[5])))
            else:
                raise FormatError(f"{path}: unknown record {parts[0]!r}")
        except (IndexError, ValueError) as exc:
            raise FormatError(f"{path}: bad record {ln!r}") from exc
    if dim is None or norm_kind is None or unit is None:
        raise FormatError(f"{path}: dim, norm and unit records are required")
    struct = np.zeros((dim, dim, dim), dtype=np.complex128)
    for i, j, k, z in entries:
        if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
            raise FormatError(f"{path}: struct index out of range in ({i},{j},{k})")
        struct[i, j, k] = z
    return AlgebraSpec(struct, norm_kind, unit=unit, label=f"file:{path}")
