"""Phase-space functions, twisted translations, and the convolution layer.

Phase space is the product of a finite abelian group with its dual,
carrying weight 1/N per point.  An algebra-valued function on it is
stored as a complex array of shape (N, N, dA): group index, dual index,
algebra coordinate.  Points are (element, character) pairs; any API that
takes a point accepts either the object pair or a pair of indices.

The two basic translation families twist an ordinary shift by a
character phase read off either at the shifted argument ("t") or at the
translation point ("l").  Both are isometries of every weighted p-norm,
and the convolution product defined here interchanges with them.  The
delta at a point, scaled to unit weighted 1-norm, has value N there, and
the delta at the origin point is an exact two-sided convolution unit.
"""

from __future__ import annotations

import math

import numpy as np

from . import backends
from .algebras import AlgebraSpec
from .errors import FormatError, InvalidSpecError, SpecMismatchError
from .groups import Character, GroupElement, GroupSpec, make_group

__all__ = [
    "PhaseFunction",
    "AtomicMeasure",
    "as_point",
    "conjugate_exponent",
    "twisted_translate",
    "twisted_convolve",
    "convolution_identity",
    "delta",
    "pair",
    "oplus",
    "startimes",
    "modulate_translate_dual",
    "measure_convolve",
    "weighted_delta_basis",
    "save_phase",
    "load_phase",
]


def as_point(group: GroupSpec, point):
    """Normalize a phase-space point to an (element index, dual index) pair."""
    x, chi = point
    if isinstance(x, GroupElement):
        if x.group != group:
            raise SpecMismatchError("point element belongs to a different group")
        ix = x.index
    else:
        ix = int(x)
    if isinstance(chi, Character):
        if chi.group != group:
            raise SpecMismatchError("point character belongs to a different group")
        ic = chi.index
    else:
        ic = int(chi)
    n = group.order
    if not (0 <= ix < n and 0 <= ic < n):
        raise InvalidSpecError(f"point index ({ix}, {ic}) out of range for {group!r}")
    return ix, ic


def conjugate_exponent(p) -> float:
    if p == 1:
        return math.inf
    if p == math.inf:
        return 1.0
    p = float(p)
    if p <= 1.0:
        raise InvalidSpecError(f"exponent must be in [1, inf], got {p}")
    return p / (p - 1.0)


class PhaseFunction:
    """An algebra-valued (or dual-valued) function on phase space."""

    __slots__ = ("group", "algebra", "values", "dual")

    def __init__(self, group: GroupSpec, algebra: AlgebraSpec, values, dual=False):
        values = np.asarray(values, dtype=np.complex128)
        n = group.order
        if values.shape != (n, n, algebra.dim):
            raise InvalidSpecError(
                f"values must have shape ({n}, {n}, {algebra.dim}), got {values.shape}"
            )
        self.group = group
        self.algebra = algebra
        self.values = values
        self.dual = bool(dual)

    # -- constructors ----------------------------------------------------

    @classmethod
    def zeros(cls, group, algebra, dual=False):
        n = group.order
        return cls(group, algebra, np.zeros((n, n, algebra.dim), dtype=np.complex128), dual)

    @classmethod
    def random(cls, group, algebra, rng, dual=False):
        n = group.order
        shape = (n, n, algebra.dim)
        vals = (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)
        return cls(group, algebra, vals, dual)

    @classmethod
    def from_flat(cls, group, algebra, flat, dual=False):
        n = group.order
        vals = np.asarray(flat, dtype=np.complex128).reshape(n, n, algebra.dim)
        return cls(group, algebra, vals, dual)

    # -- bookkeeping -----------------------------------------------------

    def _check(self, other, same_dual=True):
        if self.group != other.group:
            raise SpecMismatchError("phase functions over different groups")
        if self.algebra != other.algebra:
            raise SpecMismatchError("phase functions over different algebras")
        if same_dual and self.dual != other.dual:
            raise SpecMismatchError("mixing dual-valued and algebra-valued functions")

    def copy(self):
        return PhaseFunction(self.group, self.algebra, self.values.copy(), self.dual)

    @property
    def flat(self):
        return self.values.reshape(-1)

    def __add__(self, other):
        self._check(other)
        return PhaseFunction(self.group, self.algebra, self.values + other.values, self.dual)

    def __sub__(self, other):
        self._check(other)
        return PhaseFunction(self.group, self.algebra, self.values - other.values, self.dual)

    def __mul__(self, scalar):
        return PhaseFunction(self.group, self.algebra, self.values * scalar, self.dual)

    __rmul__ = __mul__

    def scale_algebra(self, a):
        """Pointwise product with a fixed algebra element on the right."""
        if self.dual:
            raise InvalidSpecError("algebra scaling acts on algebra-valued functions")
        vals = np.einsum("xci,j,ijk->xck", self.values, np.asarray(a), self.algebra.struct)
        return PhaseFunction(self.group, self.algebra, vals, False)

    def at(self, point):
        ix, ic = as_point(self.group, point)
        return self.values[ix, ic].copy()

    # -- norms -----------------------------------------------------------

    def lp_norm(self, p) -> float:
        """Weighted p-norm; the per-point algebra norm honors the dual flag."""
        mags = self.algebra.norm(self.values, dual=self.dual)
        if p == math.inf:
            return float(mags.max())
        p = float(p)
        if p < 1.0:
            raise InvalidSpecError(f"exponent must be in [1, inf], got {p}")
        w = 1.0 / self.group.order
        return float((w * (mags ** p)).sum() ** (1.0 / p))

    def __repr__(self):
        tag = "dual" if self.dual else "alg"
        return f"PhaseFunction({self.group!r}, {self.algebra.label}, {tag})"


# -- distinguished functions ---------------------------------------------


def delta(group: GroupSpec, algebra: AlgebraSpec, point, value=None) -> PhaseFunction:
    """The unit-mass spike at a point: value N * a there, a defaulting to the unit."""
    ix, ic = as_point(group, point)
    f = PhaseFunction.zeros(group, algebra)
    a = algebra.unit if value is None else np.asarray(value, dtype=np.complex128)
    f.values[ix, ic] = group.order * a
    return f


def convolution_identity(group: GroupSpec, algebra: AlgebraSpec) -> PhaseFunction:
    """Two-sided unit of the twisted convolution: the spike at the origin."""
    return delta(group, algebra, (0, 0))


def weighted_delta_basis(group: GroupSpec, algebra: AlgebraSpec):
    """All spikes u_point * e_k, each of weighted 1-norm 1 (sup-type algebras).

    Ordering matches the flat coordinate layout: point-major, algebra
    coordinate fastest.
    """
    out = []
    for ix in range(group.order):
        for ic in range(group.order):
            for k in range(algebra.dim):
                coeff = np.zeros(algebra.dim, dtype=np.complex128)
                coeff[k] = 1.0
                out.append(delta(group, algebra, (ix, ic), coeff))
    return out


# -- translations --------------------------------------------------------


def twisted_translate(side: str, point, f: PhaseFunction) -> PhaseFunction:
    """Translate by a phase-space point with the side's character twist.

    side "t": out(x, c) = f(x - x', c - c') * chi_{c'}(x - x')
    side "l": out(x, c) = f(x - x', c - c') * chi_{c - c'}(x')
    (group written additively here for readability; code is table driven)
    """
    side = side.lower()
    if side not in ("t", "l"):
        raise InvalidSpecError(f"side must be 't' or 'l', got {side!r}")
    g = f.group
    ixp, icp = as_point(g, point)
    xi = g.div_table[:, ixp]
    ci = g.div_table[:, icp]
    vals = f.values[xi][:, ci]
    p = g.pairing_table
    if side == "t":
        phase = p[xi, icp][:, None]
    else:
        phase = p[ixp, ci][None, :]
    return PhaseFunction(g, f.algebra, vals * phase[:, :, None], f.dual)


def modulate_translate_dual(point, h: PhaseFunction) -> PhaseFunction:
    """The dual-side companion of the "t" translation.

    out(x', c') = h(x' + x, c' + c) * chi_c(x'); pairing a "t"-translated
    function against h equals pairing the original against this.
    """
    if not h.dual:
        raise SpecMismatchError("modulate_translate_dual acts on dual-valued functions")
    g = h.group
    ix, ic = as_point(g, point)
    xi = g.mul_table[:, ix]
    ci = g.mul_table[:, ic]
    vals = h.values[xi][:, ci]
    phase = g.pairing_table[:, ic][:, None]
    return PhaseFunction(g, h.algebra, vals * phase[:, :, None], True)


# -- products ------------------------------------------------------------


def twisted_convolve(f: PhaseFunction, g: PhaseFunction, form: str = "t") -> PhaseFunction:
    """Twisted convolution of algebra-valued functions.

    The two forms place the character phase on the translated f factor
    ("t") or on the translation point of the g factor ("l"); they are
    equal and kept as separate code paths on purpose.
    """
    f._check(g)
    if f.dual:
        raise SpecMismatchError("twisted convolution acts on algebra-valued functions")
    grp = f.group
    k = backends.kernels()
    if form == "t":
        vals = k.twisted_convolve_t(
            f.values, g.values, grp.div_table, grp.pairing_table, f.algebra.struct
        )
    elif form == "l":
        vals = k.twisted_convolve_l(
            f.values, g.values, grp.div_table, grp.pairing_table, f.algebra.struct
        )
    else:
        raise InvalidSpecError(f"form must be 't' or 'l', got {form!r}")
    return PhaseFunction(grp, f.algebra, vals, False)


def pair(f: PhaseFunction, h: PhaseFunction) -> complex:
    """Weighted bilinear pairing of an algebra-valued f with a dual-valued h."""
    f._check(h, same_dual=False)
    if f.dual or not h.dual:
        raise SpecMismatchError("pair wants (algebra-valued, dual-valued)")
    return complex(np.sum(f.values * h.values) / f.group.order)


def oplus(g: PhaseFunction, h: PhaseFunction) -> PhaseFunction:
    """Dual-valued product adjoint to the twisted convolution.

    pair(twisted_convolve(f, g), h) == pair(f, oplus(g, h)) for all f;
    the first argument plays the right-factor role of the convolution.
    """
    g._check(h, same_dual=False)
    if g.dual or not h.dual:
        raise SpecMismatchError("oplus wants (algebra-valued, dual-valued)")
    grp = g.group
    k = backends.kernels()
    vals = k.oplus(g.values, h.values, grp.div_table, grp.pairing_table, g.algebra.struct)
    return PhaseFunction(grp, g.algebra, vals, True)


def startimes(nu: PhaseFunction, f: PhaseFunction) -> PhaseFunction:
    """Bidual-side product, computed through the defining adjunction.

    Each output coordinate is read off by pairing nu against oplus of f
    with a dual delta functional; no shortcut through the convolution.
    """
    nu._check(f)
    if nu.dual:
        raise SpecMismatchError("startimes acts on algebra-valued functions")
    grp = nu.group
    k = backends.kernels()
    vals = k.startimes(
        nu.values, f.values, grp.div_table, grp.pairing_table, nu.algebra.struct
    )
    return PhaseFunction(grp, nu.algebra, vals, False)


# -- atomic measures -----------------------------------------------------


class AtomicMeasure:
    """A finite weighted sum of point masses with algebra-valued weights."""

    __slots__ = ("group", "algebra", "atoms")

    def __init__(self, group: GroupSpec, algebra: AlgebraSpec, atoms):
        self.group = group
        self.algebra = algebra
        cleaned = []
        for point, value in atoms:
            ixc = as_point(group, point)
            value = np.asarray(value, dtype=np.complex128)
            if value.shape != (algebra.dim,):
                raise InvalidSpecError("atom weight has wrong algebra dimension")
            cleaned.append((ixc, value))
        self.atoms = cleaned

    @classmethod
    def from_density(cls, f: PhaseFunction) -> "AtomicMeasure":
        """Every phase point becomes an atom with weight (1/N) f(point)."""
        if f.dual:
            raise SpecMismatchError("densities are algebra-valued")
        n = f.group.order
        atoms = []
        for ix in range(n):
            for ic in range(n):
                atoms.append(((ix, ic), f.values[ix, ic] / n))
        return cls(f.group, f.algebra, atoms)

    def to_density(self) -> PhaseFunction:
        """The density acting identically under the weighted pairing."""
        f = PhaseFunction.zeros(self.group, self.algebra)
        n = self.group.order
        for (ix, ic), value in self.atoms:
            f.values[ix, ic] += n * value
        return f

    def total_variation(self) -> float:
        """Sum of algebra norms of the collapsed per-point weights."""
        n = self.group.order
        net = np.zeros((n, n, self.algebra.dim), dtype=np.complex128)
        for (ix, ic), value in self.atoms:
            net[ix, ic] += value
        return float(self.algebra.norm(net).sum())


def measure_convolve(mu: AtomicMeasure, nu: AtomicMeasure) -> AtomicMeasure:
    """Bilinear convolution of atomic measures.

    An atom at (x, c) with weight a against one at (x', c') with weight b
    contributes weight a b chi_{c'}(x) at (x x', c c').
    """
    if mu.group != nu.group or mu.algebra != nu.algebra:
        raise SpecMismatchError("measures over different groups or algebras")
    g = mu.group
    alg = mu.algebra
    atoms = []
    for (x1, c1), a in mu.atoms:
        for (x2, c2), b in nu.atoms:
            point = (int(g.mul_table[x1, x2]), int(g.mul_table[c1, c2]))
            weight = alg.mul(a, b) * g.pairing_table[x1, c2]
            atoms.append((point, weight))
    return AtomicMeasure(g, alg, atoms)


# -- serialization -------------------------------------------------------


def save_phase(f: PhaseFunction, path) -> None:
    """Structured text form; repr() floats give an exact round trip."""
    lines = [
        "weyllab-phase v1",
        "group " + ",".join(str(n) for n in f.group.orders),
        f"algebra {f.algebra.label}",
        f"dim {f.algebra.dim}",
        f"dual {int(f.dual)}",
    ]
    n = f.group.order
    for ix in range(n):
        for ic in range(n):
            for k in range(f.algebra.dim):
                z = f.values[ix, ic, k]
                if z != 0:
                    lines.append(f"v {ix} {ic} {k} {float(z.real)!r} {float(z.imag)!r}")
    lines.append("end")
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")


def load_phase(path, algebra: AlgebraSpec | None = None) -> PhaseFunction:
    """Read a phase function back; the algebra is resolved from its recorded
    label unless one is passed explicitly."""
    from .algebras import algebra_from_name

    with open(path, "r", encoding="ascii") as fh:
        raw = [ln.strip() for ln in fh]
    lines = [ln for ln in raw if ln and not ln.startswith("#")]
    if not lines or lines[0] != "weyllab-phase v1":
        raise FormatError(f"{path}: missing phase header")
    if lines[-1] != "end":
        raise FormatError(f"{path}: missing end line")
    group = None
    label = None
    dim = None
    dual = None
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
            elif parts[0] == "dual":
                dual = bool(int(parts[1]))
            elif parts[0] == "v":
                entries.append(
                    (int(parts[1]), int(parts[2]), int(parts[3]),
                     float(parts[4]) + 1j * float(parts[5]))
                )
            else:
                raise FormatError(f"{path}: unknown record {parts[0]!r}")
        except (IndexError, ValueError) as exc:
            raise FormatError(f"{path}: bad record {ln!r}") from exc
    if group is None or dim is None or dual is None:
        raise FormatError(f"{path}: group, dim and dual records are required")
    if algebra is None:
        if label is None:
            raise FormatError(f"{path}: no algebra label; pass one explicitly")
        algebra = algebra_from_name(label)
    if algebra.dim != dim:
        raise SpecMismatchError(f"{path}: recorded dim {dim} != algebra dim {algebra.dim}")
    f = PhaseFunction.zeros(group, algebra, dual)
    for ix, ic, k, z in entries:
        f.values[ix, ic, k] = z
    return f
