"""Multiplier operators on the twisted convolution algebra.

An operator on the weighted-1-norm function space is a dense complex
matrix acting on flattened coordinates (group index, dual index, algebra
coordinate; algebra fastest), optionally preceded by coordinatewise
conjugation so that the classic antilinear counterexample is
representable.

The module provides the predicate checks that make up the multiplier
characterization: commutation with the twisted translations, the module
property, the two commutation wrappings with algebra multiplications,
the convolution property, representation as (twisted or bidual-side)
convolution against a recovered symbol, and factorization through the
Weyl transform.  `verify_equivalence_chain` runs the whole chain and
reports per-condition defects and verdicts; `average_to_multiplier`
projects a translation-commuting scalar operator onto an exact
convolution operator.

Predicate defects are absolute weighted-1-norm deviations measured over
the spanning family of unit-mass spikes with algebra-basis
coefficients; for a linear operator a zero defect there is a zero
defect everywhere.  Antilinear operators scale oppositely under i, so
for them the probe sets carry i-scaled copies as well.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import backends
from .algebras import AlgebraSpec
from .errors import FormatError, InvalidSpecError, SpecMismatchError, UnsupportedAlgebraError
from .groups import GroupSpec, make_group
from .phase import PhaseFunction, convolution_identity, startimes
from .weyl import WeylOperator, weyl

__all__ = [
    "OperatorOnL1",
    "from_measure",
    "identity_operator",
    "translation_operator",
    "conjugation_operator",
    "random_operator",
    "recover_symbol",
    "recover_operator_m",
    "check_translation_commutation",
    "check_module_map",
    "check_lambda_commutation",
    "check_m_commutation",
    "check_convolution_property",
    "check_convolution_representation",
    "check_startimes_representation",
    "check_weyl_symbol_factorization",
    "check_weyl_operator_factorization",
    "average_to_multiplier",
    "operator_norm_l1_to_lp",
    "ConditionRecord",
    "EquivalenceReport",
    "verify_equivalence_chain",
    "save_operator",
    "load_operator",
]

DEFAULT_TOL = 1e-8


class _Workspace:
    """Cached per-(group, algebra) tables for the predicate checks:
    translation permutations and phases for every phase point and side,
    plus the small matrices of the algebra multiplications."""

    def __init__(self, group: GroupSpec, algebra: AlgebraSpec):
        self.group = group
        self.algebra = algebra
        n = group.order
        da = algebra.dim
        self.dim = n * n * da
        self.points = n * n
        karange = np.arange(da)
        self.src = {}
        self.ph = {}
        for side in ("t", "l"):
            srcs = np.empty((self.points, self.dim), dtype=np.int64)
            phs = np.empty((self.points, self.dim), dtype=np.complex128)
            for ixp in range(n):
                for icp in range(n):
                    xi = group.div_table[:, ixp]
                    ci = group.div_table[:, icp]
                    src = ((xi[:, None] * n + ci[None, :])[:, :, None] * da
                           + karange[None, None, :])
                    if side == "t":
                        phase = np.broadcast_to(
                            group.pairing_table[xi, icp][:, None, None], src.shape
                        )
                    else:
                        phase = np.broadcast_to(
                            group.pairing_table[ixp, ci][None, :, None], src.shape
                        )
                    z = ixp * n + icp
                    srcs[z] = src.reshape(-1)
                    phs[z] = phase.reshape(-1)
            self.src[side] = srcs
            self.ph[side] = phs
        self._norm_shape = (n * n, da)

    def basis_l1_defects(self, err: np.ndarray) -> np.ndarray:
        """err columns are images of the unit-mass spike basis; returns the
        weighted 1-norm of each column (the basis factor N cancels the
        1/N point weight, leaving a plain sum of algebra norms)."""
        n2, da = self._norm_shape
        cols = err.reshape(n2, da, -1).transpose(0, 2, 1)
        return self.algebra.norm(cols, dual=False).sum(axis=0)

    # perm-phase translation algebra, all O(dim^2)

    def left_apply(self, side, z, mat):
        """S_z @ mat."""
        src = self.src[side][z]
        return self.ph[side][z][:, None] * mat[src, :]

    def right_apply(self, side, z, mat):
        """mat @ S_z."""
        src = self.src[side][z]
        out = np.empty_like(mat)
        out[:, src] = mat * self.ph[side][z][None, :]
        return out

    def conjugate_by(self, side, z, mat):
        """S_z^-1 @ mat @ S_z (the translations are unitary)."""
        src = self.src[side][z]
        isrc = np.empty_like(src)
        isrc[src] = np.arange(self.dim)
        w = self.ph[side][z][isrc]
        return np.conj(w)[:, None] * mat[np.ix_(isrc, isrc)] * w[None, :]

    def translation_matrix(self, side, z):
        mat = np.zeros((self.dim, self.dim), dtype=np.complex128)
        mat[np.arange(self.dim), self.src[side][z]] = self.ph[side][z]
        return mat

    def block_of(self, small):
        """Inflate a per-point algebra matrix to the full coordinate space."""
        return np.kron(np.eye(self._norm_shape[0]), small)

    def right_mult_small(self, a):
        """Matrix of v -> v a on algebra coordinates."""
        return np.einsum("j,ijk->ki", np.asarray(a), self.algebra.struct)

    def left_mult_small(self, a):
        """Matrix of v -> a v on algebra coordinates."""
        return np.einsum("i,ijk->kj", np.asarray(a), self.algebra.struct)


_WORKSPACES: dict = {}


def _workspace(group: GroupSpec, algebra: AlgebraSpec) -> _Workspace:
    key = (group.orders, algebra.cache_key)
    ws = _WORKSPACES.get(key)
    if ws is None:
        ws = _Workspace(group, algebra)
        _WORKSPACES[key] = ws
    return ws


# -- the operator type ---------------------------------------------------


class OperatorOnL1:
    """A bounded operator on the weighted-1-norm space, as a dense matrix.

    With conjugate_input set, the operator conjugates the input
    coordinates before the matrix acts; this encodes antilinear maps.
    """

    __slots__ = ("group", "algebra", "matrix", "provenance", "conjugate_input")

    def __init__(self, group, algebra, matrix, provenance="custom", conjugate_input=False):
        matrix = np.asarray(matrix, dtype=np.complex128)
        ws = _workspace(group, algebra)
        if matrix.shape != (ws.dim, ws.dim):
            raise InvalidSpecError(
                f"matrix must be ({ws.dim}, {ws.dim}), got {matrix.shape}"
            )
        self.group = group
        self.algebra = algebra
        self.matrix = matrix
        self.provenance = str(provenance)
        self.conjugate_input = bool(conjugate_input)

    def _check(self, other):
        if self.group != other.group or self.algebra != other.algebra:
            raise SpecMismatchError("operators over different groups or algebras")

    def apply(self, f: PhaseFunction) -> PhaseFunction:
        if f.group != self.group or f.algebra != self.algebra:
            raise SpecMismatchError("operator applied to a foreign function")
        if f.dual:
            raise SpecMismatchError("operator acts on algebra-valued functions")
        x = f.flat
        if self.conjugate_input:
            x = np.conj(x)
        return PhaseFunction.from_flat(self.group, self.algebra, self.matrix @ x)

    def compose_matrix(self, k: np.ndarray) -> np.ndarray:
        """Basis-image matrix of T after the linear coordinate map k.

        The spike basis is real, so an antilinear T sees conj(k) instead.
        """
        if self.conjugate_input:
            return self.matrix @ np.conj(k)
        return self.matrix @ k

    def __add__(self, other):
        self._check(other)
        if self.conjugate_input != other.conjugate_input:
            raise SpecMismatchError("cannot add linear and antilinear operators")
        return OperatorOnL1(
            self.group, self.algebra, self.matrix + other.matrix,
            provenance="sum", conjugate_input=self.conjugate_input,
        )

    def __sub__(self, other):
        self._check(other)
        if self.conjugate_input != other.conjugate_input:
            raise SpecMismatchError("cannot subtract linear and antilinear operators")
        return OperatorOnL1(
            self.group, self.algebra, self.matrix - other.matrix,
            provenance="difference", conjugate_input=self.conjugate_input,
        )

    def __mul__(self, scalar):
        return OperatorOnL1(
            self.group, self.algebra, self.matrix * scalar,
            provenance=self.provenance, conjugate_input=self.conjugate_input,
        )

    __rmul__ = __mul__

    def __repr__(self):
        tag = ", antilinear" if self.conjugate_input else ""
        return f"OperatorOnL1({self.group!r}, {self.algebra.label}, {self.provenance}{tag})"


# -- constructors --------------------------------------------------------


def from_measure(nu: PhaseFunction) -> OperatorOnL1:
    """The operator f -> nu x f (twisted convolution on the left)."""
    if nu.dual:
        raise SpecMismatchError("the symbol must be algebra-valued")
    g = nu.group
    k = backends.kernels()
    mat = k.convolution_operator_matrix(
        nu.values, g.div_table, g.pairing_table, nu.algebra.struct
    )
    return OperatorOnL1(g, nu.algebra, mat, provenance="from-measure")


def right_convolution_matrix(g: PhaseFunction) -> np.ndarray:
    """Matrix of f -> f x g, read directly off the product formula.

    Kept independent of the translation/multiplication factorizations so
    the convolution-property check does not share a code path with the
    commutation checks.
    """
    if g.dual:
        raise SpecMismatchError("the right factor must be algebra-valued")
    grp = g.group
    n = grp.order
    da = g.algebra.dim
    div = grp.div_table
    ga = g.values[div[:, None, :, None], div[None, :, None, :], :]
    ph = grp.pairing_table[:, div]  # ph[s, b, t] = pairing[s, div[b, t]]
    mat = np.einsum("abxyj,ijk,xby->abkxyi", ga, g.algebra.struct, ph, optimize=True) / n
    d = n * n * da
    return np.ascontiguousarray(mat.reshape(d, d))


def identity_operator(group, algebra) -> OperatorOnL1:
    ws = _workspace(group, algebra)
    return OperatorOnL1(group, algebra, np.eye(ws.dim), provenance="identity")


def translation_operator(side, group, algebra, point) -> OperatorOnL1:
    """A twisted translation as a dense operator (a useful non-multiplier)."""
    from .phase import as_point

    ws = _workspace(group, algebra)
    ix, ic = as_point(group, point)
    z = ix * group.order + ic
    mat = ws.translation_matrix(side, z)
    return OperatorOnL1(group, algebra, mat, provenance=f"translation:{side}:{ix},{ic}")


def conjugation_operator(group, algebra) -> OperatorOnL1:
    """Coordinatewise complex conjugation (antilinear; the classic
    candidate that commutes with plain shifts yet is no multiplier)."""
    ws = _workspace(group, algebra)
    return OperatorOnL1(
        group, algebra, np.eye(ws.dim), provenance="conjugation", conjugate_input=True
    )


def random_operator(group, algebra, rng) -> OperatorOnL1:
    ws = _workspace(group, algebra)
    shape = (ws.dim, ws.dim)
    mat = (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)
    return OperatorOnL1(group, algebra, mat, provenance="random")


# -- symbol and operator recovery ----------------------------------------


def recover_symbol(t: OperatorOnL1) -> PhaseFunction:
    """The candidate symbol: the operator applied to the convolution unit."""
    return t.apply(convolution_identity(t.group, t.algebra))


def recover_operator_m(t: OperatorOnL1) -> WeylOperator:
    """The candidate Weyl-side factor: the transform of the symbol."""
    return weyl(recover_symbol(t))


# -- predicate checks ----------------------------------------------------


def check_translation_commutation(t: OperatorOnL1, tol=DEFAULT_TOL):
    """T commutes with every "t"-side twisted translation."""
    ws = _workspace(t.group, t.algebra)
    n = t.group.order
    worst = 0.0
    for z in range(ws.points):
        if t.conjugate_input:
            lhs = t.compose_matrix(ws.translation_matrix("t", z))
        else:
            lhs = ws.right_apply("t", z, t.matrix)
        rhs = ws.left_apply("t", z, t.matrix)
        worst = max(worst, ws.basis_l1_defects(n * (lhs - rhs)).max())
    return worst <= tol, float(worst)


def _algebra_probe_set(t: OperatorOnL1):
    """Algebra elements the bilinear checks quantify over.

    The basis spans everything a C-linear operator can distinguish; an
    antilinear one scales oppositely under i, so its probe set carries
    the i-multiplied copies as well (the real spanning set).
    """
    basis = t.algebra.basis()
    if t.conjugate_input:
        return basis + [1j * a for a in basis]
    return basis


def check_module_map(t: OperatorOnL1, tol=DEFAULT_TOL):
    """T(f a) = T(f) a for every algebra element (probe set suffices)."""
    ws = _workspace(t.group, t.algebra)
    n = t.group.order
    worst = 0.0
    for a in _algebra_probe_set(t):
        big = ws.block_of(ws.right_mult_small(a))
        lhs = t.compose_matrix(big)
        rhs = big @ t.matrix
        worst = max(worst, ws.basis_l1_defects(n * (lhs - rhs)).max())
    return worst <= tol, float(worst)


def _check_mult_translation(t: OperatorOnL1, tol, small_of):
    ws = _workspace(t.group, t.algebra)
    n = t.group.order
    worst = 0.0
    for a in _algebra_probe_set(t):
        big = ws.block_of(small_of(ws, a))
        for z in range(ws.points):
            k = big @ ws.translation_matrix("t", z)
            lhs = t.compose_matrix(k)
            rhs = k @ t.matrix
            worst = max(worst, ws.basis_l1_defects(n * (lhs - rhs)).max())
    return worst <= tol, float(worst)


def check_lambda_commutation(t: OperatorOnL1, tol=DEFAULT_TOL):
    """T commutes with left-multiplication composed with translation."""
    return _check_mult_translation(t, tol, lambda ws, a: ws.left_mult_small(a))


def check_m_commutation(t: OperatorOnL1, tol=DEFAULT_TOL):
    """Same wrapping with the reversed multiplication operator."""
    return _check_mult_translation(t, tol, lambda ws, a: ws.right_mult_small(a))


def check_convolution_property(t: OperatorOnL1, tol=DEFAULT_TOL):
    """T(f x g) = T(f) x g over spike basis pairs.

    The right factor g runs over the spike basis (with i-scaled copies
    for an antilinear T, which scales oppositely in that slot); for each
    g the map f -> f x g is materialized straight from the product
    formula.
    """
    ws = _workspace(t.group, t.algebra)
    n = t.group.order
    da = t.algebra.dim
    scales = (1.0, 1j) if t.conjugate_input else (1.0,)
    worst = 0.0
    spike = PhaseFunction.zeros(t.group, t.algebra)
    for ix in range(n):
        for ic in range(n):
            for kk in range(da):
                for s in scales:
                    spike.values[ix, ic, kk] = s * n
                    k = right_convolution_matrix(spike)
                    lhs = t.compose_matrix(k)
                    rhs = k @ t.matrix
                    worst = max(worst, ws.basis_l1_defects(n * (lhs - rhs)).max())
                    spike.values[ix, ic, kk] = 0.0
    return worst <= tol, float(worst)


def check_convolution_representation(t: OperatorOnL1, tol=DEFAULT_TOL, symbol=None):
    """T equals convolution against its recovered symbol."""
    ws = _workspace(t.group, t.algebra)
    if symbol is None:
        symbol = recover_symbol(t)
    conv = from_measure(symbol)
    worst = ws.basis_l1_defects(t.group.order * (t.matrix - conv.matrix)).max()
    if t.conjugate_input:
        # on i-scaled spikes the antilinear side flips sign
        worst = max(worst, ws.basis_l1_defects(t.group.order * (t.matrix + conv.matrix)).max())
    return worst <= tol, float(worst)


def check_startimes_representation(t: OperatorOnL1, tol=DEFAULT_TOL, symbol=None):
    """T equals the bidual-side product against its recovered symbol,
    with that product computed through its defining adjunction."""
    if symbol is None:
        symbol = recover_symbol(t)
    n = t.group.order
    da = t.algebra.dim
    scales = (1.0, 1j) if t.conjugate_input else (1.0,)
    worst = 0.0
    spike = PhaseFunction.zeros(t.group, t.algebra)
    for ix in range(n):
        for ic in range(n):
            for kk in range(da):
                for s in scales:
                    spike.values[ix, ic, kk] = s * n
                    diff = t.apply(spike) - startimes(symbol, spike)
                    worst = max(worst, float(diff.lp_norm(1)))
                    spike.values[ix, ic, kk] = 0.0
    return worst <= tol, float(worst)


def _weyl_factor_defect(t: OperatorOnL1, rhs_of):
    """max over spike basis f of entrywise |weyl(T f) - rhs_of(f)|."""
    n = t.group.order
    da = t.algebra.dim
    scales = (1.0, 1j) if t.conjugate_input else (1.0,)
    worst = 0.0
    spike = PhaseFunction.zeros(t.group, t.algebra)
    for ix in range(n):
        for ic in range(n):
            for kk in range(da):
                for s in scales:
                    spike.values[ix, ic, kk] = s * n
                    lhs = weyl(t.apply(spike))
                    rhs = rhs_of(spike)
                    worst = max(worst, float(np.abs(lhs.entries - rhs.entries).max()))
                    spike.values[ix, ic, kk] = 0.0
    return worst


def check_weyl_symbol_factorization(t: OperatorOnL1, tol=DEFAULT_TOL, symbol=None):
    """Transform of T f equals transform of the symbol times transform of f."""
    if symbol is None:
        symbol = recover_symbol(t)
    worst = _weyl_factor_defect(t, lambda f: weyl(symbol) @ weyl(f))
    return worst <= tol, float(worst)


def check_weyl_operator_factorization(t: OperatorOnL1, tol=DEFAULT_TOL, m: WeylOperator | None = None):
    """Transform of T f equals a fixed operator times transform of f."""
    if m is None:
        m = recover_operator_m(t)
    worst = _weyl_factor_defect(t, lambda f: m @ weyl(f))
    return worst <= tol, float(worst)


# -- averaging and norms -------------------------------------------------


def average_to_multiplier(t: OperatorOnL1) -> OperatorOnL1:
    """Average conjugations by all twisted translations (scalar algebra).

    The translations are unitary on coordinates, and conjugation by them
    absorbs the projective phases into a true group action; averaging
    projects onto its commutant.  A translation-commuting operator is
    fixed, and every projection commutes, so this lands exactly on the
    convolution operators.
    """
    if t.algebra.dim != 1:
        raise UnsupportedAlgebraError("averaging is defined over the scalar algebra")
    if t.conjugate_input:
        raise UnsupportedAlgebraError("averaging is defined for linear operators")
    ws = _workspace(t.group, t.algebra)
    acc = np.zeros_like(t.matrix)
    for z in range(ws.points):
        acc += ws.conjugate_by("t", z, t.matrix)
    return OperatorOnL1(t.group, t.algebra, acc / ws.points, provenance="averaged")


def operator_norm_l1_to_lp(t: OperatorOnL1, p, rng=None, samples=8) -> float:
    """Extremize over unit-mass spikes with unit-norm algebra coefficients.

    The spikes are the extreme points of the weighted-1-norm unit ball,
    so this is exact for the scalar algebra; for larger algebras the
    coefficient sphere is additionally sampled when an rng is given.
    """
    n = t.group.order
    coeffs = [t.algebra.unit / float(t.algebra.norm(t.algebra.unit))]
    for e in t.algebra.basis():
        coeffs.append(e / float(t.algebra.norm(e)))
    if t.algebra.dim > 1 and rng is not None:
        for _ in range(samples):
            a = t.algebra.random_element(rng)
            coeffs.append(a / float(t.algebra.norm(a)))
    best = 0.0
    probe = PhaseFunction.zeros(t.group, t.algebra)
    for ix in range(n):
        for ic in range(n):
            for a in coeffs:
                probe.values[ix, ic] = n * a
                best = max(best, t.apply(probe).lp_norm(p))
                probe.values[ix, ic] = 0.0
    return float(best)


# -- the equivalence chain -----------------------------------------------


@dataclass
class ConditionRecord:
    cid: str
    label: str
    defect: float
    passed: bool


@dataclass
class EquivalenceReport:
    group_orders: tuple
    algebra_label: str
    tol: float
    p: float
    conditions: list = field(default_factory=list)
    coherent: bool = True
    symbol: PhaseFunction | None = None
    factor: WeylOperator | None = None
    norm_estimate: float = 0.0

    def condition(self, cid: str) -> ConditionRecord:
        for rec in self.conditions:
            if rec.cid == cid:
                return rec
        raise KeyError(cid)

    @property
    def max_defect(self) -> float:
        return max((rec.defect for rec in self.conditions), default=0.0)

    def render_lines(self):
        lines = []
        for rec in self.conditions:
            lines.append(f"check {rec.cid} {rec.defect:.17g} {int(rec.passed)}")
        lines.append(f"coherent {int(self.coherent)}")
        return lines


def verify_equivalence_chain(t: OperatorOnL1, p=2, tol=DEFAULT_TOL, rng=None) -> EquivalenceReport:
    """Run every characterization condition and compare verdicts.

    The defining condition is the pair (translation commutation, module
    property); the chain is coherent when every other condition returns
    the same verdict.
    """
    report = EquivalenceReport(
        group_orders=t.group.orders, algebra_label=t.algebra.label, tol=tol, p=float(p)
    )
    symbol = recover_symbol(t)
    factor = weyl(symbol)
    report.symbol = symbol
    report.factor = factor

    ok_t, d_t = check_translation_commutation(t, tol)
    ok_m, d_m = check_module_map(t, tol)
    report.conditions.append(
        ConditionRecord("definition", "translation commutation and module property",
                        max(d_t, d_m), ok_t and ok_m)
    )
    ok, d = check_lambda_commutation(t, tol)
    report.conditions.append(
        ConditionRecord("mult-left", "commutes with multiplication-then-translation", d, ok)
    )
    ok, d = check_m_commutation(t, tol)
    report.conditions.append(
        ConditionRecord("mult-right", "commutes with reversed multiplication-then-translation", d, ok)
    )
    ok, d = check_convolution_property(t, tol)
    report.conditions.append(
        ConditionRecord("convolution", "respects convolution on the right factor", d, ok)
    )
    ok, d = check_convolution_representation(t, tol, symbol=symbol)
    report.conditions.append(
        ConditionRecord("symbol-conv", "equals convolution by its symbol", d, ok)
    )
    ok, d = check_startimes_representation(t, tol, symbol=symbol)
    report.conditions.append(
        ConditionRecord("symbol-star", "equals the bidual product by its symbol", d, ok)
    )
    ok, d = check_weyl_symbol_factorization(t, tol, symbol=symbol)
    report.conditions.append(
        ConditionRecord("weyl-symbol", "transform factors through the symbol", d, ok)
    )
    ok, d = check_weyl_operator_factorization(t, tol, m=factor)
    report.conditions.append(
        ConditionRecord("weyl-factor", "transform factors through a fixed operator", d, ok)
    )

    verdicts = {rec.passed for rec in report.conditions}
    report.coherent = len(verdicts) == 1
    report.norm_estimate = operator_norm_l1_to_lp(t, p, rng=rng)
    return report


# -- serialization -------------------------------------------------------


def save_operator(t: OperatorOnL1, path) -> None:
    """Row-major structured text; repr() floats for an exact round trip."""
    lines = [
        "weyllab-operator v1",
        "group " + ",".join(str(n) for n in t.group.orders),
        f"algebra {t.algebra.label}",
        f"dim {t.algebra.dim}",
        f"conjugate-input {int(t.conjugate_input)}",
        f"provenance {t.provenance}",
    ]
    for row in t.matrix:
        lines.append("row " + " ".join(f"{float(z.real)!r} {float(z.imag)!r}" for z in row))
    lines.append("end")
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")


def load_operator(path, algebra: AlgebraSpec | None = None) -> OperatorOnL1:
    from .algebras import algebra_from_name

    with open(path, "r", encoding="ascii") as fh:
        raw = [ln.strip() for ln in fh]
    lines = [ln for ln in raw if ln and not ln.startswith("#")]
    if not lines or lines[0] != "weyllab-operator v1":
        raise FormatError(f"{path}: missing operator header")
    if lines[-1] != "end":
        raise FormatError(f"{path}: missing end line")
    group = None
    label = None
    dim = None
    conj = False
    provenance = "loaded"
    rows = []
    for ln in lines[1:-1]:
        parts = ln.split()
        try:
            if parts[0] == "group":
                group = make_group(int(s) for s in parts[1].split(","))
            elif parts[0] == "algebra":
                label = parts[1]
            elif parts[0] == "dim":
                dim = int(parts[1])
            elif parts[0] == "conjugate-input":
                conj = bool(int(parts[1]))
            elif parts[0] == "provenance":
                provenance = " ".join(parts[1:])
            elif parts[0] == "row":
                vals = [float(v) for v in parts[1:]]
                rows.append(np.array(vals[0::2]) + 1j * np.array(vals[1::2]))
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
    mat = np.array(rows, dtype=np.complex128)
    return OperatorOnL1(group, algebra, mat, provenance=provenance, conjugate_input=conj)
