"""Randomized verification suites with deterministic, byte-stable reports.

Every suite draws its inputs from per-trial generators seeded by a fixed
mixing function of (master seed, trial index), so scheduling cannot
perturb results and a rerun with the same configuration reproduces the
report byte for byte.  Wall-clock duration is kept on the report object
for console display but stays out of the serialized bytes.

Defect conventions: equalities of arrays or operators report the max
entrywise deviation divided by the larger max entry magnitude (0 when
both vanish); inequalities report the positive violation relative to
the bound; scalar identities report |lhs - rhs| / max(1, |lhs|, |rhs|);
the multiplier suites inherit the absolute weighted-1-norm predicate
defects.  A suite passes iff its overall max defect (trials and witness
together) is within tolerance.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import numpy as np

from . import backends
from .algebras import algebra_from_name
from .errors import InvalidSpecError, UnsupportedAlgebraError
from .groups import make_group
from .multipliers import (
    OperatorOnL1,
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
    from_measure,
    identity_operator,
    random_operator,
    recover_symbol,
    verify_equivalence_chain,
)
from .phase import (
    AtomicMeasure,
    PhaseFunction,
    conjugate_exponent,
    convolution_identity,
    delta,
    measure_convolve,
    modulate_translate_dual,
    oplus,
    pair,
    startimes,
    twisted_convolve,
    twisted_translate,
)
from .weyl import WeylOperator, rho, schatten_norm, weyl

__version__ = "0.1.0"

__all__ = [
    "SuiteConfig",
    "SuiteReport",
    "run_suite",
    "emit_defect_table",
    "registered_suites",
    "trial_seed",
]

_MASK64 = (1 << 64) - 1


def trial_seed(master: int, index: int) -> int:
    """Mix (master seed, trial index) into an independent 64-bit seed."""
    x = (int(master) + 0x9E3779B97F4A7C15 * (int(index) + 1)) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return (x ^ (x >> 31)) & _MASK64


_WITNESS_INDEX = 1 << 62  # reserved stream, far from any trial index


def _rng(seed: int):
    return np.random.Generator(np.random.PCG64(seed))


def _fmt(x) -> str:
    if x == math.inf:
        return "inf"
    return format(float(x), ".17g")


def _rel_entry(a, b) -> float:
    """Max entrywise deviation relative to the larger side (0 if both 0)."""
    a = np.asarray(a)
    b = np.asarray(b)
    scale = max(np.abs(a).max(initial=0.0), np.abs(b).max(initial=0.0))
    if scale == 0.0:
        return 0.0
    return float(np.abs(a - b).max() / scale)


def _abs_entry(a, b) -> float:
    return float(np.abs(np.asarray(a) - np.asarray(b)).max())


def _rel_scalar(lhs, rhs) -> float:
    return float(abs(lhs - rhs) / max(1.0, abs(lhs), abs(rhs)))


def _violation(lhs, bound) -> float:
    """Positive violation of lhs <= bound, relative when the bound is sizable."""
    v = lhs - bound
    if v <= 0.0:
        return 0.0
    return float(v / max(bound, 1.0))


# -- configuration and report --------------------------------------------


@dataclass(frozen=True)
class SuiteConfig:
    suite: str
    group: tuple = (2,)
    algebra: str = "c"
    trials: int = 100
    seed: int = 0
    tol: float | None = None
    p: tuple | None = None
    out: str | None = None
    defect_table: str | None = None


@dataclass
class SuiteReport:
    suite: str
    group_orders: tuple
    algebra_label: str
    trials: int
    seed: int
    tol: float
    p_values: tuple | None
    backend: str
    version: str
    trial_seeds: list = field(default_factory=list)
    trial_defects: list = field(default_factory=list)
    witness_defect: float = 0.0
    breakdown: list = field(default_factory=list)
    duration: float = 0.0

    @property
    def max_defect(self) -> float:
        worst = max(self.trial_defects, default=0.0)
        return max(worst, self.witness_defect)

    @property
    def mean_defect(self) -> float:
        if not self.trial_defects:
            return 0.0
        return sum(self.trial_defects) / len(self.trial_defects)

    @property
    def passed(self) -> bool:
        return self.max_defect <= self.tol

    def render(self) -> str:
        """Serialized report; fixed field order, 17 significant digits,
        byte-identical across reruns (duration deliberately excluded)."""
        lines = [
            "weyllab-report v1",
            f"suite {self.suite}",
            "group " + ",".join(str(n) for n in self.group_orders),
            f"algebra {self.algebra_label}",
            f"trials {self.trials}",
            f"seed {self.seed}",
            f"tol {_fmt(self.tol)}",
            "p " + (",".join(_fmt(v) for v in self.p_values) if self.p_values else "-"),
            f"backend {self.backend}",
            f"version {self.version}",
            f"pass {int(self.passed)}",
            f"max_defect {_fmt(self.max_defect)}",
            f"mean_defect {_fmt(self.mean_defect)}",
            f"witness_defect {_fmt(self.witness_defect)}",
        ]
        for label, value, flag in self.breakdown:
            lines.append(f"check {label} {_fmt(value)} {int(flag)}")
        for i, (s, d) in enumerate(zip(self.trial_seeds, self.trial_defects)):
            lines.append(f"trial {i} {s} {_fmt(d)} {int(d <= self.tol)}")
        lines.append("end")
        return "\n".join(lines) + "\n"


def emit_defect_table(report: SuiteReport, path) -> None:
    """Tab-separated per-trial table: index, derived seed, defect, pass."""
    lines = ["trial\tseed\tdefect\tpass"]
    for i, (s, d) in enumerate(zip(report.trial_seeds, report.trial_defects)):
        lines.append(f"{i}\t{s}\t{_fmt(d)}\t{int(d <= report.tol)}")
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")


# -- shared helpers ------------------------------------------------------


def _require_scalar(suite, algebra):
    if algebra.dim != 1:
        raise UnsupportedAlgebraError(f"suite {suite!r} needs the scalar algebra 'c'")


def _all_points(group):
    n = group.order
    return [(ix, ic) for ix in range(n) for ic in range(n)]


def _some_points(group, limit=4):
    return _all_points(group)[: min(limit, group.order * group.order)]


# -- suite runners -------------------------------------------------------
# Each runner returns (trial_defects, witness_defect, breakdown, p_values).


def _suite_plancherel(group, algebra, cfg, tol):
    _require_scalar(cfg.suite, algebra)
    defects = []
    for t in range(cfg.trials):
        rng = _rng(trial_seed(cfg.seed, t))
        f = PhaseFunction.random(group, algebra, rng)
        lhs = schatten_norm(weyl(f), 2)
        rhs = f.lp_norm(2)
        defects.append(abs(lhs - rhs) / rhs)
    root = math.sqrt(group.order)
    witness = 0.0
    for z in _all_points(group):
        u = delta(group, algebra, z)
        witness = max(witness, abs(schatten_norm(weyl(u), 2) - root) / root)
        witness = max(witness, abs(u.lp_norm(2) - root) / root)
    return defects, witness, [], (2.0,)


def _suite_homomorphism(group, algebra, cfg, tol):
    defects = []
    for t in range(cfg.trials):
        rng = _rng(trial_seed(cfg.seed, t))
        f = PhaseFunction.random(group, algebra, rng)
        g = PhaseFunction.random(group, algebra, rng)
        lhs = weyl(twisted_convolve(f, g))
        rhs = weyl(f) @ weyl(g)
        defects.append(_abs_entry(lhs.entries, rhs.entries))
    e = convolution_identity(group, algebra)
    witness = _abs_entry(weyl(e).entries, WeylOperator.identity(group, algebra).entries)
    for z1 in _all_points(group):
        for z2 in _some_points(group):
            u1, u2 = delta(group, algebra, z1), delta(group, algebra, z2)
            lhs = weyl(twisted_convolve(u1, u2))
            rhs = weyl(u1) @ weyl(u2)
            witness = max(witness, _abs_entry(lhs.entries, rhs.entries))
    return defects, witness, [], None


def _suite_riemann_lebesgue(group, algebra, cfg, tol):
    _require_scalar(cfg.suite, algebra)
    defects = []
    for t in range(cfg.trials):
        rng = _rng(trial_seed(cfg.seed, t))
        f = PhaseFunction.random(group, algebra, rng)
        defects.append(_violation(schatten_norm(weyl(f), math.inf), f.lp_norm(1)))
    witness = 0.0
    for z in _all_points(group):
        u = delta(group, algebra, z)
        witness = max(witness, abs(schatten_norm(weyl(u), math.inf) - 1.0))
        witness = max(witness, abs(u.lp_norm(1) - 1.0))
    return defects, witness, [], None


def _suite_hausdorff_young(group, algebra, cfg, tol):
    _require_scalar(cfg.suite, algebra)
    ps = cfg.p if cfg.p else (4.0 / 3.0, 1.5, 1.8)
    for p in ps:
        if not 1.0 <= p < math.inf or conjugate_exponent(p) < 2.0 - 1e-12:
            raise InvalidSpecError(
                f"suite {cfg.suite!r} wants p in [1, 2] (conjugate >= 2), got {p}"
            )
    defects = []
    for t in range(cfg.trials):
        rng = _rng(trial_seed(cfg.seed, t))
        f = PhaseFunction.random(group, algebra, rng)
        w = weyl(f)
        d = 0.0
        for p in ps:
            d = max(d, _violation(schatten_norm(w, conjugate_exponent(p)), f.lp_norm(p)))
        defects.append(d)
    witness = 0.0
    for z in _all_points(group):
        u = delta(group, algebra, z)
        wu = weyl(u)
        for p in ps:
            q = conjugate_exponent(p)
            target = group.order ** (1.0 / q)
            witness = max(witness, abs(schatten_norm(wu, q) - target) / target)
            witness = max(witness, abs(u.lp_norm(p) - target) / target)
    return defects, witness, [], tuple(ps)


def _suite_covariance(group, algebra, cfg, tol):
    points = _all_points(group)
    rhos = {z: rho(group, algebra, z) for z in points}
    defects = []
    for t in range(cfg.trials):
        rng = _rng(trial_seed(cfg.seed, t))
        f = PhaseFunction.random(group, algebra, rng)
        w = weyl(f)
        d = 0.0
        for z in points:
            d = max(d, _abs_entry(weyl(twisted_translate("t", z, f)).entries,
                                  (w @ rhos[z]).entries))
            d = max(d, _abs_entry(weyl(twisted_translate("l", z, f)).entries,
                                  (rhos[z] @ w).entries))
        defects.append(d)
    witness = 0.0
    for z in points:
        witness = max(witness, _abs_entry(weyl(delta(group, algebra, z)).entries,
                                          rhos[z].entries))
    return defects, witness, [], None


def _suite_translation_isometry(group, algebra, cfg, tol):
    ps = cfg.p if cfg.p else (1.0, 1.5, 2.0, math.inf)
    defects = []
    n = group.order
    for t in range(cfg.trials):
        rng = _rng(trial_seed(cfg.seed, t))
        f = PhaseFunction.random(group, algebra, rng)
        z = (int(rng.integers(n)), int(rng.integers(n)))
        d = 0.0
        for side in ("t", "l"):
            tf = twisted_translate(side, z, f)
            for p in ps:
                ref = f.lp_norm(p)
                d = max(d, abs(tf.lp_norm(p) - ref) / max(ref, 1.0))
        defects.append(d)
    witness = 0.0
    e = convolution_identity(group, algebra)
    for z in _all_points(group):
        witness = max(witness, abs(twisted_translate("t", z, e).lp_norm(1) - 1.0))
    return defects, witness, [], tuple(ps)


def _suite_convolution_algebra(group, algebra, cfg, tol):
    defects = []
    for t in range(cfg.trials):
        rng = _rng(trial_seed(cfg.seed, t))
        f = PhaseFunction.random(group, algebra, rng)
        g = PhaseFunction.random(group, algebra, rng)
        k = PhaseFunction.random(group, algebra, rng)
        fg = twisted_convolve(f, g)
        d = _violation(fg.lp_norm(1), f.lp_norm(1) * g.lp_norm(1))
        d = max(d, _rel_entry(twisted_convolve(fg, k).values,
                              twisted_convolve(f, twisted_convolve(g, k)).values))
        d = max(d, _rel_entry(fg.values, twisted_convolve(f, g, form="l").values))
        e = convolution_identity(group, algebra)
        d = max(d, _rel_entry(twisted_convolve(e, f).values, f.values))
        d = max(d, _rel_entry(twisted_convolve(f, e).values, f.values))
        defects.append(d)
    witness = 0.0
    for z1 in _all_points(group):
        for z2 in _some_points(group):
            u1, u2 = delta(group, algebra, z1), delta(group, algebra, z2)
            zc = (int(group.mul_table[z1[0], z2[0]]), int(group.mul_table[z1[1], z2[1]]))
            expect = delta(group, algebra, zc) * group.pairing_table[z1[0], z2[1]]
            witness = max(witness, _rel_entry(twisted_convolve(u1, u2).values, expect.values))
    return defects, witness, [], None


def _suite_interchange(group, algebra, cfg, tol):
    points = _all_points(group)
    defects = []
    for t in range(cfg.trials):
        rng = _rng(trial_seed(cfg.seed, t))
        f = PhaseFunction.random(group, algebra, rng)
        g = PhaseFunction.random(group, algebra, rng)
        fg = twisted_convolve(f, g)
        d = 0.0
        for z in points:
            d = max(d, _rel_entry(twisted_translate("t", z, fg).values,
                                  twisted_convolve(f, twisted_translate("t", z, g)).values))
            d = max(d, _rel_entry(twisted_translate("l", z, fg).values,
                                  twisted_convolve(twisted_translate("l", z, f), g).values))
        defects.append(d)
    return defects, 0.0, [], None


def _suite_adjunction(group, algebra, cfg, tol):
    n = group.order
    e = convolution_identity(group, algebra)
    defects = []
    for t in range(cfg.trials):
        rng = _rng(trial_seed(cfg.seed, t))
        f = PhaseFunction.random(group, algebra, rng)
        g = PhaseFunction.random(group, algebra, rng)
        h = PhaseFunction.random(group, algebra, rng, dual=True)
        d = _rel_scalar(pair(twisted_convolve(f, g), h), pair(f, oplus(g, h)))
        z = (int(rng.integers(n)), int(rng.integers(n)))
        d = max(d, _rel_entry(oplus(twisted_translate("t", z, g), h).values,
                              oplus(g, modulate_translate_dual(z, h)).values))
        d = max(d, _rel_entry(oplus(e, h).values, h.values))
        defects.append(d)
    # double modulation comes back to a global phase
    rngw = _rng(trial_seed(cfg.seed, _WITNESS_INDEX))
    h = PhaseFunction.random(group, algebra, rngw, dual=True)
    witness = 0.0
    for z in _some_points(group, limit=6):
        zi = (int(group.inv_table[z[0]]), int(group.inv_table[z[1]]))
        twice = modulate_translate_dual(zi, modulate_translate_dual(z, h))
        phase = np.conj(group.pairing_table[z[0], z[1]])
        witness = max(witness, _rel_entry(twice.values, phase * h.values))
    return defects, witness, [], None


def _suite_young_oplus(group, algebra, cfg, tol):
    ps = cfg.p if cfg.p else (1.5, 2.0, 3.0)
    defects = []
    for t in range(cfg.trials):
        rng = _rng(trial_seed(cfg.seed, t))
        g = PhaseFunction.random(group, algebra, rng)
        h = PhaseFunction.random(group, algebra, rng, dual=True)
        gh = oplus(g, h)
        d = 0.0
        for p in ps:
            d = max(d, _violation(gh.lp_norm(p), g.lp_norm(1) * h.lp_norm(p)))
        defects.append(d)
    rngw = _rng(trial_seed(cfg.seed, _WITNESS_INDEX))
    h = PhaseFunction.random(group, algebra, rngw, dual=True)
    e = convolution_identity(group, algebra)
    witness = _rel_entry(oplus(e, h).values, h.values)
    return defects, witness, [], tuple(ps)


def _suite_arens(group, algebra, cfg, tol):
    defects = []
    for t in range(cfg.trials):
        rng = _rng(trial_seed(cfg.seed, t))
        a = algebra.random_element(rng)
        b = algebra.random_element(rng)
        capf = algebra.random_element(rng)
        capg = algebra.random_element(rng)
        f = algebra.random_element(rng)
        d = _abs_entry(algebra.bidual_product(capf, capg), algebra.mul(capf, capg))
        d = max(d, _rel_scalar(algebra.pair_dual(algebra.mul(b, a), f),
                               algebra.pair_dual(b, algebra.module_action(a, f))))
        d = max(d, _rel_scalar(algebra.pair_dual(a, algebra.functional_action(f, capf)),
                               complex(np.einsum("m,m->", capf, algebra.module_action(a, f)))))
        na, nb = float(algebra.norm(a)), float(algebra.norm(b))
        d = max(d, _violation(float(algebra.norm(algebra.mul(a, b))),
                              algebra.norm_constant * na * nb))
        defects.append(d)
    witness = 0.0
    for eb in algebra.basis():
        witness = max(witness, _abs_entry(algebra.mul(algebra.unit, eb), eb))
    return defects, witness, [], None


def _suite_measure_ideal(group, algebra, cfg, tol):
    n = group.order
    defects = []
    for t in range(cfg.trials):
        rng = _rng(trial_seed(cfg.seed, t))
        atoms = []
        for _ in range(min(3, n * n)):
            point = (int(rng.integers(n)), int(rng.integers(n)))
            atoms.append((point, algebra.random_element(rng)))
        mu = AtomicMeasure(group, algebra, atoms)
        f = PhaseFunction.random(group, algebra, rng)
        by_density = twisted_convolve(mu.to_density(), f)
        by_atoms = measure_convolve(mu, AtomicMeasure.from_density(f)).to_density()
        d = _rel_entry(by_density.values, by_atoms.values)
        d = max(d, _violation(by_density.lp_norm(1),
                              mu.total_variation() * f.lp_norm(1)))
        defects.append(d)
    witness = 0.0
    for z1 in _some_points(group, limit=6):
        for z2 in _some_points(group, limit=6):
            m1 = AtomicMeasure(group, algebra, [(z1, algebra.unit)])
            m2 = AtomicMeasure(group, algebra, [(z2, algebra.unit)])
            lhs = measure_convolve(m1, m2).to_density()
            rhs = twisted_convolve(m1.to_density(), m2.to_density())
            witness = max(witness, _rel_entry(lhs.values, rhs.values))
    return defects, witness, [], None


_SYMBOL_TOL = 1e-12


def _forward_checks(t_op, tol, symbol=None):
    if symbol is None:
        symbol = recover_symbol(t_op)
    m = weyl(symbol)
    return {
        "translation": check_translation_commutation(t_op, tol)[1],
        "module": check_module_map(t_op, tol)[1],
        "mult-left": check_lambda_commutation(t_op, tol)[1],
        "mult-right": check_m_commutation(t_op, tol)[1],
        "convolution": check_convolution_property(t_op, tol)[1],
        "symbol-conv": check_convolution_representation(t_op, tol, symbol=symbol)[1],
        "symbol-star": check_startimes_representation(t_op, tol, symbol=symbol)[1],
        "weyl-symbol": check_weyl_symbol_factorization(t_op, tol, symbol=symbol)[1],
        "weyl-factor": check_weyl_operator_factorization(t_op, tol, m=m)[1],
    }


def _suite_multiplier_forward(group, algebra, cfg, tol):
    defects = []
    worst = {}
    worst_symbol = 0.0
    for t in range(cfg.trials):
        rng = _rng(trial_seed(cfg.seed, t))
        nu = PhaseFunction.random(group, algebra, rng)
        t_op = from_measure(nu)
        res = _forward_checks(t_op, tol, symbol=None)
        symdiff = _abs_entry(recover_symbol(t_op).values, nu.values)
        worst_symbol = max(worst_symbol, symdiff)
        for k, v in res.items():
            worst[k] = max(worst.get(k, 0.0), v)
        # the symbol bound is stricter; scale it into the suite tolerance
        defects.append(max(max(res.values()), symdiff * (tol / _SYMBOL_TOL)))
    breakdown = [(k, v, v <= tol) for k, v in worst.items()]
    breakdown.append(("symbol-exactness", worst_symbol, worst_symbol <= _SYMBOL_TOL))
    ident = identity_operator(group, algebra)
    witness = max(_forward_checks(ident, tol).values())
    return defects, witness, breakdown, None


def _suite_multiplier_converse(group, algebra, cfg, tol):
    _require_scalar(cfg.suite, algebra)
    defects = []
    for t in range(cfg.trials):
        rng = _rng(trial_seed(cfg.seed, t))
        raw = random_operator(group, algebra, rng)
        proj = average_to_multiplier(raw)
        d = check_translation_commutation(proj, tol)[1]
        d = max(d, check_module_map(proj, tol)[1])
        d = max(d, check_convolution_property(proj, tol)[1])
        d = max(d, check_convolution_representation(proj, tol)[1])
        again = average_to_multiplier(proj)
        d = max(d, _abs_entry(again.matrix, proj.matrix))
        defects.append(d)
    rngw = _rng(trial_seed(cfg.seed, _WITNESS_INDEX))
    nu = PhaseFunction.random(group, algebra, rngw)
    t_op = from_measure(nu)
    witness = _abs_entry(average_to_multiplier(t_op).matrix, t_op.matrix)
    return defects, witness, [], None


_SUBJECT_CLASSES = ("multiplier", "perturbed-1e-2", "perturbed-1e-6", "generic")


def _suite_equivalence_chain(group, algebra, cfg, tol):
    p = cfg.p[0] if cfg.p else 2.0
    defects = []
    agg = {}
    for t in range(cfg.trials):
        rng = _rng(trial_seed(cfg.seed, t))
        cls = _SUBJECT_CLASSES[t % 4]
        nu = PhaseFunction.random(group, algebra, rng)
        base = from_measure(nu)
        if cls == "multiplier":
            subject = base
        elif cls == "generic":
            subject = random_operator(group, algebra, rng)
        else:
            eps = 1e-2 if cls == "perturbed-1e-2" else 1e-6
            noise = random_operator(group, algebra, rng)
            subject = OperatorOnL1(
                group, algebra, base.matrix + eps * noise.matrix,
                provenance=f"perturbed:{eps:g}",
            )
        rep = verify_equivalence_chain(subject, p=p, tol=tol)
        defects.append(0.0 if rep.coherent else rep.max_defect)
        for rec in rep.conditions:
            key = (rec.cid, cls)
            prev = agg.get(key, (0.0, True))
            agg[key] = (max(prev[0], rec.defect), prev[1] and rec.passed)
    breakdown = []
    cids = []
    for key in agg:
        if key[0] not in cids:
            cids.append(key[0])
    for cid in cids:
        for cls in _SUBJECT_CLASSES:
            if (cid, cls) in agg:
                value, allpass = agg[(cid, cls)]
                breakdown.append((f"{cid}:{cls}", value, allpass))
    return defects, 0.0, breakdown, (p,)


def _suite_startimes_consistency(group, algebra, cfg, tol):
    defects = []
    e = convolution_identity(group, algebra)
    for t in range(cfg.trials):
        rng = _rng(trial_seed(cfg.seed, t))
        nu = PhaseFunction.random(group, algebra, rng)
        f = PhaseFunction.random(group, algebra, rng)
        d = _rel_entry(startimes(nu, f).values, twisted_convolve(nu, f).values)
        d = max(d, _rel_entry(startimes(e, f).values, f.values))
        defects.append(d)
    witness = 0.0
    for z1 in _some_points(group, limit=4):
        for z2 in _some_points(group, limit=4):
            u1, u2 = delta(group, algebra, z1), delta(group, algebra, z2)
            witness = max(witness, _rel_entry(startimes(u1, u2).values,
                                              twisted_convolve(u1, u2).values))
    return defects, witness, [], None


_SUITES = {
    "plancherel": (_suite_plancherel, 1e-10),
    "homomorphism": (_suite_homomorphism, 1e-10),
    "riemann-lebesgue": (_suite_riemann_lebesgue, 1e-10),
    "hausdorff-young": (_suite_hausdorff_young, 1e-10),
    "covariance": (_suite_covariance, 1e-10),
    "translation-isometry": (_suite_translation_isometry, 1e-10),
    "convolution-algebra": (_suite_convolution_algebra, 1e-10),
    "interchange": (_suite_interchange, 1e-10),
    "adjunction": (_suite_adjunction, 1e-10),
    "young-oplus": (_suite_young_oplus, 1e-10),
    "arens": (_suite_arens, 1e-10),
    "measure-ideal": (_suite_measure_ideal, 1e-10),
    "multiplier-forward": (_suite_multiplier_forward, 1e-9),
    "multiplier-converse": (_suite_multiplier_converse, 1e-9),
    "equivalence-chain": (_suite_equivalence_chain, 1e-8),
    "startimes-consistency": (_suite_startimes_consistency, 1e-10),
}


def registered_suites():
    return tuple(_SUITES)


def run_suite(config: SuiteConfig) -> SuiteReport:
    """Run a registered suite; writes report and table files when the
    config names them."""
    if config.suite not in _SUITES:
        known = ", ".join(registered_suites())
        raise InvalidSpecError(f"unknown suite {config.suite!r}; registered: {known}")
    if config.trials < 1:
        raise InvalidSpecError(f"trials must be >= 1, got {config.trials}")
    runner, default_tol = _SUITES[config.suite]
    tol = default_tol if config.tol is None else float(config.tol)
    if tol <= 0.0:
        raise InvalidSpecError(f"tol must be positive, got {tol}")
    if config.p is not None:
        for p in config.p:
            if p != math.inf and (not math.isfinite(p) or p < 1.0):
                raise InvalidSpecError(f"p must lie in [1, inf], got {p}")
    group = make_group(config.group)
    algebra = algebra_from_name(config.algebra)

    start = time.perf_counter()
    defects, witness, breakdown, p_values = runner(group, algebra, config, tol)
    duration = time.perf_counter() - start

    report = SuiteReport(
        suite=config.suite,
        group_orders=group.orders,
        algebra_label=algebra.label,
        trials=config.trials,
        seed=int(config.seed),
        tol=tol,
        p_values=p_values,
        backend=backends.backend_name(),
        version=__version__,
        trial_seeds=[trial_seed(config.seed, t) for t in range(config.trials)],
        trial_defects=[float(d) for d in defects],
        witness_defect=float(witness),
        breakdown=breakdown,
        duration=duration,
    )
    if config.out:
        with open(config.out, "w", encoding="ascii") as fh:
            fh.write(report.render())
    if config.defect_table:
        emit_defect_table(report, config.defect_table)
    return report
