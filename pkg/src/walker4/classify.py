"""Sampling-based classification of Walker metrics.

Each check evaluates a tensorial condition at a deterministic pseudo-random
sample of points and reports the worst residual.  A verdict of ``holds``
means the residuals vanish on the sample plan, not that the condition was
proved symbolically; ``fails`` requires a residual an order of magnitude
above tolerance, and the band in between is reported as ``inconclusive``
instead of being silently rounded to either side.

The explicit PDE systems published for the Einstein and locally-symmetric
conditions are evaluated as separate diagnostics so that any inconsistency
between them and the tensor-level checks stays visible.  The published
Einstein system's fifth line is known to disagree with the Einstein-tensor
expansion (its ``b*c22`` term carries the wrong sign); the corrected line is
used for the verdict and the as-printed line is reported alongside it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import closed_form, oracle
from .metric import WalkerMetric, evaluate_metric

__all__ = [
    "SamplePlan",
    "ConditionResult",
    "ClassificationReport",
    "check_einstein",
    "einstein_pde_residuals",
    "check_ricci_flat",
    "check_locally_symmetric",
    "locally_symmetric_pde_residuals",
    "check_conformally_flat",
    "classify_metric",
]

VERDICT_HOLDS = "holds"
VERDICT_FAILS = "fails"
VERDICT_INCONCLUSIVE = "inconclusive"

# residuals above FAIL_FACTOR * tolerance are definite failures
FAIL_FACTOR = 10.0


@dataclass(frozen=True)
class SamplePlan:
    """Deterministic sampling plan for residual evaluation."""

    count: int = 32
    seed: int = 1
    box: tuple = (-1.0, 1.0)
    tolerance: float = 1e-8

    def __post_init__(self):
        if self.count < 1:
            raise ValueError("sample count must be >= 1")
        lo, hi = self.box
        if not (np.isfinite(lo) and np.isfinite(hi) and lo < hi):
            raise ValueError(f"invalid sample box {self.box!r}")
        if not (self.tolerance > 0):
            raise ValueError("tolerance must be positive")

    def points(self) -> np.ndarray:
        rng = np.random.default_rng(self.seed)
        lo, hi = self.box
        return rng.uniform(lo, hi, size=(self.count, 4))


@dataclass
class ConditionResult:
    """Outcome of one condition check over a sample plan."""

    name: str
    residual: float
    verdict: str
    witness: tuple | None = None
    extras: dict = field(default_factory=dict)
    warnings: list = field(default_factory=list)


@dataclass
class ClassificationReport:
    metric_name: str
    plan: SamplePlan
    entries: list
    warnings: list = field(default_factory=list)

    def entry(self, name: str) -> ConditionResult:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)


def _verdict(residual: float, tol: float) -> str:
    if residual <= tol:
        return VERDICT_HOLDS
    if residual > FAIL_FACTOR * tol:
        return VERDICT_FAILS
    return VERDICT_INCONCLUSIVE


def _result(name, residual, argmax_point, plan, extras=None, warnings=None) -> ConditionResult:
    verdict = _verdict(residual, plan.tolerance)
    return ConditionResult(
        name=name,
        residual=float(residual),
        verdict=verdict,
        witness=tuple(argmax_point) if verdict == VERDICT_FAILS else None,
        extras=extras or {},
        warnings=warnings or [],
    )


def _scan(metric: WalkerMetric, plan: SamplePlan, per_point):
    """max-residual reduction of ``per_point(point) -> residual`` over samples."""
    worst = -1.0
    arg = None
    for pt in plan.points():
        r = per_point(pt)
        if r > worst:
            worst, arg = r, pt
    return worst, arg


def check_einstein(metric: WalkerMetric, plan: SamplePlan) -> ConditionResult:
    """Vanishing of the trace-free Einstein tensor G = rho - (Sc/4) g.

    The component-list G is cross-checked against the first-principles
    engine at every sample; scalar-curvature constancy over the samples is
    reported because an Einstein 4-metric has constant Sc.
    """
    worst, arg = -1.0, None
    oracle_gap = 0.0
    sc_values = []
    for pt in plan.points():
        mp = evaluate_metric(metric, pt)
        ric = closed_form.ricci_at(mp)
        ric_o, _ = oracle.oracle_ricci_scalar_einstein_weyl(oracle.metric_jet_field_at(mp))
        oracle_gap = max(oracle_gap, float(np.max(np.abs(ric.einstein - ric_o.einstein))))
        sc_values.append(ric.sc)
        r = float(np.max(np.abs(ric.einstein)))
        if r > worst:
            worst, arg = r, pt
    sc_values = np.asarray(sc_values)
    sc_spread = float(sc_values.max() - sc_values.min())
    extras = {
        "lambda_estimate": float(sc_values.mean() / 4.0),
        "sc_spread": sc_spread,
        "oracle_gap": oracle_gap,
    }
    warnings = []
    if oracle_gap > 1e-9:
        warnings.append("einstein: component-list G disagrees with first-principles G")
    res = _result("einstein", worst, arg, plan, extras, warnings)
    if res.verdict == VERDICT_HOLDS and sc_spread > plan.tolerance:
        res.warnings.append(
            "einstein: G vanishes on samples but Sc is not constant - inspect the metric"
        )
    return res


# the corrected fifth line carries -b*c22; the published one carries +b*c22
def _einstein_pde_lines(mp, as_printed_line5: bool = False) -> dict:
    p = closed_form._Partials(mp)
    line5_tail = p.b * p.c22 if as_printed_line5 else -p.b * p.c22
    return {
        "e1": p.a11 - p.b22,
        "e2": p.b12 + p.c11,
        "e3": p.a12 + p.c22,
        "e4": (
            p.a1 * p.c2 + p.a2 * p.b2 - p.a2 * p.c1 - p.c2**2
            + 2.0 * p.c * p.a12 + p.b * p.a22 - p.a * p.c12
        ),
        "e5": (
            p.a2 * p.b1 - p.c1 * p.c2 + p.c * p.a11 - p.a * p.c11
            - p.c * p.c12 + line5_tail
        ),
        "e6": (
            p.a1 * p.b1 - p.b1 * p.c2 + p.b2 * p.c1 - p.c1**2
            + p.a * p.b11 + 2.0 * p.c * p.b12 - p.b * p.c12
        ),
    }


def einstein_pde_residuals(metric: WalkerMetric, plan: SamplePlan) -> ConditionResult:
    """The explicit six-equation Einstein system, evaluated as residuals.

    The verdict uses the sign-corrected fifth line; the as-printed fifth
    line is evaluated alongside and a warning is attached whenever the two
    differ beyond tolerance on the samples.
    """
    worst, arg = -1.0, None
    per_line = {k: 0.0 for k in ("e1", "e2", "e3", "e4", "e5", "e6")}
    printed_gap = 0.0
    for pt in plan.points():
        mp = evaluate_metric(metric, pt)
        lines = _einstein_pde_lines(mp)
        printed5 = _einstein_pde_lines(mp, as_printed_line5=True)["e5"]
        printed_gap = max(printed_gap, abs(printed5 - lines["e5"]))
        for k, v in lines.items():
            per_line[k] = max(per_line[k], abs(v))
        r = max(abs(v) for v in lines.values())
        if r > worst:
            worst, arg = r, pt
    extras = {f"max_{k}": v for k, v in per_line.items()}
    extras["printed_line5_gap"] = printed_gap
    warnings = []
    if printed_gap > plan.tolerance:
        warnings.append(
            "einstein-pde: published line 5 (+b*c22) disagrees with the "
            "Einstein-tensor expansion (-b*c22) on these samples"
        )
    return _result("einstein-pde", worst, arg, plan, extras, warnings)


def check_ricci_flat(metric: WalkerMetric, plan: SamplePlan) -> ConditionResult:
    """Vanishing of the Ricci tensor on the sample plan."""

    def per_point(pt):
        return float(np.max(np.abs(closed_form.ricci_at(evaluate_metric(metric, pt)).rho)))

    worst, arg = _scan(metric, plan, per_point)
    return _result("ricci-flat", worst, arg, plan)


def check_locally_symmetric(metric: WalkerMetric, plan: SamplePlan) -> ConditionResult:
    """Vanishing of the covariant derivative of the curvature tensor."""

    def per_point(pt):
        return oracle.oracle_nabla_R(oracle.metric_jet_field(metric, pt)).max_abs()

    worst, arg = _scan(metric, plan, per_point)
    return _result("locally-symmetric", worst, arg, plan)


_SYMMETRY_LINES = ("s1", "s2", "s3", "s4", "s5", "s6", "s7", "s8", "s9", "s10")


def _locally_symmetric_lines(mp) -> dict:
    p = closed_form._Partials(mp)
    return {
        "s1": p.a1 * p.a2 * p.b2,
        "s2": p.a1 * p.b1 * p.b2,
        "s3": p.a1 * p.a22,
        "s4": p.a1 * p.b11,
        "s5": p.a2 * p.b11,
        "s6": p.b1 * p.a22,
        "s7": p.b2 * p.a22,
        "s8": p.b2 * p.b11,
        "s9": p.a * p.a11 * p.b1,
        "s10": p.b * p.a2 * p.b22,
    }


def locally_symmetric_pde_residuals(metric: WalkerMetric, plan: SamplePlan) -> ConditionResult:
    """The published ten-product local-symmetry system for metrics with c = 0.

    Callable on any metric, but the system was derived for the diagonal-block
    Einstein family; with c != 0 it is a diagnostic only.
    """
    worst, arg = -1.0, None
    per_line = {k: 0.0 for k in _SYMMETRY_LINES}
    for pt in plan.points():
        lines = _locally_symmetric_lines(evaluate_metric(metric, pt))
        for k, v in lines.items():
            per_line[k] = max(per_line[k], abs(v))
        r = max(abs(v) for v in lines.values())
        if r > worst:
            worst, arg = r, pt
    extras = {f"max_{k}": v for k, v in per_line.items()}
    return _result("locally-symmetric-pde", worst, arg, plan, extras)


def check_conformally_flat(metric: WalkerMetric, plan: SamplePlan) -> ConditionResult:
    """Vanishing of the Weyl tensor, cross-checked against the oracle path.

    The scalar curvature over the samples is reported as well: a conformally
    flat metric of this family must have Sc identically zero.
    """
    worst, arg = -1.0, None
    oracle_gap = 0.0
    sc_max = 0.0
    for pt in plan.points():
        mp = evaluate_metric(metric, pt)
        w = closed_form.weyl_at(mp)
        _, w_o = oracle.oracle_ricci_scalar_einstein_weyl(oracle.metric_jet_field_at(mp))
        oracle_gap = max(oracle_gap, w.max_deviation(w_o))
        sc_max = max(sc_max, abs(closed_form.ricci_at(mp).sc))
        r = w.max_abs()
        if r > worst:
            worst, arg = r, pt
    extras = {"oracle_gap": oracle_gap, "sc_max": sc_max}
    warnings = []
    if oracle_gap > 1e-9:
        warnings.append("conformally-flat: Weyl component list disagrees with oracle Weyl")
    res = _result("conformally-flat", worst, arg, plan, extras, warnings)
    if res.verdict == VERDICT_HOLDS and sc_max > plan.tolerance:
        res.warnings.append(
            "conformally-flat: Weyl vanishes on samples but Sc does not - inspect the metric"
        )
    return res


def _combine(name: str, first: ConditionResult, second: ConditionResult) -> ConditionResult:
    """Conjunction of two condition results (used for locally symmetric Einstein)."""
    worse = first if first.residual >= second.residual else second
    if VERDICT_FAILS in (first.verdict, second.verdict):
        verdict = VERDICT_FAILS
    elif first.verdict == VERDICT_HOLDS and second.verdict == VERDICT_HOLDS:
        verdict = VERDICT_HOLDS
    else:
        verdict = VERDICT_INCONCLUSIVE
    failing = [e for e in (first, second) if e.verdict == VERDICT_FAILS and e.witness]
    return ConditionResult(
        name=name,
        residual=worse.residual,
        verdict=verdict,
        witness=failing[0].witness if failing else None,
        extras={first.name: first.verdict, second.name: second.verdict},
    )


def classify_metric(metric: WalkerMetric, plan: SamplePlan | None = None) -> ClassificationReport:
    """Run every condition check plus both PDE diagnostics on one metric."""
    plan = plan or SamplePlan()
    einstein = check_einstein(metric, plan)
    symmetric = check_locally_symmetric(metric, plan)
    entries = [
        einstein,
        einstein_pde_residuals(metric, plan),
        check_ricci_flat(metric, plan),
        symmetric,
        _combine("locally-symmetric-einstein", symmetric, einstein),
        locally_symmetric_pde_residuals(metric, plan),
        check_conformally_flat(metric, plan),
    ]
    warnings = []
    by_name = {e.name: e for e in entries}
    if by_name["einstein"].verdict != by_name["einstein-pde"].verdict:
        warnings.append(
            "einstein verdict from the Einstein tensor and from the explicit PDE "
            "system disagree: "
            f"{by_name['einstein'].verdict} vs {by_name['einstein-pde'].verdict}"
        )
    return ClassificationReport(
        metric_name=metric.name,
        plan=plan,
        entries=entries,
        warnings=warnings,
    )
