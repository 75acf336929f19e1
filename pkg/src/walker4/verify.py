"""Closed-form-vs-oracle audit over a corpus of random polynomial metrics.

This is the package's formula-audit mode: every published component list is
evaluated against the first-principles engine at random points of random
polynomial metrics, together with the algebraic-property residuals
(symmetries, Bianchi identities, trace conditions) and the printed-Weyl
audit that quantifies the two repaired generator slots.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import closed_form, oracle
from .jets import poly_field
from .metric import WalkerMetric, evaluate_metric, inverse_metric
from .tensors import component_label

__all__ = ["VerificationResult", "random_polynomial_metric", "verify_metric_at", "run_verification"]

DEFAULT_TOLERANCE = 1e-9

# formula families whose deviations gate the exit status
GATED = (
    "connection",
    "curvature",
    "ricci",
    "scalar",
    "einstein",
    "weyl_vs_oracle",
    "weyl_vs_definition",
    "weyl_definition_vs_oracle",
)

PROPERTY_KEYS = (
    "riemann_antisymmetry",
    "riemann_pair_symmetry",
    "first_bianchi",
    "second_bianchi",
    "weyl_trace",
    "einstein_trace",
)


@dataclass
class VerificationResult:
    trials: int
    seed: int
    degree: int
    points_per_trial: int
    tolerance: float
    deviations: dict = field(default_factory=dict)
    properties: dict = field(default_factory=dict)
    printed_weyl_audit: dict = field(default_factory=dict)
    printed_weyl_model_residual: float = 0.0

    @property
    def passed(self) -> bool:
        return all(self.deviations[k] <= self.tolerance for k in GATED)

    @property
    def worst_gated(self) -> float:
        return max(self.deviations[k] for k in GATED)


def random_polynomial_metric(rng, degree: int = 3, coeff_range: float = 2.0) -> WalkerMetric:
    """Random polynomial defining functions of total degree <= ``degree``."""

    def rand_field():
        return poly_field(
            {
                (i, j): rng.uniform(-coeff_range, coeff_range)
                for i in range(degree + 1)
                for j in range(degree + 1 - i)
            }
        )

    return WalkerMetric(a=rand_field(), b=rand_field(), c=rand_field(), name="random-poly")


def verify_metric_at(metric: WalkerMetric, points) -> VerificationResult:
    """Compare both computation paths for one metric at given points."""
    res = VerificationResult(
        trials=1,
        seed=0,
        degree=0,
        points_per_trial=len(points),
        tolerance=DEFAULT_TOLERANCE,
    )
    res.deviations = {k: 0.0 for k in GATED}
    res.properties = {k: 0.0 for k in PROPERTY_KEYS}
    res.printed_weyl_audit = {}
    _accumulate(metric, points, res)
    return res


def _accumulate(metric: WalkerMetric, points, res: VerificationResult) -> None:
    dev = res.deviations
    prop = res.properties
    for pt in points:
        mp = evaluate_metric(metric, pt)
        mjf = oracle.metric_jet_field_at(mp)
        ginv = inverse_metric(mp)

        con = closed_form.connection_at(mp)
        con_o = oracle.oracle_christoffels(mjf)
        dev["connection"] = max(
            dev["connection"], float(np.max(np.abs(con.gamma - con_o.gamma)))
        )

        curv = closed_form.curvature_at(mp)
        r_dense_o = oracle._riemann_jets(mjf)[..., 0, 0]
        curv_o = oracle.CurvatureComponents.from_dense(r_dense_o)
        dev["curvature"] = max(dev["curvature"], curv.max_deviation(curv_o))

        ric = closed_form.ricci_at(mp)
        ric_o, weyl_o = oracle.oracle_ricci_scalar_einstein_weyl(mjf)
        dev["ricci"] = max(dev["ricci"], float(np.max(np.abs(ric.rho - ric_o.rho))))
        dev["scalar"] = max(dev["scalar"], abs(ric.sc - ric_o.sc))
        dev["einstein"] = max(
            dev["einstein"], float(np.max(np.abs(ric.einstein - ric_o.einstein)))
        )

        weyl = closed_form.weyl_at(mp)
        weyl_def = closed_form.weyl_from_definition(curv, ric, mp)
        dev["weyl_vs_oracle"] = max(dev["weyl_vs_oracle"], weyl.max_deviation(weyl_o))
        dev["weyl_vs_definition"] = max(
            dev["weyl_vs_definition"], weyl.max_deviation(weyl_def)
        )
        dev["weyl_definition_vs_oracle"] = max(
            dev["weyl_definition_vs_oracle"], weyl_def.max_deviation(weyl_o)
        )

        # algebraic properties of the raw (dense) oracle output
        prop["riemann_antisymmetry"] = max(
            prop["riemann_antisymmetry"],
            float(np.max(np.abs(r_dense_o + np.einsum("jikl->ijkl", r_dense_o)))),
            float(np.max(np.abs(r_dense_o + np.einsum("ijlk->ijkl", r_dense_o)))),
        )
        prop["riemann_pair_symmetry"] = max(
            prop["riemann_pair_symmetry"],
            float(np.max(np.abs(r_dense_o - np.einsum("klij->ijkl", r_dense_o)))),
        )
        prop["first_bianchi"] = max(
            prop["first_bianchi"],
            float(
                np.max(
                    np.abs(
                        r_dense_o
                        + np.einsum("iklj->ijkl", r_dense_o)
                        + np.einsum("iljk->ijkl", r_dense_o)
                    )
                )
            ),
        )
        nabla = oracle.oracle_nabla_R(mjf).values
        prop["second_bianchi"] = max(
            prop["second_bianchi"],
            float(
                np.max(
                    np.abs(
                        nabla
                        + np.einsum("kijlm->mijkl", nabla)
                        + np.einsum("lijmk->mijkl", nabla)
                    )
                )
            ),
        )
        w_dense = weyl.dense()
        for spec_str in ("ik,ijkl->jl", "il,ijkl->jk", "jk,ijkl->il", "jl,ijkl->ik"):
            prop["weyl_trace"] = max(
                prop["weyl_trace"], float(np.max(np.abs(np.einsum(spec_str, ginv, w_dense))))
            )
        prop["einstein_trace"] = max(
            prop["einstein_trace"],
            abs(float(np.einsum("ij,ij->", ginv, ric.einstein))),
        )

        # printed-generator audit against the definition assembly
        printed = closed_form.weyl_generators(mp, as_printed=True)
        models = closed_form.weyl_printed_deviation_models(mp)
        for key in closed_form.weyl_generators(mp):
            label = component_label(*key, symbol="W")
            gap = abs(printed.get(key, 0.0) - weyl_def.get(*key))
            res.printed_weyl_audit[label] = max(res.printed_weyl_audit.get(label, 0.0), gap)
            res.printed_weyl_model_residual = max(
                res.printed_weyl_model_residual,
                abs(printed.get(key, 0.0) - weyl_def.get(*key) - models.get(key, 0.0)),
            )


def run_verification(
    trials: int = 100,
    seed: int = 1,
    degree: int = 3,
    points_per_trial: int = 20,
    tolerance: float = DEFAULT_TOLERANCE,
) -> VerificationResult:
    """Audit ``trials`` random polynomial metrics at random points each."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if not (0 <= degree <= 3):
        raise ValueError("degree must be between 0 and 3")
    rng = np.random.default_rng(seed)
    res = VerificationResult(
        trials=trials,
        seed=seed,
        degree=degree,
        points_per_trial=points_per_trial,
        tolerance=tolerance,
    )
    res.deviations = {k: 0.0 for k in GATED}
    res.properties = {k: 0.0 for k in PROPERTY_KEYS}
    for _ in range(trials):
        metric = random_polynomial_metric(rng, degree=degree)
        points = rng.uniform(-1.0, 1.0, size=(points_per_trial, 4))
        _accumulate(metric, points, res)
    return res
