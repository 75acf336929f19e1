"""Everything-at-a-point bundle used by the report command."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import closed_form, oracle
from .metric import MetricAtPoint, WalkerMetric, evaluate_metric, inverse_metric
from .tensors import (
    ConnectionCoefficients,
    CovariantDerivativeR,
    CurvatureComponents,
    RicciData,
    WeylComponents,
)

__all__ = ["CurvaturePack", "curvature_pack"]


@dataclass(frozen=True)
class CurvaturePack:
    """All tensors at one point, plus closed-form-vs-oracle agreement gaps."""

    at: MetricAtPoint
    connection: ConnectionCoefficients
    curvature: CurvatureComponents
    ricci: RicciData
    weyl: WeylComponents
    nabla_r: CovariantDerivativeR
    diagnostics: dict = field(default_factory=dict)


def curvature_pack(metric: WalkerMetric, point) -> CurvaturePack:
    """Evaluate every tensor at ``point`` and cross-check the two paths.

    Component-list values are returned; the diagnostics record how far they
    sit from the first-principles engine at this point.
    """
    mp = evaluate_metric(metric, point)
    mjf = oracle.metric_jet_field_at(mp)

    con = closed_form.connection_at(mp)
    curv = closed_form.curvature_at(mp)
    ric = closed_form.ricci_at(mp)
    weyl = closed_form.weyl_at(mp)
    nabla = oracle.oracle_nabla_R(mjf)

    con_o = oracle.oracle_christoffels(mjf)
    curv_o = oracle.oracle_riemann(mjf)
    ric_o, weyl_o = oracle.oracle_ricci_scalar_einstein_weyl(mjf)
    weyl_def = closed_form.weyl_from_definition(curv, ric, mp)

    diagnostics = {
        "connection_gap": float(np.max(np.abs(con.gamma - con_o.gamma))),
        "curvature_gap": curv.max_deviation(curv_o),
        "ricci_gap": float(np.max(np.abs(ric.rho - ric_o.rho))),
        "scalar_gap": abs(ric.sc - ric_o.sc),
        "einstein_gap": float(np.max(np.abs(ric.einstein - ric_o.einstein))),
        "weyl_oracle_gap": weyl.max_deviation(weyl_o),
        "weyl_definition_gap": weyl.max_deviation(weyl_def),
        "einstein_trace": abs(float(np.einsum("ij,ij->", inverse_metric(mp), ric.einstein))),
    }
    return CurvaturePack(
        at=mp,
        connection=con,
        curvature=curv,
        ricci=ric,
        weyl=weyl,
        nabla_r=nabla,
        diagnostics=diagnostics,
    )
