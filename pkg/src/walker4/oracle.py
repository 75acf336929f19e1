"""First-principles pseudo-Riemannian engine for the Walker chart.

Everything here is computed from the metric jets by the general coordinate
formulas: Christoffels from metric derivatives, the curvature tensor from
the connection, Ricci / scalar / Einstein / Weyl by contraction, and the
covariant derivative of the curvature by differentiating curvature jets.
The only piece shared with the closed-form path is the exact block inverse
of the metric; the rest is deliberately duplicated so that agreement between
the two paths means something.

Conventions, frozen in one place (`RICCI_CONTRACTION` below), are chosen so
that the published component lists are reproduced:

* R(X, Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z, lowered
  on the last slot: R_ijkl = g(R(d_i, d_j) d_k, d_l).
* rho_ij = g^{kl} R_{kijl}  (the trace over the first and last slots).
* Sc = g^{ij} rho_ij, G = rho - (Sc/4) g.
* W = R + (Sc/6) g ^ g - (1/2) rho ^ g terms as in :mod:`walker4.closed_form`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .metric import MetricAtPoint, WalkerMetric, evaluate_metric, inverse_metric
from .tensors import (
    ConnectionCoefficients,
    CovariantDerivativeR,
    CurvatureComponents,
    RicciData,
    WeylComponents,
)

__all__ = [
    "MetricJetField",
    "metric_jet_field",
    "metric_jet_field_at",
    "oracle_christoffels",
    "oracle_riemann",
    "oracle_ricci_scalar_einstein_weyl",
    "oracle_nabla_R",
    "nabla_R_finite_difference",
    "weyl_dense_from_parts",
    "RICCI_CONTRACTION",
]

# rho_ij = g^{kl} R_{k i j l}: slots of R contracted with the inverse metric
RICCI_CONTRACTION = "kl,kijl->ij"


@dataclass(frozen=True)
class MetricJetField:
    """Metric components with all (u1, u2) partials through order 3 at a point.

    ``g_jets[i, j]`` is the (4, 4) jet array of g_ij; partials along u3, u4
    vanish identically and are not stored.  ``ginv_jets`` holds the jets of
    the exact block inverse.
    """

    point: tuple
    g_jets: np.ndarray = field(repr=False)
    ginv_jets: np.ndarray = field(repr=False)


def metric_jet_field_at(mp: MetricAtPoint) -> MetricJetField:
    """Jet-valued metric (and inverse) from an evaluated metric point."""
    inverse_metric(mp)  # invertibility guard; the jets below encode the same block form
    aj, bj, cj = mp.a_jet.d, mp.b_jet.d, mp.c_jet.d
    one = np.zeros((4, 4))
    one[0, 0] = 1.0

    g = np.zeros((4, 4, 4, 4))
    gi = np.zeros((4, 4, 4, 4))
    g[0, 2] = g[2, 0] = one
    g[1, 3] = g[3, 1] = one
    g[2, 2] = aj
    g[3, 3] = bj
    g[2, 3] = g[3, 2] = cj

    gi[0, 0] = -aj
    gi[1, 1] = -bj
    gi[0, 1] = gi[1, 0] = -cj
    gi[0, 2] = gi[2, 0] = one
    gi[1, 3] = gi[3, 1] = one
    return MetricJetField(point=mp.point, g_jets=g, ginv_jets=gi)


def metric_jet_field(metric: WalkerMetric, point) -> MetricJetField:
    return metric_jet_field_at(evaluate_metric(metric, point))


def _christoffel_jets(mjf: MetricJetField) -> np.ndarray:
    return _kernels.christoffel_jets(mjf.g_jets, mjf.ginv_jets)


def _riemann_jets(mjf: MetricJetField, gamma_jets=None) -> np.ndarray:
    if gamma_jets is None:
        gamma_jets = _christoffel_jets(mjf)
    return _kernels.riemann_jets(mjf.g_jets, gamma_jets)


def oracle_christoffels(mjf: MetricJetField) -> ConnectionCoefficients:
    """Christoffel symbols from the general Levi-Civita formula."""
    return ConnectionCoefficients(gamma=_christoffel_jets(mjf)[:, :, :, 0, 0].copy())


def oracle_riemann(mjf: MetricJetField) -> CurvatureComponents:
    """(0,4) curvature tensor from the general coordinate formula."""
    return CurvatureComponents.from_dense(_riemann_jets(mjf)[..., 0, 0])


def oracle_ricci_scalar_einstein_weyl(mjf: MetricJetField):
    """Contractions of the curvature: returns (RicciData, WeylComponents)."""
    r_dense = _riemann_jets(mjf)[..., 0, 0]
    g = mjf.g_jets[:, :, 0, 0]
    ginv = mjf.ginv_jets[:, :, 0, 0]
    rho = np.einsum(RICCI_CONTRACTION, ginv, r_dense)
    sc = float(np.einsum("ij,ij->", ginv, rho))
    einstein = rho - (sc / 4.0) * g
    weyl = weyl_dense_from_parts(r_dense, rho, sc, g)
    return (
        RicciData(rho=rho, sc=sc, einstein=einstein),
        WeylComponents.from_dense(weyl),
    )


def weyl_dense_from_parts(r_dense, rho, sc, g) -> np.ndarray:
    """Dense Weyl tensor assembled from curvature, Ricci, Sc and the metric."""
    gg = np.einsum("jk,il->ijkl", g, g) - np.einsum("ik,jl->ijkl", g, g)
    rg = (
        np.einsum("jk,il->ijkl", rho, g)
        - np.einsum("ik,jl->ijkl", rho, g)
        - np.einsum("jl,ik->ijkl", rho, g)
        + np.einsum("il,jk->ijkl", rho, g)
    )
    return r_dense + (sc / 6.0) * gg - 0.5 * rg


def oracle_nabla_R(mjf: MetricJetField) -> CovariantDerivativeR:
    """Covariant derivative of the curvature tensor at the point.

    The curvature derivative d_m R comes from curvature jets (metric jets of
    order 3 propagate analytically all the way through), not from finite
    differences.
    """
    gamma_jets = _christoffel_jets(mjf)
    r_jets = _riemann_jets(mjf, gamma_jets)
    values = _kernels.nabla_riemann_values(gamma_jets[:, :, :, 0, 0].copy(), r_jets)
    return CovariantDerivativeR(values=values)


def nabla_R_finite_difference(
    metric: WalkerMetric, point, h: float = 1e-4
) -> np.ndarray:
    """Third voter for nabla R: central differences of the curvature values.

    d_m R is estimated by re-evaluating the curvature at shifted points; the
    connection correction terms use the analytic values at the centre.
    """
    point = tuple(float(x) for x in point)

    def r_dense_at(pt):
        return _riemann_jets(metric_jet_field(metric, pt))[..., 0, 0]

    centre = metric_jet_field(metric, point)
    gamma = _christoffel_jets(centre)[:, :, :, 0, 0]
    r0 = r_dense_at(point)
    out = np.zeros((4, 4, 4, 4, 4))
    for m in range(4):
        shift = np.zeros(4)
        shift[m] = h
        dr = (r_dense_at(np.array(point) + shift) - r_dense_at(np.array(point) - shift)) / (
            2.0 * h
        )
        corr = (
            np.einsum("pi,pjkl->ijkl", gamma[:, m, :], r0)
            + np.einsum("pj,ipkl->ijkl", gamma[:, m, :], r0)
            + np.einsum("pk,ijpl->ijkl", gamma[:, m, :], r0)
            + np.einsum("pl,ijkp->ijkl", gamma[:, m, :], r0)
        )
        out[m] = dr - corr
    return out
