"""The restricted Walker metric in canonical coordinates (u1, u2, u3, u4).

In block form g = [[0, I2], [I2, B]] with B = [[a, c], [c, b]], where the
defining functions a, b, c depend on (u1, u2) only.  The determinant is
identically 1 and the inverse is the exact block matrix [[-B, I2], [I2, 0]].
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .jets import Jet3, ScalarField2

__all__ = ["WalkerMetric", "MetricAtPoint", "evaluate_metric", "inverse_metric"]


@dataclass(frozen=True)
class WalkerMetric:
    """Triple of defining scalar fields realizing the canonical neutral metric."""

    a: ScalarField2
    b: ScalarField2
    c: ScalarField2
    name: str = ""


@dataclass(frozen=True)
class MetricAtPoint:
    """Metric matrix plus the jets of a, b, c at one point."""

    point: tuple
    g: np.ndarray
    a_jet: Jet3 = field(repr=False)
    b_jet: Jet3 = field(repr=False)
    c_jet: Jet3 = field(repr=False)


def evaluate_metric(metric: WalkerMetric, point) -> MetricAtPoint:
    """Assemble g and the jets of the defining functions at ``point``.

    Only (u1, u2) enter the entries; u3 and u4 ride along for bookkeeping.
    """
    pt = tuple(float(x) for x in point)
    if len(pt) != 4:
        raise ValueError(f"point must have 4 coordinates, got {len(pt)}")
    u1, u2 = pt[0], pt[1]
    aj = metric.a.jet(u1, u2)
    bj = metric.b.jet(u1, u2)
    cj = metric.c.jet(u1, u2)
    a, b, c = aj.value, bj.value, cj.value
    g = np.array(
        [
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
            [1.0, 0.0, a, c],
            [0.0, 1.0, c, b],
        ]
    )
    return MetricAtPoint(point=pt, g=g, a_jet=aj, b_jet=bj, c_jet=cj)


def inverse_metric(mp: MetricAtPoint) -> np.ndarray:
    """Exact inverse [[-B, I2], [I2, 0]] of the block metric.

    The product g @ g^{-1} is checked against the identity to 1e-12; a
    violation can only come from non-finite defining-function values.
    """
    a = mp.a_jet.value
    b = mp.b_jet.value
    c = mp.c_jet.value
    ginv = np.array(
        [
            [-a, -c, 1.0, 0.0],
            [-c, -b, 0.0, 1.0],
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
        ]
    )
    if not np.all(np.abs(mp.g @ ginv - np.eye(4)) <= 1e-12):
        raise ArithmeticError(f"metric inverse check failed at point {mp.point}")
    return ginv
