"""Closed-form component lists for the restricted Walker metric.

Every tensor here is assembled directly from the published component
formulas: the connection from the displayed covariant derivatives, the
curvature from its fifteen generator components, Ricci / scalar / Einstein
from their explicit lists, and the Weyl tensor from its generator list.
Nothing in this module calls the first-principles engine in
:mod:`walker4.oracle`; agreement between the two paths is evidence, not
circularity.

Two deliberate repairs to the published Weyl list, both flagged by the audit
tooling rather than applied silently:

* the printed W_2334 generator carries ``- c*c22/4`` where consistency with
  the defining formula for W (and with trace-freeness) requires
  ``+ c*c22/4``;
* the printed list omits W_1234 although the definition gives it the value
  ``a11/12 + b22/12 + c12/6`` - exactly what the first Bianchi identity
  forces from the printed W_1324 and W_1423 entries.

:func:`weyl_at` uses the repaired generator set; :func:`weyl_generators`
can produce the as-printed variant so both discrepancies stay visible and
quantifiable.
"""

from __future__ import annotations

import numpy as np

from .metric import MetricAtPoint
from .tensors import (
    PAIRS,
    ConnectionCoefficients,
    CurvatureComponents,
    RicciData,
    WeylComponents,
)

__all__ = [
    "connection_at",
    "curvature_at",
    "ricci_at",
    "weyl_at",
    "weyl_generators",
    "weyl_from_definition",
    "weyl_printed_deviation_models",
    "PRINTED_SIGN_FIX",
]

# canonical slots whose printed generators disagree with the Weyl definition,
# mapped to the closed form of the (signed) difference printed - consistent
PRINTED_SIGN_FIX = {
    (1, 2, 2, 3): "-c*c22/2",
    (0, 1, 2, 3): "-(a11/12 + b22/12 + c12/6)",
}


class _Partials:
    """Local names for the jet entries of a, b, c at one point."""

    __slots__ = (
        "a", "a1", "a2", "a11", "a12", "a22",
        "b", "b1", "b2", "b11", "b12", "b22",
        "c", "c1", "c2", "c11", "c12", "c22",
    )

    def __init__(self, mp: MetricAtPoint):
        for name, jet in (("a", mp.a_jet), ("b", mp.b_jet), ("c", mp.c_jet)):
            d = jet.d
            setattr(self, name, d[0, 0])
            setattr(self, name + "1", d[1, 0])
            setattr(self, name + "2", d[0, 1])
            setattr(self, name + "11", d[2, 0])
            setattr(self, name + "12", d[1, 1])
            setattr(self, name + "22", d[0, 2])


def connection_at(mp: MetricAtPoint) -> ConnectionCoefficients:
    """Christoffel symbols of the Walker metric; unlisted coefficients vanish."""
    p = _Partials(mp)
    g = np.zeros((4, 4, 4))

    def put(k, i, j, v):
        g[k, i, j] = v
        g[k, j, i] = v

    put(0, 0, 2, 0.5 * p.a1)
    put(1, 0, 2, 0.5 * p.c1)
    put(0, 0, 3, 0.5 * p.c1)
    put(1, 0, 3, 0.5 * p.b1)
    put(0, 1, 2, 0.5 * p.a2)
    put(1, 1, 2, 0.5 * p.c2)
    put(0, 1, 3, 0.5 * p.c2)
    put(1, 1, 3, 0.5 * p.b2)
    put(0, 2, 2, 0.5 * (p.a * p.a1 + p.c * p.a2))
    put(1, 2, 2, 0.5 * (p.b * p.a2 + p.c * p.a1))
    put(2, 2, 2, -0.5 * p.a1)
    put(3, 2, 2, -0.5 * p.a2)
    put(0, 2, 3, 0.5 * (p.a * p.c1 + p.c * p.c2))
    put(1, 2, 3, 0.5 * (p.b * p.c2 + p.c * p.c1))
    put(2, 2, 3, -0.5 * p.c1)
    put(3, 2, 3, -0.5 * p.c2)
    put(0, 3, 3, 0.5 * (p.a * p.b1 + p.c * p.b2))
    put(1, 3, 3, 0.5 * (p.b * p.b2 + p.c * p.b1))
    put(2, 3, 3, -0.5 * p.b1)
    put(3, 3, 3, -0.5 * p.b2)
    return ConnectionCoefficients(gamma=g)


def curvature_at(mp: MetricAtPoint) -> CurvatureComponents:
    """(0,4) curvature from its fifteen generator components.

    All components outside the generators (and their symmetric images) are
    zero; in particular every component with index pair (1,2) vanishes
    because the plane spanned by d1, d2 is parallel.
    """
    p = _Partials(mp)
    comps = {
        (0, 2, 0, 2): 0.5 * p.a11,
        (0, 2, 0, 3): 0.5 * p.c11,
        (0, 2, 1, 2): 0.5 * p.a12,
        (0, 2, 1, 3): 0.5 * p.c12,
        (0, 2, 2, 3): 0.25 * (p.a2 * p.b1 - p.c1 * p.c2),
        (0, 3, 0, 3): 0.5 * p.b11,
        (0, 3, 1, 2): 0.5 * p.c12,
        (0, 3, 1, 3): 0.5 * p.b12,
        (0, 3, 2, 3): 0.25 * (p.c1**2 - p.a1 * p.b1 + p.b1 * p.c2 - p.b2 * p.c1),
        (1, 2, 1, 2): 0.5 * p.a22,
        (1, 2, 1, 3): 0.5 * p.c22,
        (1, 2, 2, 3): 0.25 * (-p.c2**2 + p.a2 * p.b2 + p.a1 * p.c2 - p.a2 * p.c1),
        (1, 3, 1, 3): 0.5 * p.b22,
        (1, 3, 2, 3): 0.25 * (-p.a2 * p.b1 + p.c1 * p.c2),
        (2, 3, 2, 3): 0.25
        * (
            p.a * p.c1**2
            + p.b * p.c2**2
            - p.a * p.a1 * p.b1
            - p.c * p.a1 * p.b2
            - p.c * p.a2 * p.b1
            - p.b * p.a2 * p.b2
            + 2.0 * p.c * p.c1 * p.c2
        ),
    }
    return CurvatureComponents.from_components(comps)


def ricci_at(mp: MetricAtPoint) -> RicciData:
    """Ricci tensor, scalar curvature and Einstein tensor, all verbatim lists.

    The Einstein tensor is populated from its own component list rather than
    recomputed as rho - (Sc/4) g; the identity between the two is a test
    target, not an implementation shortcut.
    """
    p = _Partials(mp)
    rho = np.zeros((4, 4))

    def put(m, i, j, v):
        m[i, j] = v
        m[j, i] = v

    put(rho, 0, 2, 0.5 * (p.a11 + p.c12))
    put(rho, 0, 3, 0.5 * (p.b12 + p.c11))
    put(rho, 1, 2, 0.5 * (p.a12 + p.c22))
    put(rho, 1, 3, 0.5 * (p.b22 + p.c12))
    put(
        rho, 2, 2,
        0.5
        * (
            -p.c2**2
            + p.a1 * p.c2
            + p.a2 * p.b2
            - p.a2 * p.c1
            + p.a * p.a11
            + 2.0 * p.c * p.a12
            + p.b * p.a22
        ),
    )
    put(
        rho, 2, 3,
        0.5 * (-p.a2 * p.b1 + p.c1 * p.c2 + p.a * p.c11 + 2.0 * p.c * p.c12 + p.b * p.c22),
    )
    put(
        rho, 3, 3,
        0.5
        * (
            -p.c1**2
            + p.a1 * p.b1
            - p.b1 * p.c2
            + p.b2 * p.c1
            + p.a * p.b11
            + 2.0 * p.c * p.b12
            + p.b * p.b22
        ),
    )

    sc = p.a11 + p.b22 + 2.0 * p.c12

    G = np.zeros((4, 4))
    put(G, 0, 2, 0.25 * p.a11 - 0.25 * p.b22)
    put(G, 0, 3, 0.5 * p.c11 + 0.5 * p.b12)
    put(G, 1, 2, 0.5 * p.a12 + 0.5 * p.c22)
    put(G, 1, 3, 0.25 * p.b22 - 0.25 * p.a11)
    put(
        G, 2, 2,
        0.25 * p.a * p.a11
        + p.c * p.a12
        + 0.5 * p.b * p.a22
        - 0.5 * p.a2 * p.c1
        + 0.5 * p.a1 * p.c2
        + 0.5 * p.a2 * p.b2
        - 0.5 * p.c2**2
        - 0.5 * p.a * p.c12
        - 0.25 * p.a * p.b22,
    )
    put(
        G, 2, 3,
        0.5 * p.a * p.c11
        + 0.5 * p.c * p.c12
        - 0.5 * p.a2 * p.b1
        + 0.5 * p.c1 * p.c2
        + 0.5 * p.b * p.c22
        - 0.25 * p.c * p.a11
        - 0.25 * p.c * p.b22,
    )
    put(
        G, 3, 3,
        0.5 * p.a * p.b11
        + p.c * p.b12
        - 0.5 * p.c1**2
        + 0.5 * p.a1 * p.b1
        - 0.5 * p.b1 * p.c2
        + 0.5 * p.b2 * p.c1
        + 0.25 * p.b * p.b22
        - 0.25 * p.b * p.a11
        - 0.5 * p.b * p.c12,
    )
    return RicciData(rho=rho, sc=float(sc), einstein=G)


def weyl_generators(mp: MetricAtPoint, as_printed: bool = False) -> dict:
    """The Weyl generator components at a point.

    With ``as_printed=True`` the published list is reproduced exactly: the
    W_2334 entry carries ``- c*c22/4`` and the W_1234 slot is absent.  The
    default returns the repaired set (``+ c*c22/4`` and the Bianchi-forced
    W_1234).
    """
    p = _Partials(mp)
    w2334_tail = -0.25 * p.c * p.c22 if as_printed else 0.25 * p.c * p.c22
    gens = {
        (0, 2, 0, 2): p.a11 / 6.0 + p.b22 / 6.0 - p.c12 / 6.0,
        (0, 2, 0, 3): -p.b12 / 4.0 + p.c11 / 4.0,
        (0, 2, 1, 2): p.a12 / 4.0 - p.c22 / 4.0,
        (0, 2, 1, 3): p.c12 / 2.0,
        (0, 2, 2, 3): (
            p.c * p.a11 / 12.0
            - p.a * p.b12 / 4.0
            - p.c * p.b22 / 6.0
            + 5.0 * p.c * p.c12 / 12.0
            + p.b * p.c22 / 4.0
        ),
        (0, 3, 0, 3): p.b11 / 2.0,
        (0, 3, 1, 2): -p.a11 / 12.0 - p.b22 / 12.0 + p.c12 / 3.0,
        (0, 3, 1, 3): p.b12 / 4.0 - p.c11 / 4.0,
        (0, 3, 2, 3): (
            p.b * p.a11 / 12.0
            + p.a * p.b11 / 4.0
            + p.c * p.b12 / 4.0
            + p.b * p.b22 / 12.0
            - p.c * p.c11 / 4.0
            - p.b * p.c12 / 12.0
        ),
        (1, 2, 1, 2): p.a22 / 2.0,
        (1, 2, 1, 3): -p.a12 / 4.0 + p.c22 / 4.0,
        (1, 2, 2, 3): (
            -p.a * p.a11 / 12.0
            - p.c * p.a12 / 4.0
            - p.b * p.a22 / 4.0
            - p.a * p.b22 / 12.0
            + p.a * p.c12 / 12.0
            + w2334_tail
        ),
        (1, 3, 1, 3): p.a11 / 6.0 + p.b22 / 6.0 - p.c12 / 6.0,
        (1, 3, 2, 3): (
            p.c * p.a11 / 6.0
            + p.b * p.a12 / 4.0
            - p.c * p.b22 / 12.0
            - p.a * p.c11 / 4.0
            - 5.0 * p.c * p.c12 / 12.0
        ),
        (2, 3, 2, 3): (
            p.c**2 * p.a11 / 6.0
            + p.a * p.b * p.a11 / 12.0
            + p.b * p.c * p.a12 / 2.0
            + p.b**2 * p.a22 / 4.0
            + p.a**2 * p.b11 / 4.0
            + p.a * p.c * p.b12 / 2.0
            + p.c**2 * p.b22 / 6.0
            + p.a * p.b * p.b22 / 12.0
            - p.a * p.c * p.c11 / 2.0
            - 2.0 * p.c**2 * p.c12 / 3.0
            - p.a * p.b * p.c12 / 3.0
            - p.b * p.c * p.c22 / 2.0
            + p.b * p.a1 * p.c2 / 4.0
            - p.c * p.a1 * p.b2 / 4.0
            + p.c * p.a2 * p.b1 / 4.0
            - p.b * p.a2 * p.c1 / 4.0
            - p.a * p.b1 * p.c2 / 4.0
            + p.a * p.b2 * p.c1 / 4.0
        ),
    }
    if not as_printed:
        gens[(0, 1, 2, 3)] = p.a11 / 12.0 + p.b22 / 12.0 + p.c12 / 6.0
    return gens


def weyl_printed_deviation_models(mp: MetricAtPoint) -> dict:
    """Expected printed-minus-consistent deviation for the repaired slots."""
    p = _Partials(mp)
    return {
        (1, 2, 2, 3): -0.5 * p.c * p.c22,
        (0, 1, 2, 3): -(p.a11 / 12.0 + p.b22 / 12.0 + p.c12 / 6.0),
    }


def weyl_at(mp: MetricAtPoint) -> WeylComponents:
    """Weyl tensor from the repaired generator component list."""
    return WeylComponents.from_components(weyl_generators(mp))


def weyl_from_definition(
    curvature: CurvatureComponents, ricci: RicciData, mp: MetricAtPoint
) -> WeylComponents:
    """Assemble the Weyl tensor from curvature, Ricci, Sc and g in dimension 4.

    W_ijkl = R_ijkl + (Sc/6) (g_jk g_il - g_ik g_jl)
             - 1/2 (rho_jk g_il - rho_ik g_jl - rho_jl g_ik + rho_il g_jk)

    The sign of the rho block is pinned by the convention that reproduces the
    published Ricci components; with it the assembled tensor is trace-free.
    """
    g = mp.g
    rho = ricci.rho
    sc = ricci.sc
    comps = {}
    for n, (i, j) in enumerate(PAIRS):
        for k, l in PAIRS[n:]:
            comps[(i, j, k, l)] = (
                curvature.get(i, j, k, l)
                + (sc / 6.0) * (g[j, k] * g[i, l] - g[i, k] * g[j, l])
                - 0.5
                * (
                    rho[j, k] * g[i, l]
                    - rho[i, k] * g[j, l]
                    - rho[j, l] * g[i, k]
                    + rho[i, l] * g[j, k]
                )
            )
    return WeylComponents.from_components(comps)
