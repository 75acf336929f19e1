"""Constructors for the explicit solution families, with validated parameters.

Each constructor checks its parameter constraints before returning a metric,
so an accepted instance is guaranteed (up to the sampling philosophy of this
package) to satisfy the condition the family is named after.

The Ricci-flat exponential family deserves a note.  As published, its first
defining function reads ``a = -(r1/r2) e^{r1 u1} e^{u2}``, but that metric is
Ricci-flat only on the locus r1^2 = r2^2; the printed coefficient has r1 and
r2 transposed.  The constructor below builds the corrected family

    a = -(r2/r1) E,   b = -r1 r2 E,   c = r2 E,   E = e^{r1 u1 + u2},

which is Ricci-flat (hence Einstein) for every nonzero r1, r2; at r1 = r2
the two forms coincide.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .jets import ScalarField2, exp_field, poly_field, zero_field
from .metric import WalkerMetric

__all__ = [
    "ConstraintViolation",
    "InvalidParameter",
    "EinsteinFamilyParams",
    "ConformallyFlatFamilyParams",
    "ExponentialExampleParams",
    "make_einstein_family",
    "make_conformally_flat_family",
    "make_exponential_example",
    "make_simple_examples",
]


class ConstraintViolation(ValueError):
    """A family parameter set violates one of its defining constraints."""

    def __init__(self, constraint: str, value: float, witness=None):
        self.constraint = constraint
        self.value = value
        self.witness = witness
        at = f" at {witness}" if witness is not None else ""
        super().__init__(f"constraint {constraint} violated{at}: residual {value!r}")


class InvalidParameter(ValueError):
    """A family parameter is outside its admissible range."""


def _as_single_variable_field(spec, axis: int, name: str) -> ScalarField2:
    """Coerce B(u2) / D(u1) input to a polynomial field of one variable.

    Accepts a ScalarField2 (polynomial or constant kind), a {power: coeff}
    mapping, or an iterable of (power, coeff) pairs.
    """
    if isinstance(spec, ScalarField2):
        if spec.kind not in ("polynomial", "constant"):
            raise InvalidParameter(
                f"{name} must be polynomial or constant, got kind {spec.kind!r}"
            )
        if not spec.depends_only_on(axis):
            var = "u1" if axis == 0 else "u2"
            raise InvalidParameter(f"{name} must depend on {var} only")
        return spec
    if hasattr(spec, "items"):
        pairs = list(spec.items())
    else:
        pairs = [(int(p), float(c)) for p, c in spec]
    coeffs = {}
    for power, coeff in pairs:
        key = (int(power), 0) if axis == 0 else (0, int(power))
        coeffs[key] = coeffs.get(key, 0.0) + float(coeff)
    return poly_field(coeffs)


@dataclass(frozen=True)
class EinsteinFamilyParams:
    """Parameters for the diagonal-block Einstein family.

    a = K u1^2 + A u1 + B(u2) and b = K u2^2 + C u2 + D(u1) with constant
    K, A, C and single-variable functions B, D subject to

        B' D' = 0,   (D' a)' = 0 in u1,   (B' b)' = 0 in u2.
    """

    K: float
    A: float
    C: float
    B: ScalarField2
    D: ScalarField2

    @classmethod
    def from_tables(cls, K=0.0, A=0.0, C=0.0, B=(), D=()) -> "EinsteinFamilyParams":
        return cls(
            K=float(K),
            A=float(A),
            C=float(C),
            B=_as_single_variable_field(B, axis=1, name="B"),
            D=_as_single_variable_field(D, axis=0, name="D"),
        )


# enough distinct abscissas to certify that a moderate-degree polynomial
# residual is identically zero, plus a couple of off-unit magnitudes
_CONSTRAINT_SAMPLES = np.concatenate([np.linspace(-2.0, 2.0, 21), [2.75, -3.5, 5.0]])


def make_einstein_family(params: EinsteinFamilyParams) -> WalkerMetric:
    """Metric of the Einstein family, after validating the three constraints.

    Constraint residuals are evaluated from exact jets on a fixed sample of
    (u1, u2) values; the first violated constraint raises
    :class:`ConstraintViolation` with a witness point.
    """
    p = params
    B = _as_single_variable_field(p.B, axis=1, name="B")
    D = _as_single_variable_field(p.D, axis=0, name="D")
    a_field = poly_field(
        {(2, 0): p.K, (1, 0): p.A}
        | ({(0, j): c for i, j, c in B.terms} if B.kind == "polynomial" else {(0, 0): B.params[0]})
    )
    b_field = poly_field(
        {(0, 2): p.K, (0, 1): p.C}
        | ({(i, 0): c for i, j, c in D.terms} if D.kind == "polynomial" else {(0, 0): D.params[0]})
    )

    tol = 1e-9
    for u1 in _CONSTRAINT_SAMPLES:
        for u2 in _CONSTRAINT_SAMPLES:
            bj = B.jet(u1, u2)
            dj = D.jet(u1, u2)
            aj = a_field.jet(u1, u2)
            bbj = b_field.jet(u1, u2)
            b2, b22 = bj.deriv(0, 1), bj.deriv(0, 2)
            d1, d11 = dj.deriv(1, 0), dj.deriv(2, 0)
            r1 = b2 * d1
            if abs(r1) > tol:
                raise ConstraintViolation("B2*D1", r1, witness=(u1, u2))
            r2 = d11 * aj.value + d1 * aj.deriv(1, 0)
            if abs(r2) > tol:
                raise ConstraintViolation("(D1*a)_1", r2, witness=(u1, u2))
            r3 = b22 * bbj.value + b2 * bbj.deriv(0, 1)
            if abs(r3) > tol:
                raise ConstraintViolation("(B2*b)_2", r3, witness=(u1, u2))

    return WalkerMetric(a=a_field, b=b_field, c=zero_field(), name="einstein-family")


@dataclass(frozen=True)
class ConformallyFlatFamilyParams:
    """The thirteen constants of the conformally flat polynomial family.

    a = (I/2) u1^2 + J u1 + E u1 u2 + F u2 + K
    b = -(I/2) u2^2 + L u2 + M u1 u2 + N u1 + R
    c = (M/2) u1^2 + P u1 + (E/2) u2^2 + G u2 + (Q + H)

    subject to the four relations returned by :meth:`relation_residuals`.
    Only the sum Q + H enters the metric, matching the published grouping.
    """

    E: float = 0.0
    F: float = 0.0
    G: float = 0.0
    H: float = 0.0
    I: float = 0.0
    J: float = 0.0
    K: float = 0.0
    L: float = 0.0
    M: float = 0.0
    N: float = 0.0
    P: float = 0.0
    Q: float = 0.0
    R: float = 0.0

    def relation_residuals(self) -> dict:
        qh = self.Q + self.H
        return {
            "EN-JM+IP": self.E * self.N - self.J * self.M + self.I * self.P,
            "EL-FM+IG": self.E * self.L - self.F * self.M + self.I * self.G,
            "ER-KM+I(H+Q)": self.E * self.R - self.K * self.M + self.I * qh,
            "K(LP-NG)+R(JG-FP)+(Q+H)(FN-JL)": (
                self.K * (self.L * self.P - self.N * self.G)
                + self.R * (self.J * self.G - self.F * self.P)
                + qh * (self.F * self.N - self.J * self.L)
            ),
        }


def make_conformally_flat_family(params: ConformallyFlatFamilyParams) -> WalkerMetric:
    """Metric of the conformally flat family, after validating the relations."""
    for name, value in params.relation_residuals().items():
        if abs(value) > 1e-12:
            raise ConstraintViolation(name, value)
    p = params
    a_field = poly_field({(2, 0): p.I / 2.0, (1, 0): p.J, (1, 1): p.E, (0, 1): p.F, (0, 0): p.K})
    b_field = poly_field({(0, 2): -p.I / 2.0, (0, 1): p.L, (1, 1): p.M, (1, 0): p.N, (0, 0): p.R})
    c_field = poly_field(
        {(2, 0): p.M / 2.0, (1, 0): p.P, (0, 2): p.E / 2.0, (0, 1): p.G, (0, 0): p.Q + p.H}
    )
    return WalkerMetric(a=a_field, b=b_field, c=c_field, name="conformally-flat-family")


@dataclass(frozen=True)
class ExponentialExampleParams:
    """Constants of the Ricci-flat exponential example; both must be nonzero."""

    r1: float
    r2: float


def make_exponential_example(params: ExponentialExampleParams) -> WalkerMetric:
    """The Ricci-flat exponential metric (corrected coefficient, see module note)."""
    r1, r2 = float(params.r1), float(params.r2)
    if r2 == 0.0:
        raise InvalidParameter("r2 must be nonzero")
    if r1 == 0.0:
        raise InvalidParameter("r1 must be nonzero (it divides the coefficient of a)")
    return WalkerMetric(
        a=exp_field(-r2 / r1, r1, 1.0),
        b=exp_field(-r1 * r2, r1, 1.0),
        c=exp_field(r2, r1, 1.0),
        name="exponential-example",
    )


def make_simple_examples(which: str, K: float = 0.0, shift: float = 0.0) -> WalkerMetric:
    """The three simple example metrics.

    ``zero-b``:        a = K u1 + shift, b = c = 0   (Ricci flat)
    ``zero-a``:        b = K u2 + shift, a = c = 0   (Ricci flat)
    ``quadratic-4k``:  a = K u1^2, b = K u2^2, c = 0 (Einstein, Sc = 4K)
    """
    kind = which.lower()
    if kind == "zero-b":
        return WalkerMetric(
            a=poly_field({(1, 0): K, (0, 0): shift}),
            b=zero_field(),
            c=zero_field(),
            name="zero-b",
        )
    if kind == "zero-a":
        return WalkerMetric(
            a=zero_field(),
            b=poly_field({(0, 1): K, (0, 0): shift}),
            c=zero_field(),
            name="zero-a",
        )
    if kind in ("quadratic-4k", "quadratic-4K"):
        return WalkerMetric(
            a=poly_field({(2, 0): K}),
            b=poly_field({(0, 2): K}),
            c=zero_field(),
            name="quadratic-4k",
        )
    raise InvalidParameter(f"unknown simple example {which!r}")
