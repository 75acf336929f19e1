"""Truncated Taylor (jet) arithmetic for smooth functions of (u1, u2).

A :class:`Jet3` packs the value of a function together with every partial
derivative through total order 3 at a point.  That is exactly the order
needed downstream: curvature consumes second derivatives of the metric
functions, and the covariant derivative of the curvature consumes one more.

Jets of the supported field kinds (polynomial, separable exponential,
constant) are produced in closed form, so polynomial propagation is exact
for integer-representable coefficients.  :func:`finite_difference_jet` is an
independent numerical cross-check that never touches the closed-form path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels

__all__ = [
    "Jet3",
    "ScalarField2",
    "jet_add",
    "jet_mul",
    "poly_field",
    "exp_field",
    "const_field",
    "zero_field",
    "finite_difference_jet",
]


class Jet3:
    """Value and all (u1, u2) partial derivatives through order 3 at a point.

    ``d[i, j]`` holds d^{i+j} f / du1^i du2^j; entries with i + j > 3 are
    structurally zero.  Instances are treated as immutable values.
    """

    __slots__ = ("d",)

    def __init__(self, d):
        arr = np.asarray(d, dtype=float)
        if arr.shape != (4, 4):
            raise ValueError(f"jet coefficient array must be (4, 4), got {arr.shape}")
        self.d = arr

    @classmethod
    def zero(cls) -> "Jet3":
        return cls(np.zeros((4, 4)))

    @classmethod
    def constant(cls, value: float) -> "Jet3":
        d = np.zeros((4, 4))
        d[0, 0] = value
        return cls(d)

    @property
    def value(self) -> float:
        return float(self.d[0, 0])

    def deriv(self, i: int, j: int) -> float:
        """Partial derivative of order (i, j); zero beyond total order 3."""
        if i < 0 or j < 0:
            raise ValueError("derivative orders must be non-negative")
        if i + j > 3:
            return 0.0
        return float(self.d[i, j])

    def __add__(self, other: "Jet3") -> "Jet3":
        return Jet3(self.d + other.d)

    def __sub__(self, other: "Jet3") -> "Jet3":
        return Jet3(self.d - other.d)

    def __neg__(self) -> "Jet3":
        return Jet3(-self.d)

    def __mul__(self, other):
        if isinstance(other, Jet3):
            return Jet3(_kernels.jet_mul(self.d, other.d))
        return Jet3(self.d * float(other))

    def __rmul__(self, other):
        return self.__mul__(other)

    def __repr__(self):
        return f"Jet3(value={self.value!r})"


def jet_add(x: Jet3, y: Jet3) -> Jet3:
    """Jet of the sum of two functions (entrywise)."""
    return x + y


def jet_mul(x: Jet3, y: Jet3) -> Jet3:
    """Jet of the product of two functions (Leibniz rule through order 3)."""
    return x * y


_SUPPORTED_KINDS = ("polynomial", "exponential", "constant")


@dataclass(frozen=True)
class ScalarField2:
    """A smooth function of (u1, u2) that can report its own exact jets.

    kind:
        ``polynomial``  - terms is a tuple of (i, j, coeff) monomials
        ``exponential`` - params is (s, p, q) for s * exp(p*u1 + q*u2)
        ``constant``    - params is (value,)
    """

    kind: str
    terms: tuple = ()
    params: tuple = ()

    def __post_init__(self):
        if self.kind not in _SUPPORTED_KINDS:
            raise ValueError(f"unsupported field kind {self.kind!r}")

    def value(self, u1: float, u2: float) -> float:
        """Evaluate the function itself (no derivatives)."""
        if self.kind == "constant":
            return float(self.params[0])
        if self.kind == "exponential":
            s, p, q = self.params
            return s * math.exp(p * u1 + q * u2)
        acc = 0.0
        for i, j, coeff in self.terms:
            acc += coeff * u1**i * u2**j
        return acc

    def jet(self, u1: float, u2: float) -> Jet3:
        """Exact jet of the field at (u1, u2)."""
        d = np.zeros((4, 4))
        if self.kind == "constant":
            d[0, 0] = self.params[0]
        elif self.kind == "exponential":
            s, p, q = self.params
            base = s * math.exp(p * u1 + q * u2)
            for di in range(4):
                for dj in range(4 - di):
                    d[di, dj] = base * p**di * q**dj
        else:
            for di in range(4):
                for dj in range(4 - di):
                    acc = 0.0
                    for i, j, coeff in self.terms:
                        if i < di or j < dj:
                            continue
                        acc += (
                            coeff
                            * _falling(i, di)
                            * _falling(j, dj)
                            * u1 ** (i - di)
                            * u2 ** (j - dj)
                        )
                    d[di, dj] = acc
        return Jet3(d)

    def depends_only_on(self, axis: int) -> bool:
        """True if the field is structurally constant along the other axis."""
        if self.kind == "constant":
            return True
        if self.kind == "exponential":
            s, p, q = self.params
            other_rate = q if axis == 0 else p
            return s == 0.0 or other_rate == 0.0
        for i, j, coeff in self.terms:
            other_power = j if axis == 0 else i
            if coeff != 0.0 and other_power != 0:
                return False
        return True

    def describe(self) -> str:
        """Short human-readable form used in reports."""
        if self.kind == "constant":
            return f"const {self.params[0]!r}"
        if self.kind == "exponential":
            s, p, q = self.params
            return f"{s!r}*exp({p!r}*u1 + {q!r}*u2)"
        if not self.terms:
            return "0"
        bits = []
        for i, j, coeff in self.terms:
            factors = [repr(coeff)]
            if i:
                factors.append(f"u1^{i}" if i > 1 else "u1")
            if j:
                factors.append(f"u2^{j}" if j > 1 else "u2")
            bits.append("*".join(factors))
        return " + ".join(bits)


def _falling(n: int, k: int) -> float:
    # n! / (n - k)!
    out = 1.0
    for m in range(n, n - k, -1):
        out *= m
    return out


def poly_field(coeffs) -> ScalarField2:
    """Polynomial field from a {(i, j): coeff} mapping or (i, j, coeff) triples.

    Exponents must be non-negative integers; zero coefficients are dropped.
    """
    if hasattr(coeffs, "items"):
        items = [(i, j, float(c)) for (i, j), c in coeffs.items()]
    else:
        items = [(i, j, float(c)) for (i, j, c) in coeffs]
    cleaned = {}
    for i, j, c in items:
        if i < 0 or j < 0 or int(i) != i or int(j) != j:
            raise ValueError(f"polynomial exponents must be non-negative integers, got ({i}, {j})")
        if c != 0.0:
            cleaned[(int(i), int(j))] = cleaned.get((int(i), int(j)), 0.0) + c
    terms = tuple(sorted((i, j, c) for (i, j), c in cleaned.items() if c != 0.0))
    if not terms:
        return ScalarField2(kind="constant", params=(0.0,))
    return ScalarField2(kind="polynomial", terms=terms)


def exp_field(s: float, p: float, q: float) -> ScalarField2:
    """Separable exponential field s * exp(p*u1 + q*u2)."""
    return ScalarField2(kind="exponential", params=(float(s), float(p), float(q)))


def const_field(value: float) -> ScalarField2:
    return ScalarField2(kind="constant", params=(float(value),))


def zero_field() -> ScalarField2:
    return const_field(0.0)


# 1-d central-difference stencils per derivative order: (offsets, weights/h^order)
_STENCILS = {
    0: ((0,), (1.0,)),
    1: ((-1, 1), (-0.5, 0.5)),
    2: ((-1, 0, 1), (1.0, -2.0, 1.0)),
    3: ((-2, -1, 1, 2), (-0.5, 1.0, -1.0, 0.5)),
}


def finite_difference_jet(field: ScalarField2, u1: float, u2: float, h: float = 1e-3) -> Jet3:
    """Estimate all partials through order 3 by central differences.

    Independent of the closed-form jet path: only ``field.value`` is called.
    Mixed partials compose the two 1-d stencils.
    """
    if h <= 0:
        raise ValueError("step size h must be positive")
    d = np.zeros((4, 4))
    for i in range(4):
        off_i, w_i = _STENCILS[i]
        for j in range(4 - i):
            off_j, w_j = _STENCILS[j]
            acc = 0.0
            for oi, wi in zip(off_i, w_i):
                for oj, wj in zip(off_j, w_j):
                    acc += wi * wj * field.value(u1 + oi * h, u2 + oj * h)
            d[i, j] = acc / h ** (i + j)
    return Jet3(d)
