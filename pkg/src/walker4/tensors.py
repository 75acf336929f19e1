"""Containers for curvature-type tensors with their algebraic symmetries.

Rank-4 tensors with the symmetries of the curvature tensor (antisymmetry in
both index pairs, symmetry under pair exchange) are stored as a symmetric
6 x 6 matrix over the antisymmetric index pairs.  Every 4-index access goes
through a sign-resolving accessor, so there is exactly one stored value per
independent component and no sign bookkeeping at call sites.  The first
Bianchi identity is deliberately NOT built into the storage; it stays an
independently testable property.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "PAIRS",
    "pair_label",
    "component_label",
    "PairSymmetricTensor",
    "CurvatureComponents",
    "WeylComponents",
    "ConnectionCoefficients",
    "RicciData",
    "CovariantDerivativeR",
]

# antisymmetric index pairs (0-based), in lexicographic order
PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
_PAIR_INDEX = {p: n for n, p in enumerate(PAIRS)}


def _pair(i: int, j: int):
    """(pair index, sign) for (i, j); (None, 0.0) when i == j."""
    if i == j:
        return None, 0.0
    if i < j:
        return _PAIR_INDEX[(i, j)], 1.0
    return _PAIR_INDEX[(j, i)], -1.0


def pair_label(i: int, j: int) -> str:
    return f"{i + 1}{j + 1}"


def component_label(i: int, j: int, k: int, l: int, symbol: str = "R") -> str:
    """1-based component name such as ``R_1313`` for 0-based indices."""
    return f"{symbol}_{i + 1}{j + 1}{k + 1}{l + 1}"


class PairSymmetricTensor:
    """Rank-4 tensor with curvature symmetries, stored on the pair basis."""

    __slots__ = ("m",)

    def __init__(self, m):
        arr = np.asarray(m, dtype=float)
        if arr.shape != (6, 6):
            raise ValueError(f"pair matrix must be (6, 6), got {arr.shape}")
        self.m = arr

    @classmethod
    def zero(cls):
        return cls(np.zeros((6, 6)))

    @classmethod
    def from_components(cls, components) -> "PairSymmetricTensor":
        """Build from {(i, j, k, l): value} with canonical keys (i<j, k<l)."""
        m = np.zeros((6, 6))
        for (i, j, k, l), v in components.items():
            pij, sij = _pair(i, j)
            pkl, skl = _pair(k, l)
            if pij is None or pkl is None:
                raise ValueError(f"degenerate index pair in component ({i},{j},{k},{l})")
            m[pij, pkl] = sij * skl * v
            m[pkl, pij] = sij * skl * v
        return cls(m)

    @classmethod
    def from_dense(cls, dense) -> "PairSymmetricTensor":
        """Read the canonical slots of a dense (4,4,4,4) array.

        Non-canonical slots are ignored; use the dense array directly when
        testing that a computation honours the symmetries.
        """
        dense = np.asarray(dense, dtype=float)
        m = np.zeros((6, 6))
        for pij, (i, j) in enumerate(PAIRS):
            for pkl, (k, l) in enumerate(PAIRS):
                m[pij, pkl] = dense[i, j, k, l]
        m = 0.5 * (m + m.T)
        return cls(m)

    def get(self, i: int, j: int, k: int, l: int) -> float:
        pij, sij = _pair(i, j)
        pkl, skl = _pair(k, l)
        if pij is None or pkl is None:
            return 0.0
        return sij * skl * self.m[pij, pkl]

    def dense(self) -> np.ndarray:
        out = np.zeros((4, 4, 4, 4))
        for i in range(4):
            for j in range(4):
                for k in range(4):
                    for l in range(4):
                        out[i, j, k, l] = self.get(i, j, k, l)
        return out

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.m)))

    def nonzero_components(self, tol: float = 0.0, symbol: str = "R") -> dict:
        """Canonical components with |value| > tol, keyed by 1-based label."""
        out = {}
        for pij, (i, j) in enumerate(PAIRS):
            for pkl in range(pij, 6):
                k, l = PAIRS[pkl]
                v = self.m[pij, pkl]
                if abs(v) > tol:
                    out[component_label(i, j, k, l, symbol)] = float(v)
        return out

    def max_deviation(self, other: "PairSymmetricTensor") -> float:
        return float(np.max(np.abs(self.m - other.m)))


class CurvatureComponents(PairSymmetricTensor):
    """(0,4) curvature tensor at a point."""


class WeylComponents(PairSymmetricTensor):
    """(0,4) Weyl conformal tensor at a point."""


@dataclass(frozen=True)
class ConnectionCoefficients:
    """Christoffel symbols gamma[k, i, j] (upper index first), symmetric in (i, j)."""

    gamma: np.ndarray = field(repr=False)

    def get(self, k: int, i: int, j: int) -> float:
        return float(self.gamma[k, i, j])

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.gamma)))

    def nonzero_components(self, tol: float = 0.0) -> dict:
        out = {}
        for k in range(4):
            for i in range(4):
                for j in range(i, 4):
                    v = self.gamma[k, i, j]
                    if abs(v) > tol:
                        out[f"gamma^{k + 1}_{i + 1}{j + 1}"] = float(v)
        return out


@dataclass(frozen=True)
class RicciData:
    """Ricci tensor, scalar curvature and Einstein tensor at a point."""

    rho: np.ndarray = field(repr=False)
    sc: float
    einstein: np.ndarray = field(repr=False)

    @property
    def lambda_estimate(self) -> float:
        # an Einstein metric in dimension 4 has rho = (Sc/4) g
        return self.sc / 4.0


@dataclass(frozen=True)
class CovariantDerivativeR:
    """Components (nabla_m R)_ijkl at a point; derivative index first."""

    values: np.ndarray = field(repr=False)

    def get(self, m: int, i: int, j: int, k: int, l: int) -> float:
        return float(self.values[m, i, j, k, l])

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.values)))
