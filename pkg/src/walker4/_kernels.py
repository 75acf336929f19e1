"""Hot numeric kernels: truncated jet products and per-point tensor assembly.

Each kernel is plain nopython-compatible numpy.  When numba is available and
``WALKER4_NO_NUMBA`` is unset (or ``0``) the kernels are compiled with
``@njit(cache=True)``; otherwise the very same functions run interpreted, so
both paths execute identical arithmetic.  ``benchmarks/bench_kernels.py``
times the two side by side.

Jet layout: a float64 array of shape (4, 4) whose entry ``[i, j]`` holds
d^{i+j} f / du1^i du2^j at the base point, for i + j <= 3.  Entries with
i + j > 3 must be kept at zero by every producer.
"""

import os

import numpy as np

try:
    from numba import njit as _njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a hard dependency normally
    _HAVE_NUMBA = False

NUMBA_ENABLED = _HAVE_NUMBA and os.environ.get("WALKER4_NO_NUMBA", "0").lower() not in (
    "1",
    "true",
    "yes",
)


def _maybe_jit(fn):
    if NUMBA_ENABLED:
        return _njit(cache=True)(fn)
    return fn


# C(n, k) for n, k <= 3
_BINOM = np.array(
    [
        [1.0, 0.0, 0.0, 0.0],
        [1.0, 1.0, 0.0, 0.0],
        [1.0, 2.0, 1.0, 0.0],
        [1.0, 3.0, 3.0, 1.0],
    ]
)


@_maybe_jit
def jet_mul(x, y):
    """Leibniz product of two jets, truncated at total order 3.

    out[i, j] = sum_{p<=i, q<=j} C(i,p) C(j,q) x[p, q] y[i-p, j-q].
    Entries of order k depend only on input entries of order <= k, so the
    result is valid through the smaller of the two input validity orders.
    """
    out = np.zeros((4, 4))
    for i in range(4):
        for j in range(4 - i):
            acc = 0.0
            for p in range(i + 1):
                for q in range(j + 1):
                    acc += _BINOM[i, p] * _BINOM[j, q] * x[p, q] * y[i - p, j - q]
            out[i, j] = acc
    return out


@_maybe_jit
def jet_shift(x, axis):
    """Differentiate a jet once along u1 (axis 0) or u2 (axis 1).

    The result is valid one order lower than the input; its order-3 entries
    are set to zero.
    """
    out = np.zeros((4, 4))
    if axis == 0:
        for i in range(3):
            for j in range(3 - i):
                out[i, j] = x[i + 1, j]
    else:
        for i in range(3):
            for j in range(3 - i):
                out[i, j] = x[i, j + 1]
    return out


@_maybe_jit
def christoffel_jets(g_jets, ginv_jets):
    """Levi-Civita connection as jets from metric jets.

    gamma[k, i, j] = 1/2 g^{kl} (d_i g_jl + d_j g_il - d_l g_ij), with the
    understanding that d_3 = d_4 = 0 because nothing depends on u3, u4.
    Input jets must be valid through order 3; the output is valid through
    order 2 (order-3 entries are zeroed).
    """
    gamma = np.zeros((4, 4, 4, 4, 4))
    for k in range(4):
        for i in range(4):
            for j in range(i, 4):
                acc = np.zeros((4, 4))
                for l in range(4):
                    term = np.zeros((4, 4))
                    if i < 2:
                        term += jet_shift(g_jets[j, l], i)
                    if j < 2:
                        term += jet_shift(g_jets[i, l], j)
                    if l < 2:
                        term -= jet_shift(g_jets[i, j], l)
                    acc += jet_mul(ginv_jets[k, l], term)
                for p in range(4):
                    for q in range(3 - p):
                        gamma[k, i, j, p, q] = 0.5 * acc[p, q]
                        gamma[k, j, i, p, q] = 0.5 * acc[p, q]
    return gamma


@_maybe_jit
def riemann_jets(g_jets, gamma_jets):
    """Fully lowered curvature tensor R_ijkl as jets.

    R^l_ijk = d_i gamma^l_jk - d_j gamma^l_ik
              + gamma^l_ip gamma^p_jk - gamma^l_jp gamma^p_ik,
    lowered with the metric.  Connection jets must be valid through order 2;
    the output is valid through order 1 (higher entries zeroed), which is all
    the covariant-derivative kernel needs.
    """
    r_up = np.zeros((4, 4, 4, 4, 4, 4))
    for l in range(4):
        for i in range(4):
            for j in range(i + 1, 4):
                for k in range(4):
                    acc = np.zeros((4, 4))
                    if i < 2:
                        acc += jet_shift(gamma_jets[l, j, k], i)
                    if j < 2:
                        acc -= jet_shift(gamma_jets[l, i, k], j)
                    for p in range(4):
                        acc += jet_mul(gamma_jets[l, i, p], gamma_jets[p, j, k])
                        acc -= jet_mul(gamma_jets[l, j, p], gamma_jets[p, i, k])
                    r_up[l, i, j, k] = acc
                    r_up[l, j, i, k] = -acc
    r_dn = np.zeros((4, 4, 4, 4, 4, 4))
    for i in range(4):
        for j in range(4):
            if i == j:
                continue
            for k in range(4):
                for l in range(4):
                    acc = np.zeros((4, 4))
                    for m in range(4):
                        acc += jet_mul(g_jets[l, m], r_up[m, i, j, k])
                    r_dn[i, j, k, l, 0, 0] = acc[0, 0]
                    r_dn[i, j, k, l, 1, 0] = acc[1, 0]
                    r_dn[i, j, k, l, 0, 1] = acc[0, 1]
    return r_dn


@_maybe_jit
def nabla_riemann_values(gamma_values, r_jets):
    """Covariant derivative (nabla_m R)_ijkl at the base point.

    (nabla_m R)_ijkl = d_m R_ijkl - gamma^p_mi R_pjkl - gamma^p_mj R_ipkl
                       - gamma^p_mk R_ijpl - gamma^p_ml R_ijkp.
    Needs curvature jets valid through order 1 and connection values.
    """
    out = np.zeros((4, 4, 4, 4, 4))
    for m in range(4):
        for i in range(4):
            for j in range(4):
                for k in range(4):
                    for l in range(4):
                        if m == 0:
                            v = r_jets[i, j, k, l, 1, 0]
                        elif m == 1:
                            v = r_jets[i, j, k, l, 0, 1]
                        else:
                            v = 0.0
                        for p in range(4):
                            v -= gamma_values[p, m, i] * r_jets[p, j, k, l, 0, 0]
                            v -= gamma_values[p, m, j] * r_jets[i, p, k, l, 0, 0]
                            v -= gamma_values[p, m, k] * r_jets[i, j, p, l, 0, 0]
                            v -= gamma_values[p, m, l] * r_jets[i, j, k, p, 0, 0]
                        out[m, i, j, k, l] = v
    return out
