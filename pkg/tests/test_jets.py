import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from walker4.jets import (
    Jet3,
    const_field,
    exp_field,
    finite_difference_jet,
    jet_add,
    jet_mul,
    poly_field,
    zero_field,
)

U1 = poly_field({(1, 0): 1.0})
U2 = poly_field({(0, 1): 1.0})


def test_additive_identity():
    f = poly_field({(2, 1): 3.0, (0, 0): -1.0})
    at = (0.7, -0.3)
    total = jet_add(zero_field().jet(*at), f.jet(*at))
    assert np.array_equal(total.d, f.jet(*at).d)


def test_add_linear_functions():
    s = jet_add(U1.jet(1.0, 2.0), U2.jet(1.0, 2.0))
    assert s.value == 3.0
    assert s.deriv(1, 0) == 1.0
    assert s.deriv(0, 1) == 1.0
    assert all(s.deriv(i, j) == 0.0 for i in range(4) for j in range(4 - i) if i + j >= 2)


def test_add_same_polynomial():
    sq = poly_field({(2, 0): 1.0})
    s = jet_add(sq.jet(1.0, 0.0), sq.jet(1.0, 0.0))
    assert s.value == 2.0
    assert s.deriv(1, 0) == 4.0
    assert s.deriv(2, 0) == 4.0


def test_multiplicative_identity():
    f = poly_field({(1, 2): -2.0, (3, 0): 0.5})
    at = (1.3, 0.4)
    prod = jet_mul(const_field(1.0).jet(*at), f.jet(*at))
    assert np.allclose(prod.d, f.jet(*at).d, rtol=0.0, atol=0.0)


def test_mul_u1_by_u1():
    prod = jet_mul(U1.jet(2.0, 0.0), U1.jet(2.0, 0.0))
    assert prod.value == 4.0
    assert prod.deriv(1, 0) == 4.0
    assert prod.deriv(2, 0) == 2.0
    assert prod.deriv(3, 0) == 0.0


def test_mul_u1_by_u2():
    prod = jet_mul(U1.jet(1.0, 1.0), U2.jet(1.0, 1.0))
    assert prod.value == 1.0
    assert prod.deriv(1, 0) == 1.0
    assert prod.deriv(0, 1) == 1.0
    assert prod.deriv(1, 1) == 1.0
    for i in range(4):
        for j in range(4 - i):
            if i + j == 3:
                assert prod.deriv(i, j) == 0.0


def test_poly_field_monomial():
    f = poly_field({(2, 0): 1.0})
    j = f.jet(3.0, 0.0)
    assert j.value == 9.0
    assert j.deriv(1, 0) == 6.0
    assert j.deriv(2, 0) == 2.0


def test_poly_field_empty_is_zero():
    f = poly_field({})
    for u1, u2 in [(0.0, 0.0), (2.0, -3.0), (10.0, 4.0)]:
        assert np.array_equal(f.jet(u1, u2).d, np.zeros((4, 4)))


def test_poly_field_bilinear_monomial():
    j = poly_field({(1, 1): 1.0}).jet(2.0, 5.0)
    assert j.value == 10.0
    assert j.deriv(1, 0) == 5.0
    assert j.deriv(0, 1) == 2.0
    assert j.deriv(1, 1) == 1.0


def test_poly_field_rejects_negative_exponents():
    with pytest.raises(ValueError):
        poly_field({(-1, 0): 1.0})


def test_exp_field_constant():
    j = exp_field(1.0, 0.0, 0.0).jet(0.3, -0.8)
    assert j.value == 1.0
    assert np.array_equal(j.d[1:, :], np.zeros((3, 4)))
    assert np.array_equal(j.d[0, 1:], np.zeros(3))


def test_exp_field_unit_rates_at_origin():
    j = exp_field(1.0, 1.0, 1.0).jet(0.0, 0.0)
    for i in range(4):
        for j_ in range(4 - i):
            assert j.deriv(i, j_) == 1.0


def test_exp_field_negative_scale_at_origin():
    # the a-function of the exponential example with both rates 1
    j = exp_field(-1.0, 1.0, 1.0).jet(0.0, 0.0)
    for i in range(4):
        for j_ in range(4 - i):
            assert j.deriv(i, j_) == -1.0


def test_finite_difference_constant_field():
    j = finite_difference_jet(const_field(2.5), 0.4, -1.1)
    assert abs(j.value - 2.5) < 1e-12
    for i in range(4):
        for j_ in range(4 - i):
            if i + j_ > 0:
                assert abs(j.deriv(i, j_)) < 1e-8


def test_finite_difference_cubic():
    j = finite_difference_jet(poly_field({(3, 0): 1.0}), 1.0, 0.0, h=1e-3)
    assert abs(j.deriv(3, 0) - 6.0) < 1e-4


def test_finite_difference_exponential():
    j = finite_difference_jet(exp_field(1.0, 1.0, 1.0), 0.0, 0.0, h=1e-3)
    for i in range(4):
        for j_ in range(4 - i):
            assert abs(j.deriv(i, j_) - 1.0) < 1e-5


def test_finite_difference_rejects_bad_step():
    with pytest.raises(ValueError):
        finite_difference_jet(const_field(1.0), 0.0, 0.0, h=0.0)


def _fd_matches_exact(field, pts):
    for u1, u2 in pts:
        exact = field.jet(u1, u2)
        fd = finite_difference_jet(field, u1, u2)
        for i in range(4):
            for j in range(4 - i):
                e, f = exact.deriv(i, j), fd.deriv(i, j)
                if i + j <= 2:
                    assert abs(e - f) <= 1e-6 + 1e-4 * abs(e)
                else:
                    assert abs(e - f) <= 1e-3 * max(1.0, abs(e))


def test_fd_cross_validates_polynomials():
    rng = np.random.default_rng(11)
    pts = rng.uniform(-1.0, 1.0, size=(6, 2))
    for _ in range(8):
        field = poly_field(
            {(i, j): rng.uniform(-2, 2) for i in range(4) for j in range(4 - i)}
        )
        _fd_matches_exact(field, pts)


def test_fd_cross_validates_exponentials():
    rng = np.random.default_rng(12)
    pts = rng.uniform(-1.0, 1.0, size=(6, 2))
    for _ in range(8):
        field = exp_field(rng.uniform(-2, 2), rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5))
        _fd_matches_exact(field, pts)


small_ints = st.integers(min_value=-4, max_value=4)


def _int_jet(draw_vals):
    d = np.zeros((4, 4))
    idx = 0
    for i in range(4):
        for j in range(4 - i):
            d[i, j] = draw_vals[idx]
            idx += 1
    return Jet3(d)


jet_strategy = st.lists(small_ints, min_size=10, max_size=10).map(_int_jet)


@settings(max_examples=60, deadline=None)
@given(jet_strategy, jet_strategy)
def test_jet_mul_commutative(x, y):
    assert np.array_equal((x * y).d, (y * x).d)


@settings(max_examples=60, deadline=None)
@given(jet_strategy, jet_strategy, jet_strategy)
def test_jet_mul_associative(x, y, z):
    # integer inputs of this size stay exactly representable through order 3
    assert np.array_equal(((x * y) * z).d, (x * (y * z)).d)


@settings(max_examples=60, deadline=None)
@given(jet_strategy, jet_strategy, jet_strategy)
def test_jet_mul_distributes_over_add(x, y, z):
    assert np.array_equal((x * (y + z)).d, (x * y + x * z).d)
