import numpy as np
import pytest

from walker4 import closed_form
from walker4.families import ExponentialExampleParams, make_exponential_example
from walker4.jets import poly_field, zero_field
from walker4.metric import WalkerMetric, evaluate_metric, inverse_metric
from walker4.tensors import PAIRS

from test_metric import flat_metric, random_poly_metric


def u1sq_metric():
    return WalkerMetric(a=poly_field({(2, 0): 1.0}), b=zero_field(), c=zero_field())


def quadratic_metric(K=1.0):
    return WalkerMetric(
        a=poly_field({(2, 0): K}), b=poly_field({(0, 2): K}), c=zero_field()
    )


def test_flat_everything_vanishes():
    mp = evaluate_metric(flat_metric(), (0.1, 0.2, 0.3, 0.4))
    assert closed_form.connection_at(mp).max_abs() == 0.0
    assert closed_form.curvature_at(mp).max_abs() == 0.0
    ric = closed_form.ricci_at(mp)
    assert np.max(np.abs(ric.rho)) == 0.0
    assert ric.sc == 0.0
    assert np.max(np.abs(ric.einstein)) == 0.0
    assert closed_form.weyl_at(mp).max_abs() == 0.0


def test_connection_substitution():
    mp = evaluate_metric(u1sq_metric(), (1.0, 0.0, 0.0, 0.0))
    con = closed_form.connection_at(mp)
    assert con.get(0, 0, 2) == 1.0   # from d1 a = 2 at u1 = 1
    assert con.get(0, 2, 2) == 1.0   # a * a1 / 2 = 1
    assert con.get(2, 2, 2) == -1.0  # -a1 / 2
    # everything not generated by the displayed list stays zero
    assert con.get(0, 0, 0) == 0.0
    assert con.get(3, 0, 2) == 0.0


def test_curvature_substitution():
    mp = evaluate_metric(u1sq_metric(), (0.6, -0.2, 0.0, 0.0))
    curv = closed_form.curvature_at(mp)
    assert curv.get(0, 2, 0, 2) == 1.0  # a11 / 2
    comps = curv.nonzero_components(tol=0.0)
    assert comps == {"R_1313": 1.0}
    # index symmetries through the accessor
    assert curv.get(2, 0, 0, 2) == -1.0
    assert curv.get(2, 0, 2, 0) == 1.0


def test_curvature_index_symmetries_and_first_bianchi():
    rng = np.random.default_rng(31)
    for _ in range(15):
        mp = evaluate_metric(random_poly_metric(rng), rng.uniform(-1, 1, 4))
        dense = closed_form.curvature_at(mp).dense()
        assert np.max(np.abs(dense + np.einsum("jikl->ijkl", dense))) <= 1e-10
        assert np.max(np.abs(dense + np.einsum("ijlk->ijkl", dense))) <= 1e-10
        assert np.max(np.abs(dense - np.einsum("klij->ijkl", dense))) <= 1e-10
        bianchi = dense + np.einsum("iklj->ijkl", dense) + np.einsum("iljk->ijkl", dense)
        assert np.max(np.abs(bianchi)) <= 1e-10


def test_scalar_curvature_4k():
    for K in (1.0, -2.0, 0.5):
        mp = evaluate_metric(quadratic_metric(K), (0.3, 0.7, -0.1, 0.9))
        ric = closed_form.ricci_at(mp)
        assert ric.sc == 4.0 * K
        # Einstein with rho = K g
        assert np.max(np.abs(ric.rho - K * mp.g)) <= 1e-15
        assert np.max(np.abs(ric.einstein)) <= 1e-15


def test_exponential_example_is_ricci_flat():
    m = make_exponential_example(ExponentialExampleParams(1.0, 1.0))
    mp = evaluate_metric(m, (0.0, 0.0, 0.0, 0.0))
    assert np.max(np.abs(closed_form.ricci_at(mp).rho)) <= 1e-14


def test_ricci_is_trace_of_curvature():
    # rho_ij = g^{kl} R_kijl with the closed-form curvature itself
    rng = np.random.default_rng(36)
    for _ in range(15):
        mp = evaluate_metric(random_poly_metric(rng), rng.uniform(-1, 1, 4))
        ginv = inverse_metric(mp)
        dense = closed_form.curvature_at(mp).dense()
        ric = closed_form.ricci_at(mp)
        contracted = np.einsum("kl,kijl->ij", ginv, dense)
        assert np.max(np.abs(ric.rho - contracted)) <= 1e-9
        assert abs(ric.sc - float(np.einsum("ij,ij->", ginv, ric.rho))) <= 1e-9


def test_einstein_tensor_matches_trace_free_part():
    rng = np.random.default_rng(32)
    for _ in range(20):
        mp = evaluate_metric(random_poly_metric(rng), rng.uniform(-1, 1, 4))
        ric = closed_form.ricci_at(mp)
        rebuilt = ric.rho - (ric.sc / 4.0) * mp.g
        assert np.max(np.abs(ric.einstein - rebuilt)) <= 1e-12
        trace = float(np.einsum("ij,ij->", inverse_metric(mp), ric.einstein))
        assert abs(trace) <= 1e-12


def test_weyl_substitution():
    mp = evaluate_metric(u1sq_metric(), (0.6, 1.4, 0.0, 0.0))
    w = closed_form.weyl_at(mp)
    assert w.get(0, 2, 0, 2) == pytest.approx(1.0 / 3.0, abs=1e-15)
    assert w.get(0, 3, 1, 2) == pytest.approx(-1.0 / 6.0, abs=1e-15)
    assert w.get(1, 3, 1, 3) == pytest.approx(1.0 / 3.0, abs=1e-15)


def test_weyl_definition_matches_component_list():
    rng = np.random.default_rng(33)
    for _ in range(20):
        mp = evaluate_metric(random_poly_metric(rng), rng.uniform(-1, 1, 4))
        curv = closed_form.curvature_at(mp)
        ric = closed_form.ricci_at(mp)
        w_list = closed_form.weyl_at(mp)
        w_def = closed_form.weyl_from_definition(curv, ric, mp)
        assert w_list.max_deviation(w_def) <= 1e-10


def test_weyl_definition_for_einstein_metric():
    # with rho = (Sc/4) g the definition collapses to R plus pure g-wedge terms
    mp = evaluate_metric(quadratic_metric(1.0), (0.4, -0.6, 0.0, 0.0))
    curv = closed_form.curvature_at(mp)
    ric = closed_form.ricci_at(mp)
    w_def = closed_form.weyl_from_definition(curv, ric, mp)
    g, sc = mp.g, ric.sc
    for n, (i, j) in enumerate(PAIRS):
        for k, l in PAIRS[n:]:
            expected = (
                curv.get(i, j, k, l)
                + (sc / 6.0) * (g[j, k] * g[i, l] - g[i, k] * g[j, l])
                - (sc / 8.0)
                * (
                    g[j, k] * g[i, l]
                    - g[i, k] * g[j, l]
                    - g[j, l] * g[i, k]
                    + g[i, l] * g[j, k]
                )
            )
            assert w_def.get(i, j, k, l) == pytest.approx(expected, abs=1e-13)


def test_weyl_total_tracelessness():
    rng = np.random.default_rng(34)
    for _ in range(15):
        mp = evaluate_metric(random_poly_metric(rng), rng.uniform(-1, 1, 4))
        ginv = inverse_metric(mp)
        dense = closed_form.weyl_at(mp).dense()
        for spec in ("ik,ijkl->jl", "il,ijkl->jk", "jk,ijkl->il", "jl,ijkl->ik"):
            assert np.max(np.abs(np.einsum(spec, ginv, dense))) <= 1e-10


def test_printed_weyl_generators_deviate_only_as_modelled():
    # the published list has a sign slip in W_2334 and omits W_1234; both
    # deviations from the definition assembly are exactly the modelled terms
    rng = np.random.default_rng(35)
    for _ in range(15):
        mp = evaluate_metric(random_poly_metric(rng), rng.uniform(-1, 1, 4))
        w_def = closed_form.weyl_from_definition(
            closed_form.curvature_at(mp), closed_form.ricci_at(mp), mp
        )
        printed = closed_form.weyl_generators(mp, as_printed=True)
        models = closed_form.weyl_printed_deviation_models(mp)
        for key in closed_form.weyl_generators(mp):
            gap = printed.get(key, 0.0) - w_def.get(*key) - models.get(key, 0.0)
            assert abs(gap) <= 1e-10
        # the flagged five-term generators are exactly right as printed
        assert abs(printed[(0, 2, 2, 3)] - w_def.get(0, 2, 2, 3)) <= 1e-10
        assert abs(printed[(1, 3, 2, 3)] - w_def.get(1, 3, 2, 3)) <= 1e-10
