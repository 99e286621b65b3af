import math

import numpy as np
import pytest
import scipy.sparse as sp
import scipy.sparse.linalg as spl

from sqwalk.classify import CLASS1, classify_graph
from sqwalk.errors import BadParamsError, NoPeakError, TooSmallError, ZeroProbabilityError
from sqwalk.search import (
    amplified_cost,
    check_search_instance,
    fit_log_decay,
    fit_power_law,
    fitted_peak,
    peak,
    random_walk_hitting_time,
    run_search,
    scaling_experiment,
    torus_instance,
    uniform_state,
)


def test_instance_sizes_and_invariants():
    assert torus_instance(3).N == 72
    inst = torus_instance(2)
    assert inst.N == 32 and check_search_instance(inst) == []
    assert set(inst.graph.degrees()) == {9}
    assert len(inst.blue) == 3 and len(inst.red) == 8
    with pytest.raises(TooSmallError):
        torus_instance(1)


def test_torus_graph_is_class1():
    assert classify_graph(torus_instance(3).graph).label == CLASS1


def test_uniform_state():
    assert np.allclose(uniform_state(4), 0.5)
    assert abs(np.linalg.norm(uniform_state(4608)) - 1) < 1e-13


def test_initial_probability_and_norm():
    for n in (2, 5):
        inst = torus_instance(n)
        res = run_search(inst, 30)
        assert res.p[0] == pytest.approx(8 / inst.N, abs=1e-15)
        assert res.norm_drift.max() < 1e-12
        assert np.all((res.p >= 0) & (res.p <= 1))


def test_search_amplifies():
    res = run_search(torus_instance(4), 200)
    assert res.p.max() > 3 * res.p[0]


def test_total_probability_is_one():
    inst = torus_instance(3)
    psi = uniform_state(inst.N)
    for _ in range(25):
        psi = inst.walk.step(psi)
        assert abs(np.sum(np.abs(psi) ** 2) - 1) < 1e-10


def test_raw_sums_are_not_probabilities():
    res = run_search(torus_instance(4), 20, raw_sums=True)
    assert abs(res.raw_sums[0]) == pytest.approx(8 / math.sqrt(128))
    assert np.max(np.abs(res.raw_sums)) > 1


def test_peak_rule():
    assert peak([0.1, 0.4, 0.3]) == (1, 0.4)
    with pytest.raises(NoPeakError):
        peak([0.5, 0.4, 0.3])
    # plateaus count once; the first plateau that falls afterwards wins
    assert peak([0.1, 0.2, 0.2, 0.3, 0.3, 0.25, 0.25]) == (3, 0.3)
    with pytest.raises(NoPeakError):
        peak([0.1, 0.3, 0.3, 0.3])
    with pytest.raises(BadParamsError):
        peak([0.1, 0.2])


def test_peak_n10_near_reported_law():
    t, p = peak(run_search(torus_instance(10), 80).p)
    target = 0.32 * 800 ** 0.57
    assert 0.7 * target <= t <= 1.3 * target


def test_translation_covariance():
    ref = run_search(torus_instance(3), 40).p
    for x in range(3):
        for y in range(3):
            res = run_search(torus_instance(3, (x, y)), 40).p
            assert np.max(np.abs(res - ref)) < 1e-12


def test_fits_recover_synthetic_laws():
    N = np.array([128.0, 512, 1152, 2048, 3200, 4608])
    a, b, r = fit_power_law(N, 0.32 * N ** 0.57)
    assert abs(a - 0.32) < 1e-9 and abs(b - 0.57) < 1e-9 and r < 1e-9
    c, d, r = fit_log_decay(N, 0.53 / np.log(N) ** 0.60)
    assert abs(c - 0.53) < 1e-9 and abs(d - 0.60) < 1e-9


def test_combined_cost_exponents():
    # t*/sqrt(p*) with the two laws: N^b (ln N)^(d/2)
    N = np.exp(np.linspace(5, 12, 20))
    cost = np.array([amplified_cost(0.32 * x ** 0.57, 0.53 / np.log(x) ** 0.60) for x in N])
    X = np.column_stack([np.ones_like(N), np.log(N), np.log(np.log(N))])
    coef, *_ = np.linalg.lstsq(X, np.log(cost), rcond=None)
    assert np.allclose(coef[1:], [0.57, 0.30])


def test_amplified_cost():
    assert amplified_cost(50, 0.25) == 100
    assert amplified_cost(17, 1.0) == 17
    with pytest.raises(ZeroProbabilityError):
        amplified_cost(10, 0.0)


def test_scaling_needs_four_points():
    with pytest.raises(BadParamsError):
        scaling_experiment([4, 6, 8])


def test_sine_fit_peak_is_close_to_raw():
    p = run_search(torus_instance(8), 60).p
    t_raw, p_raw = peak(p)
    t_fit, p_fit = fitted_peak(p)
    assert abs(t_fit - t_raw) < 3 and abs(p_fit - p_raw) < 0.05


def test_random_walk_hitting_time_matches_exact():
    inst = torus_instance(4)
    g = inst.graph
    a = sp.csr_matrix(g.adjacency_matrix().astype(float))
    P = sp.diags(1 / np.asarray(a.sum(1)).ravel()) @ a
    rest = np.setdiff1d(np.arange(g.n), inst.marked)
    h = spl.spsolve((sp.eye(len(rest)) - P[rest][:, rest]).tocsc(), np.ones(len(rest)))
    exact = h.sum() / g.n
    mc = random_walk_hitting_time(g, inst.marked, walkers=20000, seed=3)
    assert abs(mc - exact) / exact < 0.05
    assert random_walk_hitting_time(g, inst.marked, walkers=500, seed=3) == \
        random_walk_hitting_time(g, inst.marked, walkers=500, seed=3)
