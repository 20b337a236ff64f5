import warnings

import numpy as np
import pytest
from numpy.testing import assert_allclose
from statsmodels.tsa.api import VAR as SmVAR

from varchain.errors import BadOrdering, NotPositiveDefinite, TooFewReplications
from varchain.structural import cholesky_factor, fevd, irf, irf_bands
from varchain.var import VarModel, estimate_var, ma_coefficients, simulate_var

from conftest import make_panel, random_spd, random_stable_coef, simulated_panel


def test_cholesky_examples():
    assert_allclose(cholesky_factor(np.eye(3)), np.eye(3))
    assert_allclose(cholesky_factor(np.diag([4.0, 9.0])), np.diag([2.0, 3.0]))
    with pytest.raises(NotPositiveDefinite):
        cholesky_factor([[1.0, 2.0], [2.0, 1.0]])
    with pytest.raises(NotPositiveDefinite):
        cholesky_factor([[1.0, 0.5], [0.0, 1.0]])


def test_var1_matrix_power_oracle(rng):
    a = random_stable_coef(rng, 3, 1)[0]
    sigma = random_spd(rng, 3)
    res = irf(VarModel.from_params([a], sigma), 20)
    P = np.linalg.cholesky(sigma)
    for h in range(21):
        assert_allclose(res.point[h], np.linalg.matrix_power(a, h) @ P, atol=1e-10)


def test_impact_is_lower_triangular(rng):
    model = VarModel.from_params(random_stable_coef(rng, 4, 2), random_spd(rng, 4), labels=list("abcd"))
    theta0 = irf(model, 3, ordering=list("cadb")).point[0]
    assert_allclose(np.triu(theta0, 1), 0.0)


def test_responses_die_out(rng):
    model = VarModel.from_params(random_stable_coef(rng, 2, 2, radius=0.7), random_spd(rng, 2))
    point = irf(model, 40).point
    assert np.max(np.abs(point[40])) < 1e-4 * np.max(np.abs(point[0]))


def test_matches_statsmodels_orth_irf(rng):
    panel = simulated_panel(rng, m=3, p=2, T=150)
    ours = irf(estimate_var(panel, 2), 10).point
    theirs = SmVAR(np.asarray(panel.values)).fit(2, trend="c").irf(10).orth_irfs
    assert_allclose(ours, theirs, atol=1e-10)


def test_reordering_equivariance(rng):
    model = VarModel.from_params(random_stable_coef(rng, 3, 1), random_spd(rng, 3), labels=["x", "y", "z"])
    res = irf(model, 5, ordering=["z", "x", "y"])
    first = res.point[0][0]
    assert_allclose(first[1:], 0.0)
    assert_allclose(first[0], np.sqrt(model.sigma_df[2, 2]))
    assert res.ordering == ("z", "x", "y")


def test_bad_ordering(rng):
    model = VarModel.from_params(random_stable_coef(rng, 2, 1), np.eye(2), labels=["a", "b"])
    with pytest.raises(BadOrdering):
        irf(model, 3, ordering=["a", "c"])
    with pytest.raises(BadOrdering):
        fevd(model, 3, ordering=["a"])


def test_unstable_model_warns():
    model = VarModel.from_params([[[1.0]]], [[1.0]])
    with pytest.warns(RuntimeWarning):
        irf(model, 5)


def test_forecast_mse_identity(rng):
    model = VarModel.from_params(random_stable_coef(rng, 3, 2), random_spd(rng, 3))
    H = 12
    theta = irf(model, H).point
    psi = ma_coefficients(model, H)
    lhs = np.cumsum([np.diag(t @ t.T) for t in theta], axis=0)
    rhs = np.cumsum([np.diag(p @ model.sigma_df @ p.T) for p in psi], axis=0)
    assert_allclose(lhs, rhs, rtol=1e-10)


def test_fevd_examples(rng):
    model = VarModel.from_params(random_stable_coef(rng, 4, 2), random_spd(rng, 4))
    tables = fevd(model, 10)
    assert len(tables) == 4
    assert_allclose(tables[0].shares[0], [100.0, 0.0, 0.0, 0.0], atol=1e-12)
    for t in tables:
        assert t.horizons == list(range(1, 11))
        assert_allclose(t.shares.sum(axis=1), 100.0, atol=1e-6)


def test_fevd_diagonal_system():
    model = VarModel.from_params([np.diag([0.5, -0.3, 0.8])], np.diag([1.0, 2.0, 0.5]))
    for i, t in enumerate(fevd(model, 8)):
        want = np.zeros(3)
        want[i] = 100.0
        assert_allclose(t.shares, np.tile(want, (8, 1)), atol=1e-12)


def test_fevd_scale_invariance(rng):
    panel = simulated_panel(rng, m=3, p=2, T=120)
    y = np.asarray(panel.values).copy()
    y[:, 1] *= 250.0
    a = fevd(estimate_var(panel, 2), 10)
    b = fevd(estimate_var(make_panel(y), 2), 10)
    for ta, tb in zip(a, b):
        assert_allclose(ta.shares, tb.shares, atol=1e-8)


def test_fevd_matches_statsmodels(rng):
    panel = simulated_panel(rng, m=3, p=2, T=150)
    ours = fevd(estimate_var(panel, 2), 10)
    res = SmVAR(np.asarray(panel.values)).fit(2, trend="c")
    # statsmodels orthogonalizes with the same d.f.-adjusted covariance
    theirs = res.fevd(10).decomp
    for i, t in enumerate(ours):
        assert_allclose(t.shares, 100.0 * theirs[i], atol=1e-8)


def test_bands_contain_point_and_are_seeded(rng):
    model = estimate_var(simulated_panel(rng, m=2, p=1, T=100), 1)
    a = irf_bands(model, 8, replications=200, seed=3)
    b = irf_bands(model, 8, replications=200, seed=3, workers=3)
    assert np.all(a.lower <= a.point) and np.all(a.point <= a.upper)
    assert np.array_equal(a.lower, b.lower) and np.array_equal(a.upper, b.upper)
    c = irf_bands(model, 8, replications=200, seed=4)
    assert not np.array_equal(a.upper, c.upper)


def test_band_width_shrinks_with_sample():
    coef = np.array([[[0.5, 0.1], [0.2, 0.3]]])
    widths = []
    for T in (200, 2000):
        y = simulate_var(coef, np.eye(2), T, rng=np.random.default_rng(T))
        res = irf_bands(estimate_var(make_panel(y), 1), 4, replications=300, seed=1)
        widths.append(res.upper[2, 1, 0] - res.lower[2, 1, 0])
    assert widths[1] < widths[0]


def test_too_few_replications(rng):
    model = estimate_var(simulated_panel(rng, m=2, p=1, T=60), 1)
    with pytest.raises(TooFewReplications):
        irf_bands(model, 5, replications=50)
