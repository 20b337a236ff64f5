import math

import numpy as np
import pytest
from numpy.testing import assert_allclose
from scipy import stats

from varchain.diagnostics import (edgerton_shukur, lm_serial_correlation, lm_table, white_heteroskedasticity,
                                  white_regressors)
from varchain.errors import InsufficientObservations
from varchain.panel import SeriesPanel
from varchain.var import estimate_var, simulate_var

from conftest import make_panel, simulated_panel


def _wilks_from_lre(lre, n, kbar, m, q):
    return math.exp(-lre / (n - kbar - q - 0.5 * (m - q + 1)))


# Printed LM table: 5 series; the (25, 46.1) and (50, 35.3) degrees of
# freedom pin the residual sample at n - kbar = 21.
@pytest.mark.parametrize("q, df2", [(5, 46.1), (10, 35.3)])
def test_rao_denominator_df(q, df2):
    *_, (d1, d2), _ = edgerton_shukur(0.5, 32, 11, 5, q)
    assert d1 == 5 * q
    assert round(d2, 1) == df2


@pytest.mark.parametrize("lre, q, rao", [(31.63721, 5, 1.349769), (55.77152, 10, 1.102219)])
def test_lre_and_rao_consistent(lre, q, rao):
    wilks = _wilks_from_lre(lre, 32, 11, 5, q)
    got = edgerton_shukur(wilks, 32, 11, 5, q)
    assert_allclose(got[0], lre, rtol=1e-12)
    # the printed F and LRE* share one Wilks ratio up to the table's rounding
    assert_allclose(got[3], rao, atol=2e-3)


@pytest.mark.parametrize("stat, df, p", [(31.63721, 25, 0.1688), (27.02157, 25, 0.3548), (55.77152, 50, 0.2668)])
def test_printed_lre_pvalues(stat, df, p):
    assert_allclose(stats.chi2.sf(stat, df), p, atol=5e-5)


@pytest.mark.parametrize("f, df, p", [(1.349769, (25, 46.1), 0.1858), (1.103809, (25, 46.1), 0.3763),
                                      (1.102219, (50, 35.3), 0.3850)])
def test_printed_rao_pvalues(f, df, p):
    assert_allclose(stats.f.sf(f, *df), p, atol=5e-4)


def test_printed_white_pvalue():
    assert_allclose(stats.chi2.sf(155.5795, 150), 0.3607, atol=5e-5)


def _five_var_model(T=60, seed=0):
    rng = np.random.default_rng(seed)
    return estimate_var(simulated_panel(rng, m=5, p=2, T=T), 2)


def test_df_anchors():
    model = _five_var_model()
    assert lm_serial_correlation(model, 1).rao_df[0] == 25
    assert lm_serial_correlation(model, 1).lre_df == 25
    assert lm_serial_correlation(model, 2, "cumulative").lre_df == 50
    res = white_heteroskedasticity(model, cross_terms=False)
    assert white_regressors(model).shape[1] == 10
    assert res.df == 150


def test_white_cross_terms_df():
    model = _five_var_model(T=200)
    g = 10 + 10 * 11 // 2
    assert white_regressors(model, cross_terms=True).shape[1] == g
    assert white_heteroskedasticity(model, cross_terms=True).df == 15 * g


def test_at_lag_one_equals_cumulative_one():
    model = _five_var_model()
    table = lm_table(model, 3)
    a, c = table.at_lag[0], table.cumulative[0]
    assert (a.lre_stat, a.rao_f, a.rao_df) == (c.lre_stat, c.rao_f, c.rao_df)


def test_lm_matches_direct_construction():
    model = _five_var_model(T=80, seed=3)
    U, X = model.residuals, model.design
    n, m = U.shape
    lagged = np.vstack([np.zeros((2, m)), U[:-2]])
    Z = np.hstack([X, lagged])
    E = U - Z @ np.linalg.lstsq(Z, U, rcond=None)[0]
    wilks = np.linalg.det(E.T @ E) / np.linalg.det(U.T @ U)
    big_n = n - X.shape[1] - m - 0.5
    row = lm_serial_correlation(model, 2)
    assert_allclose(row.lre_stat, -big_n * np.log(wilks), rtol=1e-9)


def test_white_matches_direct_construction():
    model = _five_var_model(T=80, seed=4)
    U = model.residuals
    n = U.shape[0]
    Z = np.hstack([np.ones((n, 1)), model.design[:, 1:] ** 2])
    total = 0.0
    for i in range(5):
        for j in range(i, 5):
            y = U[:, i] * U[:, j]
            e = y - Z @ np.linalg.lstsq(Z, y, rcond=None)[0]
            total += 1 - e @ e / np.sum((y - y.mean()) ** 2)
    assert_allclose(white_heteroskedasticity(model).chi_sq, n * total, rtol=1e-9)


def _permuted(model_panel, perm):
    labels = [model_panel.labels[i] for i in perm]
    return SeriesPanel(labels, model_panel.years, np.asarray(model_panel.values)[:, perm])


def test_permutation_invariance():
    panel = simulated_panel(np.random.default_rng(8), m=4, p=2, T=70)
    perm = [2, 0, 3, 1]
    a, b = estimate_var(panel, 2), estimate_var(_permuted(panel, perm), 2)
    for h in (1, 2):
        for mode in ("at-lag", "cumulative"):
            assert_allclose(lm_serial_correlation(a, h, mode).lre_stat, lm_serial_correlation(b, h, mode).lre_stat,
                            rtol=1e-9)
    for cross in (False, True):
        assert_allclose(white_heteroskedasticity(a, cross).chi_sq, white_heteroskedasticity(b, cross).chi_sq,
                        rtol=1e-9)


def test_white_scale_invariance():
    panel = simulated_panel(np.random.default_rng(9), m=3, p=2, T=70)
    y = np.asarray(panel.values).copy()
    y[:, 1] *= 37.5
    a = white_heteroskedasticity(estimate_var(panel, 2))
    b = white_heteroskedasticity(estimate_var(make_panel(y), 2))
    assert abs(a.chi_sq - b.chi_sq) < 1e-9 * max(1.0, a.chi_sq)


def test_small_sample_rejected():
    panel = simulated_panel(np.random.default_rng(2), m=3, p=1, T=12)
    model = estimate_var(panel, 2)
    with pytest.raises(InsufficientObservations):
        lm_serial_correlation(model, 3, "cumulative")


def test_lm_power_against_ar_errors():
    rng = np.random.default_rng(17)
    a = np.array([[0.4, 0.1], [0.0, 0.3]])
    hits = 0
    for _ in range(100):
        e = rng.normal(size=(560, 2))
        u = np.zeros_like(e)
        for t in range(1, 560):
            u[t] = 0.6 * u[t - 1] + e[t]
        y = np.zeros_like(u)
        for t in range(1, 560):
            y[t] = a @ y[t - 1] + u[t]
        model = estimate_var(make_panel(y[60:]), 1)
        hits += lm_serial_correlation(model, 1).rao_p < 0.05
    assert hits / 100 >= 0.95


def test_white_power_against_scale_break():
    # shock standard deviation doubles mid-sample (variance x4)
    rng = np.random.default_rng(21)
    a = np.array([[0.4, 0.1], [0.0, 0.3]])
    hits = 0
    for _ in range(100):
        e = rng.normal(size=(500, 2))
        e[250:] *= 2.0
        y = np.zeros_like(e)
        for t in range(1, 500):
            y[t] = a @ y[t - 1] + e[t]
        hits += white_heteroskedasticity(estimate_var(make_panel(y), 1)).p_value < 0.05
    assert hits / 100 >= 0.9
