import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from numpy.testing import assert_allclose
from scipy import stats
from statsmodels.tsa.adfvalues import mackinnoncrit, mackinnonp
from statsmodels.tsa.stattools import adfuller

from varchain._mackinnon import tau_critical_values, tau_pvalue
from varchain.errors import ConstantSeries, MixedSpecs, TooShort, ZeroPValue
from varchain.unitroot import (UnitRootResult, adf_test, bartlett_lrv, default_adf_max_lags, fisher_group,
                               panel_unit_roots, pp_test)

SM_REG = {"constant": "c", "constant-and-trend": "ct", "none": "n"}


def _member(p, test="ADF", spec="constant"):
    return UnitRootResult("x", test, spec, -1.0, p, 0, 10)


@pytest.fixture
def walk():
    return np.random.default_rng(3).normal(size=300).cumsum()


@pytest.mark.parametrize("spec", list(SM_REG))
@pytest.mark.parametrize("lags", [0, 2, 5])
def test_adf_fixed_lag_matches_statsmodels(walk, spec, lags):
    ours = adf_test(walk, spec, lags=lags)
    stat, p, used, nobs, *_ = adfuller(walk, maxlag=lags, regression=SM_REG[spec], autolag=None)
    assert_allclose(ours.statistic, stat, rtol=1e-10)
    assert_allclose(ours.p_value, p, rtol=1e-8)
    assert ours.n_effective == nobs == walk.size - 1 - lags


@pytest.mark.parametrize("spec", list(SM_REG))
def test_adf_sic_matches_statsmodels(spec):
    y = np.random.default_rng(11).normal(size=250)
    y = np.convolve(y, [1.0, 0.6, 0.3])[:250].cumsum()
    k = default_adf_max_lags(y.size)
    ours = adf_test(y, spec, max_lags=k)
    stat, p, used, *_ = adfuller(y, maxlag=k, regression=SM_REG[spec], autolag="BIC")
    assert ours.lags_or_bandwidth == used
    assert_allclose(ours.statistic, stat, rtol=1e-10)


@pytest.mark.parametrize("spec", list(SM_REG))
def test_pvalue_surface_matches_reference(spec):
    for stat in np.linspace(-6.0, 2.0, 33):
        assert_allclose(tau_pvalue(stat, spec), mackinnonp(stat, SM_REG[spec]), rtol=1e-10, atol=1e-14)


@pytest.mark.parametrize("spec", list(SM_REG))
@pytest.mark.parametrize("nobs", [30, 100, 500])
def test_critical_values_match_reference(spec, nobs):
    cv = tau_critical_values(spec, nobs)
    assert_allclose([cv["1%"], cv["5%"], cv["10%"]], mackinnoncrit(1, SM_REG[spec], nobs), rtol=1e-10)


def test_pvalue_monotone_and_bounded():
    grid = np.linspace(-30, 30, 601)
    for spec in SM_REG:
        p = np.array([tau_pvalue(s, spec) for s in grid])
        assert np.all((p >= 0) & (p <= 1))
        assert np.all(np.diff(p) >= 0)


def test_constant_series_rejected():
    with pytest.raises(ConstantSeries):
        adf_test([5.0] * 40)
    with pytest.raises(ConstantSeries):
        pp_test([5.0] * 40)


def test_short_series_rejected():
    with pytest.raises(TooShort):
        adf_test(np.arange(12.0) ** 1.5, lags=4)
    with pytest.raises(TooShort):
        pp_test(np.arange(10.0) ** 1.5)


@pytest.mark.parametrize("spec", list(SM_REG))
def test_pp_zero_bandwidth_is_dickey_fuller(walk, spec):
    pp = pp_test(walk, spec, bandwidth=0)
    df = adf_test(walk, spec, lags=0)
    assert_allclose(pp.statistic, df.statistic, rtol=0, atol=1e-10)
    assert pp.n_effective == walk.size - 1


def test_pp_bandwidth_policies(walk):
    assert pp_test(walk).lags_or_bandwidth == math.floor(4 * (299 / 100) ** (2 / 9))
    nw = pp_test(walk, bandwidth="newey-west")
    assert nw.lags_or_bandwidth >= 0


def test_bartlett_zero_bandwidth_is_variance():
    e = np.random.default_rng(0).normal(size=50)
    assert_allclose(bartlett_lrv(e, 0), e @ e / 50)


@pytest.mark.parametrize("spec", ["constant", "constant-and-trend"])
def test_adf_affine_invariance(walk, spec):
    a = adf_test(walk, spec, lags=3).statistic
    b = adf_test(-2.5 * walk + 17.0, spec, lags=3).statistic
    assert abs(a - b) < 1e-9


def test_fisher_examples():
    g = fisher_group([_member(1.0), _member(1.0)])
    assert g.statistic == 0.0 and g.df == 4
    g = fisher_group([_member(0.5), _member(0.5)])
    assert_allclose(g.statistic, 2.77259, atol=5e-6)
    g = fisher_group([_member(1e-5)] * 5)
    assert_allclose(g.statistic, 115.129, atol=5e-4)
    assert g.df == 10 and g.p_value < 1e-15


def test_fisher_errors():
    with pytest.raises(MixedSpecs):
        fisher_group([_member(0.5), _member(0.5, test="PP")])
    with pytest.raises(MixedSpecs):
        fisher_group([_member(0.5), _member(0.5, spec="none")])
    with pytest.raises(ZeroPValue):
        fisher_group([_member(0.0), _member(0.5)])


@settings(max_examples=50, deadline=None)
@given(st.lists(st.floats(1e-12, 1.0), min_size=2, max_size=12), st.randoms(use_true_random=False))
def test_fisher_permutation_invariant(ps, rnd):
    members = [_member(p) for p in ps]
    shuffled = members[:]
    rnd.shuffle(shuffled)
    assert fisher_group(members).statistic == fisher_group(shuffled).statistic


def test_panel_table(demo_panel):
    table = panel_unit_roots(demo_panel)
    assert set(table.groups) == {"constant", "constant-and-trend", "none"}
    for g in table.groups.values():
        assert g["ADF"].df == 10 and len(g["PP"].members) == 5
    assert "Fisher" in table.note


def test_adf_null_pvalues_uniform():
    rng = np.random.default_rng(2024)
    p = [adf_test(rng.normal(size=250).cumsum(), lags=1).p_value for _ in range(1000)]
    assert stats.kstest(p, "uniform").pvalue > 0.01


def test_adf_power_against_ar_half():
    rng = np.random.default_rng(99)
    rejections = 0
    for _ in range(200):
        e = rng.normal(size=700)
        y = np.zeros(700)
        for t in range(1, 700):
            y[t] = 0.5 * y[t - 1] + e[t]
        rejections += adf_test(y[200:]).p_value < 0.05
    assert rejections / 200 >= 0.99


def test_pp_power_on_white_noise():
    rng = np.random.default_rng(5)
    hits = sum(pp_test(rng.normal(size=500)).p_value < 0.05 for _ in range(200))
    assert hits / 200 >= 0.99
