"""Augmented Dickey-Fuller and Phillips-Perron tests with Fisher pooling."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy import stats

from ._mackinnon import tau_critical_values, tau_pvalue
from ._ols import check_design, lstsq_qr
from .errors import ConstantSeries, MixedSpecs, SingularRegression, TooShort, ZeroPValue

SPECS = ("constant", "constant-and-trend", "none")
FISHER_NOTE = ("pooled statistic is the Fisher combination -2 sum ln p_i ~ chi2(2N) of the "
               "per-series MacKinnon p-values (assumed pooling method)")
_SPEC_ALIASES = {"c": "constant", "ct": "constant-and-trend", "n": "none", "nc": "none",
                 "trend": "constant-and-trend"}


def _spec(spec: str) -> str:
    spec = _SPEC_ALIASES.get(spec, spec)
    if spec not in SPECS:
        raise ValueError(f"deterministic spec must be one of {SPECS}, got {spec!r}")
    return spec


@dataclass(frozen=True)
class UnitRootResult:
    series_label: str
    test: str  # "ADF" or "PP"
    spec: str
    statistic: float
    p_value: float
    lags_or_bandwidth: int
    n_effective: int
    critical_values: dict = field(default_factory=dict)


@dataclass(frozen=True)
class GroupUnitRootResult:
    test: str
    spec: str
    statistic: float
    df: int
    p_value: float
    members: tuple


def _deterministics(n, spec):
    if spec == "none":
        return np.zeros((n, 0))
    if spec == "constant":
        return np.ones((n, 1))
    return np.column_stack([np.ones(n), np.arange(1, n + 1, dtype=float)])


def _validate(y, min_len):
    y = np.asarray(y, dtype=float).ravel()
    if not np.all(np.isfinite(y)):
        raise ValueError("series contains non-finite values")
    if y.size and np.ptp(y) == 0:
        raise ConstantSeries("series is constant")
    if y.size < min_len:
        raise TooShort(f"series has {y.size} observations, needs at least {min_len}")
    return y


def _adf_design(y, k, spec, start):
    """Rows t = start..T-1 of dy_t on [det, y_{t-1}, dy_{t-1..t-k}]."""
    dy = np.diff(y)  # dy[t-1] = y_t - y_{t-1}
    T = y.size
    rows = np.arange(start, T)
    n = rows.size
    cols = [_deterministics(n, spec), y[rows - 1, None]]
    cols += [dy[rows - 1 - i, None] for i in range(1, k + 1)]
    return np.hstack(cols), dy[rows - 1]


def _t_ratio(X, z, col):
    beta = lstsq_qr(X, z)
    e = z - X @ beta
    n, K = X.shape
    s2 = float(e @ e) / (n - K)
    xtx_inv = np.linalg.inv(X.T @ X)
    se = math.sqrt(s2 * xtx_inv[col, col])
    return beta[col] / se, se, e, s2


def default_adf_max_lags(nobs: int) -> int:
    return int(math.floor(12.0 * (nobs / 100.0) ** 0.25))


def default_pp_bandwidth(nobs: int) -> int:
    return int(math.floor(4.0 * (nobs / 100.0) ** (2.0 / 9.0)))


def adf_test(series, spec: str = "constant", lags: int | None = None, criterion: str = "sic",
             max_lags: int | None = None, label: str = "") -> UnitRootResult:
    """Augmented Dickey-Fuller t-test of a unit root.

    With ``lags=None`` the augmentation order is chosen by `criterion`
    ("sic" or "aic") over 0..max_lags on a common sample, then the chosen
    regression is re-estimated on all usable observations.
    """
    spec = _spec(spec)
    y = np.asarray(series, dtype=float).ravel()
    if lags is None:
        if max_lags is None:
            max_lags = default_adf_max_lags(y.size)
        y = _validate(y, max_lags + 10)
        lags = _select_adf_lag(y, spec, max_lags, criterion)
    else:
        if lags < 0:
            raise ValueError("lags must be nonnegative")
        y = _validate(y, lags + 10)
    X, z = _adf_design(y, lags, spec, lags + 1)
    col = X.shape[1] - lags - 1
    check_design(X, SingularRegression)
    stat = _t_ratio(X, z, col)[0]
    n = z.size
    return UnitRootResult(label, "ADF", spec, float(stat), tau_pvalue(stat, spec), int(lags), n,
                          tau_critical_values(spec, n))


def _select_adf_lag(y, spec, max_lags, criterion):
    criterion = criterion.lower()
    if criterion not in ("aic", "sic", "bic"):
        raise ValueError("criterion must be 'aic' or 'sic'")
    best, best_ic = 0, np.inf
    for k in range(max_lags + 1):
        X, z = _adf_design(y, k, spec, max_lags + 1)
        check_design(X, SingularRegression)
        e = z - X @ lstsq_qr(X, z)
        n, K = X.shape
        penalty = 2.0 if criterion == "aic" else math.log(n)
        ic = math.log(float(e @ e) / n) + penalty * K / n
        if ic < best_ic - 1e-12:
            best, best_ic = k, ic
    return best


def newey_west_bandwidth(resid) -> int:
    """Newey-West (1994) automatic bandwidth for the Bartlett kernel, floored."""
    e = np.asarray(resid, dtype=float)
    n = e.size
    nlag = default_pp_bandwidth(n)
    g = np.array([e[j:] @ e[: n - j] / n for j in range(nlag + 1)])
    s0 = g[0] + 2.0 * g[1:].sum()
    s1 = 2.0 * np.sum(np.arange(1, nlag + 1) * g[1:])
    gamma = 1.1447 * ((s1 / s0) ** 2) ** (1.0 / 3.0)
    return int(min(math.floor(gamma * n ** (1.0 / 3.0)), n - 1))


def bartlett_lrv(resid, bandwidth: int) -> float:
    """Bartlett-kernel long-run variance with weights 1 - j/(b+1)."""
    e = np.asarray(resid, dtype=float)
    n = e.size
    f0 = e @ e / n
    for j in range(1, int(bandwidth) + 1):
        f0 += 2.0 * (1.0 - j / (bandwidth + 1.0)) * (e[j:] @ e[: n - j]) / n
    return float(f0)


def pp_test(series, spec: str = "constant", bandwidth: int | str | None = None,
            label: str = "") -> UnitRootResult:
    """Phillips-Perron Z_t test.

    `bandwidth` is a fixed integer, ``None`` for floor(4 (T/100)^(2/9)), or
    ``"newey-west"`` for the automatic selector.
    """
    spec = _spec(spec)
    y = _validate(series, 15)
    X, z = _adf_design(y, 0, spec, 1)
    col = X.shape[1] - 1
    check_design(X, SingularRegression)
    t_stat, se, e, s2 = _t_ratio(X, z, col)
    n = z.size
    if bandwidth is None:
        bw = default_pp_bandwidth(n)
    elif bandwidth == "newey-west":
        bw = newey_west_bandwidth(e)
    else:
        bw = int(bandwidth)
        if bw < 0:
            raise ValueError("bandwidth must be nonnegative")
    gamma0 = float(e @ e) / n
    f0 = bartlett_lrv(e, bw)
    stat = t_stat * math.sqrt(gamma0 / f0) - n * (f0 - gamma0) * se / (2.0 * math.sqrt(f0) * math.sqrt(s2))
    return UnitRootResult(label, "PP", spec, float(stat), tau_pvalue(stat, spec), bw, n,
                          tau_critical_values(spec, n))


def fisher_group(results) -> GroupUnitRootResult:
    """Pool independent unit-root p-values with -2 sum ln p ~ chi2(2N)."""
    results = tuple(results)
    if not results:
        raise ValueError("no results to combine")
    tests = {r.test for r in results}
    specs = {r.spec for r in results}
    if len(tests) > 1 or len(specs) > 1:
        raise MixedSpecs(f"cannot pool tests {sorted(tests)} with specs {sorted(specs)}")
    for r in results:
        if r.p_value <= 0:
            raise ZeroPValue(f"{r.series_label or 'member'} has p-value 0; Fisher statistic undefined")
    stat = -2.0 * math.fsum(math.log(r.p_value) for r in results)
    df = 2 * len(results)
    return GroupUnitRootResult(results[0].test, results[0].spec, stat, df,
                               float(stats.chi2.sf(stat, df)), results)


@dataclass(frozen=True)
class UnitRootTable:
    """Pooled ADF and PP results per deterministic spec: ``groups[spec]["ADF" | "PP"]``."""

    groups: dict
    note: str = FISHER_NOTE


def panel_unit_roots(panel, specs=SPECS, adf_kwargs=None, pp_kwargs=None) -> UnitRootTable:
    """ADF and PP per column and spec, pooled per spec with `fisher_group`."""
    out = {}
    for spec in specs:
        spec = _spec(spec)
        adf = [adf_test(panel.column(lb), spec, label=lb, **(adf_kwargs or {})) for lb in panel.labels]
        pp = [pp_test(panel.column(lb), spec, label=lb, **(pp_kwargs or {})) for lb in panel.labels]
        out[spec] = {"ADF": fisher_group(adf), "PP": fisher_group(pp)}
    return UnitRootTable(out)
