"""Johansen maximum-likelihood cointegration rank tests.

Deterministic cases use the common 1..5 numbering:

1. no deterministic terms
2. constant restricted to the cointegrating space
3. unrestricted constant (linear trends in levels, none in the relations)
4. unrestricted constant, trend restricted to the cointegrating space
5. unrestricted constant and trend
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import interpolate, linalg
from scipy.stats import norm

from ._ols import residualize
from .errors import InsufficientObservations, SingularMomentMatrix, UnsupportedDimension
from .panel import SeriesPanel

CASES = {
    1: "no deterministic terms",
    2: "restricted constant",
    3: "unrestricted constant",
    4: "restricted trend",
    5: "unrestricted trend",
}
MAX_DIM = 12


@dataclass(frozen=True)
class JohansenResult:
    labels: tuple
    eigenvalues: np.ndarray
    trace: np.ndarray
    max_eig: np.ndarray
    crit_5pct_trace: np.ndarray
    crit_5pct_maxeig: np.ndarray
    p_values_trace: np.ndarray
    p_values_maxeig: np.ndarray
    selected_rank_trace: int
    selected_rank_maxeig: int
    t_effective: int
    det_case: int
    var_lags: int


def johansen_statistics(eigenvalues, t_effective):
    """Trace and max-eigenvalue statistics for null ranks r = 0..m-1.

    trace_r = -T sum_{i>r} ln(1 - mu_i),  max_r = -T ln(1 - mu_{r+1}).
    """
    mu = np.asarray(eigenvalues, dtype=float)
    max_eig = -t_effective * np.log1p(-mu)
    trace = np.cumsum(max_eig[::-1])[::-1]
    return trace, max_eig


def select_rank(statistics, critical_values) -> int:
    """Smallest r whose null (rank <= r) is not rejected; m if every null is rejected."""
    for r, (s, c) in enumerate(zip(statistics, critical_values)):
        if not s > c:
            return r
    return len(statistics)


def _check_case(det_case):
    if det_case not in CASES:
        raise ValueError(f"det_case must be one of {sorted(CASES)}, got {det_case!r}")


@lru_cache(maxsize=None)
def _distribution(kind, det_case, dim):
    from ._johansen_tables import LEVELS, QUANTILES

    q = np.asarray(QUANTILES[kind][det_case][dim - 1])
    z = norm.ppf(LEVELS)
    keep = np.concatenate([[True], np.diff(q) > 0])
    q, z = q[keep], z[keep]
    return q, z, interpolate.PchipInterpolator(q, z, extrapolate=False)


def _lookup(kind, det_case, dim):
    kind = {"trace": "trace", "max-eig": "maxeig", "maxeig": "maxeig"}.get(kind)
    if kind is None:
        raise ValueError("kind must be 'trace' or 'max-eig'")
    _check_case(det_case)
    if not 1 <= dim <= MAX_DIM:
        raise UnsupportedDimension(f"m - r = {dim} outside 1..{MAX_DIM}")
    return _distribution(kind, det_case, dim)


def johansen_pvalue(stat: float, kind: str, m_minus_r: int, det_case: int = 3) -> float:
    """Asymptotic p-value from the embedded simulated quantile tables.

    The normal quantile of the CDF is interpolated monotonically in the
    statistic and extended linearly beyond the tabulated range.
    """
    q, z, f = _lookup(kind, det_case, m_minus_r)
    if stat <= q[0]:
        slope = (z[1] - z[0]) / (q[1] - q[0])
        zs = z[0] + slope * (stat - q[0])
    elif stat >= q[-1]:
        slope = (z[-1] - z[-2]) / (q[-1] - q[-2])
        zs = z[-1] + slope * (stat - q[-1])
    else:
        zs = float(f(stat))
    return float(norm.sf(zs))


def johansen_critical_value(kind: str, m_minus_r: int, det_case: int = 3, level: float = 0.05) -> float:
    """Upper-tail critical value (statistic with p-value `level`)."""
    q, z, _ = _lookup(kind, det_case, m_minus_r)
    target = norm.isf(level)
    return float(interpolate.PchipInterpolator(z, q)(target))


def _vecm_blocks(y, p, det_case):
    T, m = y.shape
    dy = np.diff(y, axis=0)  # dy[t-1] = y_t - y_{t-1}
    rows = np.arange(p, T)
    n = rows.size
    z0 = dy[rows - 1]
    z1 = y[rows - 1]
    short = [dy[rows - 1 - i] for i in range(1, p)]
    trend = rows.astype(float)
    ones = np.ones((n, 1))
    unrestricted = []
    if det_case == 2:
        z1 = np.hstack([z1, ones])
    elif det_case == 3:
        unrestricted.append(ones)
    elif det_case == 4:
        z1 = np.hstack([z1, trend[:, None]])
        unrestricted.append(ones)
    elif det_case == 5:
        unrestricted += [ones, trend[:, None]]
    z2 = np.hstack(unrestricted + short) if (unrestricted or short) else np.zeros((n, 0))
    return z0, z1, z2


def johansen_eigenvalues(y, p: int, det_case: int = 3):
    """Ordered eigenvalues of det(lambda S11 - S10 S00^-1 S01) = 0 and the sample size."""
    _check_case(det_case)
    y = np.asarray(y, dtype=float)
    T, m = y.shape
    if p < 1:
        raise ValueError("VAR lag order in levels must be at least 1")
    z0, z1, z2 = _vecm_blocks(y, p, det_case)
    n = z0.shape[0]
    if n <= z2.shape[1] + z1.shape[1]:
        raise InsufficientObservations(
            f"Johansen regression needs more than {z2.shape[1] + z1.shape[1]} observations, has {n}"
        )
    r0 = residualize(z0, z2)
    r1 = residualize(z1, z2)
    s00 = r0.T @ r0 / n
    s01 = r0.T @ r1 / n
    s11 = r1.T @ r1 / n
    try:
        c00 = linalg.cho_factor(s00, lower=True)
        l11 = linalg.cholesky(s11, lower=True)
    except linalg.LinAlgError:
        raise SingularMomentMatrix("residual moment matrix is not positive definite") from None
    for mat in (s00, s11):
        ev = np.linalg.eigvalsh(mat)
        if ev[0] <= 1e-12 * ev[-1]:
            raise SingularMomentMatrix("residual moment matrix is near singular")
    # whiten with S11 = L L': eigenvalues of L^-1 S10 S00^-1 S01 L^-T
    a = linalg.solve_triangular(l11, s01.T, lower=True)
    mat = a @ linalg.cho_solve(c00, a.T)
    mat = 0.5 * (mat + mat.T)
    lam = np.linalg.eigvalsh(mat)[::-1][:m]
    return np.clip(lam, 0.0, np.nextafter(1.0, 0.0)), n


def johansen(panel: SeriesPanel, var_lags_p: int, det_case: int = 3) -> JohansenResult:
    """Trace and max-eigenvalue rank tests from a VAR(p) in levels (p - 1 differenced lags)."""
    y = panel.values
    m = y.shape[1]
    if m > MAX_DIM:
        raise UnsupportedDimension(f"{m} variables exceeds the tabulated maximum of {MAX_DIM}")
    mu, n = johansen_eigenvalues(y, var_lags_p, det_case)
    trace, max_eig = johansen_statistics(mu, n)
    dims = [m - r for r in range(m)]
    cv_t = np.array([johansen_critical_value("trace", d, det_case) for d in dims])
    cv_m = np.array([johansen_critical_value("max-eig", d, det_case) for d in dims])
    p_t = np.array([johansen_pvalue(s, "trace", d, det_case) for s, d in zip(trace, dims)])
    p_m = np.array([johansen_pvalue(s, "max-eig", d, det_case) for s, d in zip(max_eig, dims)])
    return JohansenResult(
        labels=panel.labels,
        eigenvalues=mu,
        trace=trace,
        max_eig=max_eig,
        crit_5pct_trace=cv_t,
        crit_5pct_maxeig=cv_m,
        p_values_trace=p_t,
        p_values_maxeig=p_m,
        selected_rank_trace=select_rank(trace, cv_t),
        selected_rank_maxeig=select_rank(max_eig, cv_m),
        t_effective=n,
        det_case=det_case,
        var_lags=var_lags_p,
    )
