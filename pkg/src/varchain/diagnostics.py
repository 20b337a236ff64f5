"""Residual diagnostics for an estimated VAR.

The serial-correlation LM test follows Edgerton and Shukur (1999): an
auxiliary system regresses the VAR residuals on the original regressors and
lagged residuals (pre-sample lags zero-filled); with Wilks' ratio
``L = det(Sigma_aux) / det(Sigma_restricted)`` and ``q`` lagged-residual
regressors per equation,

    N     = n - kbar - q - (m - q + 1) / 2
    LRE*  = -N ln L                                   ~ chi2(m q)
    s     = sqrt((m^2 q^2 - 4) / (m^2 + q^2 - 5))
    df2   = N s - m q / 2 + 1
    Rao F = (L^(-1/s) - 1) df2 / (m q)               ~ F(m q, df2)
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations_with_replacement

import numpy as np
from scipy import stats

from ._ols import check_design, lstsq_qr
from .errors import InsufficientObservations, SingularAuxiliaryDesign
from .var import VarModel


@dataclass(frozen=True)
class LmTestRow:
    lag_h: int
    mode: str  # "at-lag" or "cumulative"
    lre_stat: float
    lre_df: int
    lre_p: float
    rao_f: float
    rao_df: tuple
    rao_p: float


@dataclass(frozen=True)
class WhiteTestResult:
    chi_sq: float
    df: int
    p_value: float
    cross_terms: bool = False
    n: int = 0


def edgerton_shukur(wilks: float, n: int, kbar: int, m: int, q: int):
    """LRE* and Rao F from a Wilks ratio; returns (lre, lre_df, lre_p, F, (df1, df2), F_p)."""
    big_n = n - kbar - q - 0.5 * (m - q + 1)
    df1 = m * q
    lre = -big_n * math.log(wilks)
    lre_p = float(stats.chi2.sf(lre, df1))
    denom = m * m + q * q - 5
    s = math.sqrt((m * m * q * q - 4) / denom) if denom > 0 else 1.0
    df2 = big_n * s - 0.5 * m * q + 1.0
    if df2 <= 0:
        raise InsufficientObservations(
            f"Rao F denominator degrees of freedom {df2:.3g} <= 0; sample too small for lag order"
        )
    rao = (wilks ** (-1.0 / s) - 1.0) * df2 / df1
    rao_p = float(stats.f.sf(rao, df1, df2))
    return lre, df1, lre_p, rao, (df1, df2), rao_p


def _lagged_residuals(U, lags):
    n, m = U.shape
    out = np.zeros((n, m * len(lags)))
    for j, h in enumerate(lags):
        out[h:, j * m : (j + 1) * m] = U[: n - h]
    return out


def _require_fitted(model: VarModel):
    if model.residuals is None or model.design is None:
        raise ValueError("diagnostics need a model estimated from data")


def lm_serial_correlation(model: VarModel, h: int, mode: str = "at-lag") -> LmTestRow:
    """Multivariate LM test of no residual autocorrelation at lag h (or lags 1..h)."""
    _require_fitted(model)
    if h < 1:
        raise ValueError("h must be at least 1")
    if mode not in ("at-lag", "cumulative"):
        raise ValueError("mode must be 'at-lag' or 'cumulative'")
    U, X = model.residuals, model.design
    n, m = U.shape
    lags = [h] if mode == "at-lag" else list(range(1, h + 1))
    q = m * len(lags)
    kbar = X.shape[1]
    if n <= kbar + q:
        raise InsufficientObservations(
            f"auxiliary regression needs more than {kbar + q} observations, has {n}"
        )
    Z = np.hstack([X, _lagged_residuals(U, lags)])
    check_design(Z, SingularAuxiliaryDesign)
    E = U - Z @ lstsq_qr(Z, U)
    _, ld_aux = np.linalg.slogdet(E.T @ E / n)
    _, ld_r = np.linalg.slogdet(U.T @ U / n)
    wilks = math.exp(ld_aux - ld_r)
    lre, df1, lre_p, rao, rao_df, rao_p = edgerton_shukur(wilks, n, kbar, m, q)
    return LmTestRow(h, mode, lre, df1, lre_p, rao, rao_df, rao_p)


@dataclass(frozen=True)
class LmTable:
    at_lag: list
    cumulative: list


def lm_table(model: VarModel, max_h: int) -> LmTable:
    """Both panels of the LM table: at-lag rows and cumulative rows for h = 1..max_h."""
    at = [lm_serial_correlation(model, h, "at-lag") for h in range(1, max_h + 1)]
    cum = [lm_serial_correlation(model, h, "cumulative") for h in range(1, max_h + 1)]
    return LmTable(at, cum)


def white_regressors(model: VarModel, cross_terms: bool = False) -> np.ndarray:
    """Non-constant auxiliary regressors built from the VAR's non-constant regressors."""
    X = model.design
    if model.include_constant:
        X = X[:, 1:]
    if not cross_terms:
        return X ** 2
    cols = [X]
    cols += [(X[:, i] * X[:, j])[:, None] for i, j in combinations_with_replacement(range(X.shape[1]), 2)]
    return np.hstack(cols)


def white_heteroskedasticity(model: VarModel, cross_terms: bool = False) -> WhiteTestResult:
    """Joint White test: ``n * sum R^2`` over regressions of each u_i u_j (i <= j)."""
    _require_fitted(model)
    U = model.residuals
    n, m = U.shape
    G = white_regressors(model, cross_terms)
    g = G.shape[1]
    if g == 0:
        raise ValueError("White test needs a VAR with at least one lag")
    if n <= g + 1:
        raise InsufficientObservations(f"White test needs more than {g + 1} observations, has {n}")
    Z = np.hstack([np.ones((n, 1)), G])
    check_design(Z, SingularAuxiliaryDesign)
    pairs = list(combinations_with_replacement(range(m), 2))
    P = np.column_stack([U[:, i] * U[:, j] for i, j in pairs])
    E = P - Z @ lstsq_qr(Z, P)
    Pc = P - P.mean(axis=0)
    r2 = 1.0 - np.einsum("ij,ij->j", E, E) / np.einsum("ij,ij->j", Pc, Pc)
    stat = n * float(r2.sum())
    df = (m * (m + 1) // 2) * g
    return WhiteTestResult(float(stat), df, float(stats.chi2.sf(stat, df)), cross_terms, n)
