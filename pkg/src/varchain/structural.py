"""Cholesky-orthogonalized impulse responses, their error bands, and FEVD."""
from __future__ import annotations

import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import BadOrdering, NotPositiveDefinite, TooFewReplications
from .var import VarModel, ma_coefficients, stability

MIN_REPLICATIONS = 100


@dataclass(frozen=True)
class IrfResult:
    """Responses indexed ``[h, response, impulse]`` with both axes in `ordering`."""

    ordering: tuple
    point: np.ndarray
    lower: np.ndarray | None = None
    upper: np.ndarray | None = None
    band_method: str = "none"
    replications: int = 0
    seed: int | None = None

    @property
    def horizon(self) -> int:
        return self.point.shape[0] - 1


@dataclass(frozen=True)
class FevdTable:
    target: str
    impulses: tuple
    shares: np.ndarray  # (H, m) percentages; row h-1 is the h-step horizon

    @property
    def horizons(self):
        return list(range(1, self.shares.shape[0] + 1))


def cholesky_factor(sigma) -> np.ndarray:
    """Lower-triangular P with P P' = sigma; sigma must be symmetric positive definite."""
    sigma = np.asarray(sigma, dtype=float)
    if sigma.ndim != 2 or sigma.shape[0] != sigma.shape[1]:
        raise NotPositiveDefinite("covariance must be a square matrix")
    scale = max(np.max(np.abs(sigma)), np.finfo(float).tiny)
    if np.max(np.abs(sigma - sigma.T)) > 1e-10 * scale:
        raise NotPositiveDefinite("covariance is not symmetric")
    sym = 0.5 * (sigma + sigma.T)
    ev = np.linalg.eigvalsh(sym)
    if ev[0] <= 1e-12 * ev[-1] or ev[-1] <= 0:
        raise NotPositiveDefinite(f"covariance eigenvalues range {ev[0]:.3g}..{ev[-1]:.3g}")
    return np.linalg.cholesky(sym)


def _permutation(model: VarModel, ordering):
    if ordering is None:
        return list(range(model.nvars)), tuple(model.labels)
    ordering = tuple(ordering)
    if sorted(ordering) != sorted(model.labels) or len(set(ordering)) != len(ordering):
        raise BadOrdering(f"ordering {list(ordering)} is not a permutation of {list(model.labels)}")
    return [model.labels.index(x) for x in ordering], ordering


def _orthogonalized(coef, P, perm, horizon):
    m = coef.shape[1]
    psi = np.zeros((horizon + 1, m, m))
    psi[0] = np.eye(m)
    p = coef.shape[0]
    for h in range(1, horizon + 1):
        for i in range(1, min(h, p) + 1):
            psi[h] += coef[i - 1] @ psi[h - i]
    psi = psi[:, perm][:, :, perm]
    return psi @ P


def irf(model: VarModel, horizon: int = 10, ordering=None) -> IrfResult:
    """Responses to one-standard-deviation orthogonal shocks, Theta_h = Psi_h P.

    P is the Cholesky factor of the d.f.-adjusted residual covariance after
    permuting the variables into `ordering`.  Unstable models only warn.
    """
    if horizon < 0:
        raise ValueError("horizon must be nonnegative")
    perm, ordering = _permutation(model, ordering)
    if model.p >= 1 and not stability(model).is_stable:
        warnings.warn("VAR is not stable; impulse responses do not die out", RuntimeWarning, stacklevel=2)
    P = cholesky_factor(model.sigma_df[np.ix_(perm, perm)])
    point = _orthogonalized(model.coef, P, perm, horizon)
    return IrfResult(ordering, point)


def irf_bands(model: VarModel, horizon: int = 10, ordering=None, method: str = "monte-carlo",
              replications: int = 999, seed: int = 0, workers: int = 1) -> IrfResult:
    """Point responses with +/- 2 standard-error bands.

    Each replication draws the coefficient matrix from the asymptotic normal
    law of the least-squares estimator, vec(B) ~ N(vec(B_hat), Sigma_df (x) (X'X)^-1),
    with the impact factor P held at its point estimate.  Replication r uses
    its own stream spawned from `seed`, so the bands do not depend on `workers`.
    """
    if method != "monte-carlo":
        raise ValueError("only the 'monte-carlo' band method is available")
    if replications < MIN_REPLICATIONS:
        raise TooFewReplications(f"need at least {MIN_REPLICATIONS} replications, got {replications}")
    if model.design is None:
        raise ValueError("error bands need a model estimated from data")
    base = irf(model, horizon, ordering)
    perm, ordering = _permutation(model, ordering)
    P = cholesky_factor(model.sigma_df[np.ix_(perm, perm)])
    X = model.design
    B = model.params
    m, p, c = model.nvars, model.p, int(model.include_constant)
    chol_x = np.linalg.cholesky(np.linalg.inv(X.T @ X))
    chol_s = np.linalg.cholesky(model.sigma_df)
    streams = np.random.SeedSequence(seed).spawn(replications)

    def one(r):
        z = np.random.default_rng(streams[r]).standard_normal(B.shape)
        draw = B + chol_x @ z @ chol_s.T
        coef = np.stack([draw[c + i * m : c + (i + 1) * m].T for i in range(p)]) if p else np.zeros((0, m, m))
        return _orthogonalized(coef, P, perm, horizon)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            draws = list(pool.map(one, range(replications)))
    else:
        draws = [one(r) for r in range(replications)]
    se = np.std(np.stack(draws), axis=0, ddof=1)
    return IrfResult(ordering, base.point, base.point - 2.0 * se, base.point + 2.0 * se,
                     "monte-carlo", replications, seed)


def fevd(model: VarModel, horizon: int = 10, ordering=None) -> list:
    """Forecast-error variance shares (percent) for each variable in `ordering`."""
    if horizon < 1:
        raise ValueError("horizon must be at least 1")
    theta = irf(model, horizon - 1, ordering)
    sq = np.cumsum(theta.point ** 2, axis=0)  # [h, i, j] summed over s <= h
    shares = 100.0 * sq / sq.sum(axis=2, keepdims=True)
    return [FevdTable(name, theta.ordering, shares[:, i, :]) for i, name in enumerate(theta.ordering)]
