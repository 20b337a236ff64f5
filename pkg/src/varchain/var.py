"""VAR(p) estimation, lag-order selection, stability and MA representation.

Regressor layout used throughout: ``[1, y_{t-1}', ..., y_{t-p}']`` with the
constant omitted when ``include_constant`` is false.  Coefficient matrices are
stored as ``coef[i]`` = A_{i+1}, so that y_t = c + sum_i A_i y_{t-i} + u_t.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy import stats

from ._ols import check_design, lstsq_normal, lstsq_qr
from .errors import InsufficientObservations, ZeroLag
from .panel import SeriesPanel

LOG_2PI = np.log(2.0 * np.pi)


@dataclass(frozen=True, eq=False)
class VarModel:
    labels: tuple
    p: int
    intercept: np.ndarray | None
    coef: np.ndarray  # (p, m, m)
    sigma_mle: np.ndarray
    sigma_df: np.ndarray
    residuals: np.ndarray | None = None
    loglik: float = float("nan")
    n_effective: int = 0
    design: np.ndarray | None = None  # (n, kbar) regressors on the effective sample
    endog: np.ndarray | None = None  # (n, m) left-hand side on the effective sample
    years: tuple = ()

    @property
    def nvars(self) -> int:
        return len(self.labels)

    @property
    def include_constant(self) -> bool:
        return self.intercept is not None

    @property
    def regressors_per_equation(self) -> int:
        return self.nvars * self.p + int(self.include_constant)

    @property
    def params(self) -> np.ndarray:
        """Stacked (kbar, m) coefficient matrix matching `design`."""
        blocks = [] if self.intercept is None else [self.intercept[None, :]]
        blocks += [a.T for a in self.coef]
        if not blocks:
            return np.zeros((0, self.nvars))
        return np.vstack(blocks)

    @property
    def fitted(self) -> np.ndarray:
        return self.design @ self.params

    @classmethod
    def from_params(cls, coef, sigma, intercept=None, labels=None):
        """Population model with known coefficients (no data attached)."""
        coef = np.asarray(coef, dtype=float)
        if coef.ndim == 2:
            coef = coef[None]
        m = coef.shape[1] if coef.size else np.asarray(sigma).shape[0]
        sigma = np.asarray(sigma, dtype=float)
        if labels is None:
            labels = tuple(f"y{i + 1}" for i in range(m))
        return cls(
            labels=tuple(labels),
            p=coef.shape[0],
            intercept=None if intercept is None else np.asarray(intercept, dtype=float),
            coef=coef,
            sigma_mle=sigma,
            sigma_df=sigma,
        )


def lag_design(y: np.ndarray, p: int, include_constant: bool, start: int | None = None):
    """Regressors and targets for rows ``start..T-1`` (default ``start = p``)."""
    T, m = y.shape
    start = p if start is None else start
    n = T - start
    cols = [np.ones((n, 1))] if include_constant else []
    cols += [y[start - i : T - i] for i in range(1, p + 1)]
    X = np.hstack(cols) if cols else np.zeros((n, 0))
    return X, y[start:]


def _unpack(B, m, p, include_constant):
    c = int(include_constant)
    intercept = B[0].copy() if include_constant else None
    coef = np.stack([B[c + i * m : c + (i + 1) * m].T for i in range(p)]) if p else np.zeros((0, m, m))
    return intercept, coef


def gaussian_loglik(sigma_mle, n):
    m = sigma_mle.shape[0]
    _, logdet = np.linalg.slogdet(sigma_mle)
    return -0.5 * n * (m * LOG_2PI + logdet + m)


def estimate_var(panel: SeriesPanel, p: int, include_constant: bool = True, method: str = "qr") -> VarModel:
    """Equation-wise least squares for a VAR(p).

    Parameters
    ----------
    panel : SeriesPanel
    p : int
        Lag order, ``p >= 0``.
    include_constant : bool
    method : {"qr", "normal"}
        Orthogonal decomposition (default) or normal equations.
    """
    if p < 0:
        raise ValueError("lag order must be nonnegative")
    y = panel.values
    T, m = y.shape
    kbar = m * p + int(include_constant)
    n = T - p
    if n <= kbar:
        raise InsufficientObservations(
            f"VAR({p}) with {m} variables needs more than {kbar} effective observations, has {max(n, 0)}"
        )
    X, Y = lag_design(y, p, include_constant)
    check_design(X)
    solver = {"qr": lstsq_qr, "normal": lstsq_normal}[method]
    B = solver(X, Y)
    U = Y - X @ B
    cross = U.T @ U
    sigma_mle = cross / n
    sigma_df = cross / (n - kbar)
    intercept, coef = _unpack(B, m, p, include_constant)
    return VarModel(
        labels=panel.labels,
        p=p,
        intercept=intercept,
        coef=coef,
        sigma_mle=sigma_mle,
        sigma_df=sigma_df,
        residuals=U,
        loglik=gaussian_loglik(sigma_mle, n),
        n_effective=n,
        design=X,
        endog=Y,
        years=panel.years[p:],
    )


@dataclass(frozen=True)
class LagSelectionRow:
    lag: int
    loglik: float
    lr: float | None
    lr_pvalue: float | None
    fpe: float
    aic: float
    sc: float
    hq: float


@dataclass(frozen=True)
class LagSelection:
    rows: list
    chosen: dict  # criterion name -> lag
    n: int
    nvars: int
    include_constant: bool

    CRITERIA = ("lr", "fpe", "aic", "sc", "hq")


def information_criteria(loglik, n, m, lag, include_constant=True, prev_loglik=None):
    """One lag-selection row computed from a VAR log-likelihood.

    AIC/SC/HQ are per-observation (``-2 l/n + penalty/n``) with the penalty
    counting all ``m * kbar`` coefficients; FPE uses the per-equation count;
    LR is the small-sample-modified sequential statistic against lag - 1.
    """
    kbar = m * lag + int(include_constant)
    k = m * kbar
    logdet = -2.0 * loglik / n - m * (1.0 + LOG_2PI)
    fpe = ((n + kbar) / (n - kbar)) ** m * np.exp(logdet)
    aic = -2.0 * loglik / n + 2.0 * k / n
    sc = -2.0 * loglik / n + k * np.log(n) / n
    hq = -2.0 * loglik / n + 2.0 * k * np.log(np.log(n)) / n
    lr = lr_p = None
    if prev_loglik is not None:
        # ln det Sigma_{j-1} - ln det Sigma_j
        lr = (n - kbar) * 2.0 * (loglik - prev_loglik) / n
        lr_p = float(stats.chi2.sf(lr, m * m))
    return LagSelectionRow(lag, float(loglik), lr, lr_p, float(fpe), float(aic), float(sc), float(hq))


def lag_order_selection(panel: SeriesPanel, max_p: int, include_constant: bool = True,
                        lr_level: float = 0.05) -> LagSelection:
    """Compare VAR(0..max_p) on the common sample that drops the first max_p rows.

    The LR choice tests sequentially from max_p downward and keeps the first
    lag whose LR statistic is significant at `lr_level` (0 if none is).
    Ties in the other criteria go to the smaller lag.
    """
    y = panel.values
    T, m = y.shape
    n = T - max_p
    if max_p < 0 or n <= m * max_p + int(include_constant):
        raise InsufficientObservations(
            f"lag selection up to {max_p} needs more than {m * max_p + int(include_constant)} "
            f"common observations, has {max(n, 0)}"
        )
    rows = []
    prev = None
    for j in range(max_p + 1):
        X, Y = lag_design(y, j, include_constant, start=max_p)
        check_design(X)
        U = Y - X @ lstsq_qr(X, Y)
        ll = gaussian_loglik(U.T @ U / n, n)
        rows.append(information_criteria(ll, n, m, j, include_constant, prev))
        prev = ll
    chosen = {}
    for crit in ("fpe", "aic", "sc", "hq"):
        vals = [getattr(r, crit) for r in rows]
        chosen[crit] = int(np.argmin(vals))
    chosen["lr"] = 0
    for r in reversed(rows[1:]):
        if r.lr_pvalue < lr_level:
            chosen["lr"] = r.lag
            break
    return LagSelection(rows, chosen, n, m, include_constant)


def companion_matrix(model: VarModel) -> np.ndarray:
    p, m = model.p, model.nvars
    if p < 1:
        raise ZeroLag("companion matrix needs at least one lag")
    C = np.zeros((m * p, m * p))
    C[:m] = np.hstack(list(model.coef))
    C[m:, :-m] = np.eye(m * (p - 1))
    return C


@dataclass(frozen=True)
class StabilityReport:
    roots: np.ndarray  # complex, ordered by decreasing modulus
    moduli: np.ndarray
    is_stable: bool

    def triples(self):
        return [(float(z.real), float(z.imag), float(a)) for z, a in zip(self.roots, self.moduli)]


def stability(model: VarModel) -> StabilityReport:
    """Inverse roots of the AR characteristic polynomial (companion eigenvalues)."""
    roots = np.linalg.eigvals(companion_matrix(model))
    moduli = np.abs(roots)
    # descending modulus, then by real and imaginary part for a stable order
    order = np.lexsort((-roots.imag, -roots.real, -moduli))
    roots, moduli = roots[order], moduli[order]
    return StabilityReport(roots, moduli, bool(np.all(moduli < 1.0)))


def ma_coefficients(model: VarModel, horizon: int) -> np.ndarray:
    """Psi_0..Psi_H of the moving-average representation, shape (H+1, m, m)."""
    if horizon < 0:
        raise ValueError("horizon must be nonnegative")
    m, p = model.nvars, model.p
    psi = np.zeros((horizon + 1, m, m))
    psi[0] = np.eye(m)
    for h in range(1, horizon + 1):
        for i in range(1, min(h, p) + 1):
            psi[h] += model.coef[i - 1] @ psi[h - i]
    return psi


def simulate_var(coef, sigma, T, intercept=None, rng=None, burn=100, init=None):
    """Draw T observations from a Gaussian VAR after `burn` discarded steps."""
    coef = np.asarray(coef, dtype=float)
    if coef.ndim == 2:
        coef = coef[None]
    p, m = coef.shape[0], coef.shape[1]
    rng = np.random.default_rng(rng)
    c = np.zeros(m) if intercept is None else np.asarray(intercept, dtype=float)
    chol = np.linalg.cholesky(np.asarray(sigma, dtype=float))
    total = T + burn
    e = rng.standard_normal((total, m)) @ chol.T
    y = np.zeros((total + p, m))
    if init is not None:
        y[:p] = init
    for t in range(p, total + p):
        acc = c + e[t - p]
        for i in range(p):
            acc = acc + coef[i] @ y[t - 1 - i]
        y[t] = acc
    return y[p + burn :]
