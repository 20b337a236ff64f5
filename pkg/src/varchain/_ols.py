"""Least-squares kernels shared by the estimators."""
import numpy as np
from scipy import linalg

from .errors import SingularDesign

CONDITION_LIMIT = 1e12


def check_design(X, error=SingularDesign):
    """Reject designs whose column-equilibrated cross-product is ill-conditioned."""
    if X.shape[1] == 0:
        return
    norms = np.sqrt(np.einsum("ij,ij->j", X, X))
    if np.any(norms == 0):
        raise error("design has an all-zero column")
    Xs = X / norms
    cond = np.linalg.cond(Xs.T @ Xs)
    if not np.isfinite(cond) or cond > CONDITION_LIMIT:
        raise error(f"design cross-product is near singular (condition number {cond:.3g})")


def lstsq_qr(X, Y):
    """Coefficients B minimising ||Y - X B|| via a thin QR factorisation."""
    if X.shape[1] == 0:
        return np.zeros((0,) + Y.shape[1:])
    Q, R = np.linalg.qr(X, mode="reduced")
    return linalg.solve_triangular(R, Q.T @ Y)


def lstsq_normal(X, Y):
    """Same estimator through the normal equations (Cholesky of X'X)."""
    if X.shape[1] == 0:
        return np.zeros((0,) + Y.shape[1:])
    return linalg.cho_solve(linalg.cho_factor(X.T @ X), X.T @ Y)


def residualize(Y, X):
    """Residuals of Y after projecting on the columns of X (Y itself if X is empty)."""
    if X is None or X.shape[1] == 0:
        return Y.copy()
    return Y - X @ lstsq_qr(X, Y)


def r_squared(y, X):
    """Centred R^2 of y regressed on X (X must contain a constant)."""
    e = y - X @ lstsq_qr(X, y)
    tss = np.sum((y - y.mean()) ** 2)
    if tss == 0:
        return 0.0
    return 1.0 - float(e @ e) / float(tss)
