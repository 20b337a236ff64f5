"""Response-surface constants for single-series Dickey-Fuller tau statistics.

P-values: MacKinnon (1994, JBES 12(2), one-series case) asymptotic distribution
functions, ``p = Phi(sum_k c_k tau^k)`` with separate small-p / large-p
polynomials split at ``tau_star``.  Critical values: MacKinnon (2010,
Queen's Economics Dept. WP 1227) finite-sample response surfaces,
``cv(n) = b0 + b1/n + b2/n^2 + b3/n^3``.
"""
import numpy as np
from scipy.stats import norm

# keyed by deterministic spec: "none", "constant", "constant-and-trend"
TAU_MIN = {"none": -19.04, "constant": -18.83, "constant-and-trend": -16.18}
TAU_MAX = {"none": np.inf, "constant": 2.74, "constant-and-trend": 0.7}
TAU_STAR = {"none": -1.04, "constant": -1.61, "constant-and-trend": -2.89}

SMALL_P = {
    "none": (0.6344, 1.2378, 3.2496e-2),
    "constant": (2.1659, 1.4412, 3.8269e-2),
    "constant-and-trend": (3.2512, 1.6047, 4.9588e-2),
}
LARGE_P = {
    "none": (0.4797, 9.3557e-1, -0.6999e-1, 3.3066e-2),
    "constant": (1.7339, 9.3202e-1, -1.2745e-1, -1.0368e-2),
    "constant-and-trend": (2.5261, 6.1654e-1, -3.7956e-1, -6.0285e-2),
}

# rows: 1%, 5%, 10%
CRIT_2010 = {
    "none": ((-2.56574, -2.2358, -3.627, 0.0),
             (-1.94100, -0.2686, -3.365, 31.223),
             (-1.61682, 0.2656, -2.714, 25.364)),
    "constant": ((-3.43035, -6.5393, -16.786, -79.433),
                 (-2.86154, -2.8903, -4.234, -40.040),
                 (-2.56677, -1.5384, -2.809, 0.0)),
    "constant-and-trend": ((-3.95877, -9.0531, -28.428, -134.155),
                           (-3.41049, -4.3904, -9.036, -45.374),
                           (-3.12705, -2.5856, -3.925, -22.380)),
}


def tau_pvalue(stat: float, spec: str) -> float:
    if stat > TAU_MAX[spec]:
        return 1.0
    if stat < TAU_MIN[spec]:
        return 0.0
    coefs = SMALL_P[spec] if stat <= TAU_STAR[spec] else LARGE_P[spec]
    z = sum(c * stat ** k for k, c in enumerate(coefs))
    return float(norm.cdf(z))


def tau_critical_values(spec: str, nobs: int) -> dict:
    out = {}
    for level, b in zip(("1%", "5%", "10%"), CRIT_2010[spec]):
        out[level] = float(sum(bk / nobs ** k for k, bk in enumerate(b)))
    return out
