"""Generate the embedded quantile tables for Johansen trace / max-eigenvalue tests.

The asymptotic null distributions are functionals of an n-dimensional standard
Brownian motion W:

    trace  = tr{ int dW F' (int F F')^-1 int F dW' }
    maxeig = largest eigenvalue of the same matrix

where F depends on the deterministic case (1..5, restricted/unrestricted
constant and trend).  Each functional is approximated on a grid of T steps.
The O(1/T) discretization bias is removed from the mean and variance by
Richardson extrapolation between T and T/2 (the coarse path is built by
aggregating increments of the fine path, so both share the same Brownian
draw).  Quantiles are then ``mean + z_p * sd`` with the standardized shape
z_p taken from the fine grid.

Usage::

    python scripts/simulate_johansen_tables.py --reps 100000 \
        --out src/varchain/_johansen_tables.py
"""
import argparse
import json
import time

import numpy as np
from scipy import stats

LEVELS = (
    0.001, 0.005, 0.01, 0.025, 0.05, 0.10, 0.15, 0.20, 0.25, 0.30, 0.35, 0.40,
    0.45, 0.50, 0.55, 0.60, 0.65, 0.70, 0.75, 0.80, 0.85, 0.90, 0.925, 0.95,
    0.96, 0.97, 0.975, 0.98, 0.99, 0.995, 0.9975, 0.999,
)


# One stochastic trend next to an unrestricted constant (or trend): the
# limit is exactly chi2(1), so the simulated cell is replaced by it.
EXACT_CHI2_CASES = (3, 5)


def _levels_regressors(W, u, case):
    B, T, n = W.shape
    uu = np.broadcast_to(u[None, :, None], (B, T, 1))

    def demean(X):
        return X - X.mean(axis=1, keepdims=True)

    def detrend(X):
        D = np.stack([np.ones(T), u], axis=1)
        coef = np.einsum("sd,bsk->bdk", np.linalg.pinv(D).T, X)
        return X - np.einsum("td,bdk->btk", D, coef)

    if case == 1:
        return W
    if case == 2:
        return np.concatenate([W, np.ones((B, T, 1))], axis=2)
    if case == 3:
        return np.concatenate([demean(W[:, :, : n - 1]), demean(uu)], axis=2)
    if case == 4:
        return np.concatenate([demean(W), demean(uu)], axis=2)
    if case == 5:
        return detrend(np.concatenate([W[:, :, : n - 1], uu ** 2], axis=2))
    raise ValueError(case)


def _statistics(e, case):
    B, T, n = e.shape
    W = np.cumsum(e, axis=1) - e
    u = np.arange(T) / T
    F = _levels_regressors(W, u, case)
    S = np.einsum("btk,btn->bkn", F, e)
    M = np.einsum("btk,btl->bkl", F, F)
    Q = np.einsum("bkn,bkl->bnl", S, np.linalg.solve(M, S))
    ev = np.linalg.eigvalsh(Q)
    return ev.sum(axis=1), ev[:, -1]


def simulate(case, n, reps, T, rng, batch=400):
    fine = {"trace": [], "maxeig": []}
    coarse = {"trace": [], "maxeig": []}
    for start in range(0, reps, batch):
        b = min(batch, reps - start)
        e = rng.standard_normal((b, T, n))
        tr, mx = _statistics(e, case)
        fine["trace"].append(tr)
        fine["maxeig"].append(mx)
        e2 = (e[:, 0::2] + e[:, 1::2]) / np.sqrt(2.0)
        tr, mx = _statistics(e2, case)
        coarse["trace"].append(tr)
        coarse["maxeig"].append(mx)
    out = {}
    for kind in ("trace", "maxeig"):
        a = np.concatenate(fine[kind])
        c = np.concatenate(coarse[kind])
        mean = 2 * a.mean() - c.mean()
        var = 2 * a.var() - c.var()
        z = (np.quantile(a, LEVELS) - a.mean()) / a.std()
        q = mean + z * np.sqrt(var)
        q = np.maximum.accumulate(np.maximum(q, 0.0))
        out[kind] = {"mean": float(mean), "var": float(var), "quantiles": [float(x) for x in q]}
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--reps", type=int, default=100_000)
    ap.add_argument("--steps", type=int, default=1000)
    ap.add_argument("--max-dim", type=int, default=12)
    ap.add_argument("--seed", type=int, default=19990101)
    ap.add_argument("--json", default="johansen_sim.json")
    ap.add_argument("--out", default=None)
    args = ap.parse_args()

    ss = np.random.SeedSequence(args.seed)
    streams = ss.spawn(5 * args.max_dim)
    try:
        with open(args.json) as fh:
            results = json.load(fh)
    except FileNotFoundError:
        results = {}
    for case in range(1, 6):
        for n in range(1, args.max_dim + 1):
            key = f"{case}:{n}"
            if key in results:
                continue
            t0 = time.time()
            rng = np.random.default_rng(streams[(case - 1) * args.max_dim + n - 1])
            results[key] = simulate(case, n, args.reps, args.steps, rng)
            with open(args.json, "w") as fh:
                json.dump(results, fh)
            print(key, f"{time.time() - t0:.1f}s",
                  round(results[key]["trace"]["quantiles"][LEVELS.index(0.95)], 3),
                  round(results[key]["maxeig"]["quantiles"][LEVELS.index(0.95)], 3),
                  flush=True)
    if args.out:
        write_module(results, args.out, args)


def write_module(results, path, args):
    lines = [
        '"""Simulated asymptotic quantiles of the Johansen trace and max-eigenvalue',
        "statistics.",
        "",
        "Generated by scripts/simulate_johansen_tables.py "
        f"(reps={args.reps}, steps={args.steps}, seed={args.seed}).  Do not edit.",
        "",
        "QUANTILES[kind][case][n - 1] holds the statistic values at the CDF levels",
        'in LEVELS, for n = m - r = 1..12 stochastic trends under the null."""',
        "",
        f"LEVELS = {tuple(LEVELS)!r}",
        "",
        "QUANTILES = {",
    ]
    for kind in ("trace", "maxeig"):
        lines.append(f'    "{kind}": {{')
        for case in range(1, 6):
            lines.append(f"        {case}: (")
            for n in range(1, args.max_dim + 1):
                q = results[f"{case}:{n}"][kind]["quantiles"]
                if n == 1 and case in EXACT_CHI2_CASES:
                    q = stats.chi2.ppf(LEVELS, 1)
                lines.append("            (" + ", ".join(f"{x:.5f}" for x in q) + "),")
            lines.append("        ),")
        lines.append("    },")
    lines.append("}")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
