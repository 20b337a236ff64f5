"""Text, CSV and JSON renderings of every stage result.

Each result type is first reduced to a list of blocks ``(title, header, rows,
notes)``; the three formats are views of the same blocks, so their numbers
always agree.  Numbers carry 6 significant digits with a period decimal point.
"""
from __future__ import annotations

import csv
import io
import json
import math

import numpy as np

from .cointegration import CASES, JohansenResult
from .diagnostics import LmTable, WhiteTestResult
from .errors import EmptyResult, UnsupportedFormat
from .structural import FevdTable, IrfResult
from .unitroot import UnitRootTable
from .var import LagSelection, StabilityReport, VarModel

FORMATS = ("text", "csv", "json")
EXTENSIONS = {"text": "txt", "csv": "csv", "json": "json"}


def fmt_number(x) -> str:
    if x is None:
        return "NA"
    if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
        return str(int(x))
    x = float(x)
    if math.isnan(x):
        return "NA"
    if x == 0:
        return "0"
    return f"{x:.6g}"


def _json_value(x):
    if x is None or isinstance(x, str):
        return x
    if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
        return int(x)
    if isinstance(x, (tuple, list)):
        return [_json_value(v) for v in x]
    x = float(x)
    return None if math.isnan(x) else float(f"{x:.6g}")


def _unit_root_blocks(res: UnitRootTable):
    header = ["Model", "ADF statistic", "ADF prob.", "PP statistic", "PP prob.", "df"]
    rows = []
    for spec, g in res.groups.items():
        rows.append([spec, g["ADF"].statistic, g["ADF"].p_value, g["PP"].statistic, g["PP"].p_value,
                     g["ADF"].df])
    detail_header = ["Model", "Series", "Test", "Statistic", "Prob.", "Lags/bandwidth", "Obs."]
    detail = []
    for spec, g in res.groups.items():
        for test in ("ADF", "PP"):
            for r in g[test].members:
                detail.append([spec, r.series_label, test, r.statistic, r.p_value, r.lags_or_bandwidth,
                               r.n_effective])
    return [("Group unit root tests (Fisher chi-square)", header, rows, [res.note]),
            ("Individual unit root tests", detail_header, detail, [])]


def _lag_blocks(res: LagSelection):
    header = ["Lag", "LogL", "LR", "FPE", "AIC", "SC", "HQ"]
    rows = []
    for r in res.rows:
        row = [r.lag, r.loglik, r.lr, r.fpe, r.aic, r.sc, r.hq]
        for j, crit in enumerate(("lr", "fpe", "aic", "sc", "hq"), start=2):
            if res.chosen[crit] == r.lag and not (crit == "lr" and r.lr is None):
                row[j] = fmt_number(row[j]) + "*"
        rows.append(row)
    notes = [f"* lag chosen by each criterion; common sample n = {res.n}",
             "LR: sequential modified LR test, each at 5%"]
    return [("VAR lag order selection", header, rows, notes)]


def _var_blocks(res: VarModel):
    header = ["Regressor", *res.labels]
    rows = []
    if res.intercept is not None:
        rows.append(["const", *res.intercept])
    for i, a in enumerate(res.coef, start=1):
        for j, name in enumerate(res.labels):
            rows.append([f"{name}(-{i})", *a[:, j]])
    notes = [f"VAR({res.p}); effective observations {res.n_effective}; log likelihood {fmt_number(res.loglik)}"]
    cov_rows = [[name, *res.sigma_df[i]] for i, name in enumerate(res.labels)]
    return [("VAR estimates (columns are equations)", header, rows, notes),
            ("Residual covariance (d.f. adjusted)", ["", *res.labels], cov_rows, [])]


def _stability_blocks(res: StabilityReport):
    rows = [[re, im, mod] for re, im, mod in res.triples()]
    verdict = "all roots inside the unit circle: VAR is stable" if res.is_stable else \
        "at least one root on or outside the unit circle: VAR is NOT stable"
    return [("Inverse roots of the AR characteristic polynomial", ["real", "imag", "modulus"], rows, [verdict])]


def _lm_row(r):
    df2 = f"({r.rao_df[0]}, {r.rao_df[1]:.1f})"
    return [r.lag_h, r.lre_stat, r.lre_df, r.lre_p, r.rao_f, df2, r.rao_p]


def _lm_blocks(res: LmTable):
    header = ["Lag", "LRE* stat", "df", "Prob.", "Rao F-stat", "df", "Prob."]
    return [
        ("Residual serial correlation LM tests, at lag h", header, [_lm_row(r) for r in res.at_lag],
         ["H0: no serial correlation at lag h"]),
        ("Residual serial correlation LM tests, lags 1 to h", header, [_lm_row(r) for r in res.cumulative],
         ["H0: no serial correlation at lags 1 to h"]),
    ]


def _white_blocks(res: WhiteTestResult):
    kind = "with" if res.cross_terms else "no"
    return [(f"Residual heteroskedasticity test ({kind} cross terms), joint", ["Chi-sq", "df", "Prob."],
             [[res.chi_sq, res.df, res.p_value]], [])]


def _rank_label(r):
    return "Yoktur" if r == 0 else f"En az {r}"


def _johansen_blocks(res: JohansenResult):
    m = len(res.eigenvalues)
    trace_rows = [[_rank_label(r), res.eigenvalues[r], res.trace[r], res.crit_5pct_trace[r],
                   res.p_values_trace[r]] for r in range(m)]
    max_rows = [[_rank_label(r), res.eigenvalues[r], res.max_eig[r], res.crit_5pct_maxeig[r],
                 res.p_values_maxeig[r]] for r in range(m)]
    notes = [f"deterministic case {res.det_case} ({CASES[res.det_case]}); VAR lags in levels {res.var_lags}; "
             f"T = {res.t_effective}",
             f"selected rank at 5%: trace {res.selected_rank_trace}, max-eigenvalue {res.selected_rank_maxeig}",
             "critical values and p-values from simulated asymptotic distributions"]
    return [
        ("Johansen cointegration: trace", ["Hypothesized rank", "Eigenvalue", "Trace statistic",
                                           "5% critical value", "Prob."], trace_rows, notes),
        ("Johansen cointegration: maximum eigenvalue", ["Hypothesized rank", "Eigenvalue",
                                                        "Max-eigen statistic", "5% critical value", "Prob."],
         max_rows, []),
    ]


def _irf_blocks(res: IrfResult):
    header = ["response", "impulse", "horizon", "point", "lower", "upper"]
    rows = []
    H = res.point.shape[0]
    for i, resp in enumerate(res.ordering):
        for j, imp in enumerate(res.ordering):
            for h in range(H):
                lo = None if res.lower is None else res.lower[h, i, j]
                hi = None if res.upper is None else res.upper[h, i, j]
                rows.append([resp, imp, h + 1, res.point[h, i, j], lo, hi])
    notes = ["response to Cholesky one s.d. (d.f. adjusted) innovations; horizon 1 is the impact period"]
    if res.band_method != "none":
        notes.append(f"bands: +/- 2 s.e., {res.band_method}, {res.replications} replications, seed {res.seed}")
    return [("Impulse responses", header, rows, notes)]


def _fevd_blocks(res):
    blocks = []
    for t in res:
        rows = [[h, *t.shares[h - 1]] for h in t.horizons]
        blocks.append((f"{t.target} variance decomposition", ["Dönem", *t.impulses], rows,
                       [f"Cholesky ordering: {' '.join(t.impulses)}"]))
    return blocks


_DISPATCH = [
    (UnitRootTable, _unit_root_blocks),
    (LagSelection, _lag_blocks),
    (VarModel, _var_blocks),
    (StabilityReport, _stability_blocks),
    (LmTable, _lm_blocks),
    (WhiteTestResult, _white_blocks),
    (JohansenResult, _johansen_blocks),
    (IrfResult, _irf_blocks),
]


def table_blocks(result):
    if result is None:
        raise EmptyResult("nothing to render")
    if isinstance(result, (list, tuple)):
        if not result:
            raise EmptyResult("nothing to render")
        if all(isinstance(t, FevdTable) for t in result):
            return _fevd_blocks(result)
    for cls, fn in _DISPATCH:
        if isinstance(result, cls):
            blocks = fn(result)
            if not any(rows for _, _, rows, _ in blocks):
                raise EmptyResult(f"{type(result).__name__} has no rows")
            return blocks
    raise UnsupportedFormat(f"no renderer for {type(result).__name__}")


def _text(blocks):
    out = []
    for title, header, rows, notes in blocks:
        cells = [[str(h) for h in header]] + [[c if isinstance(c, str) else fmt_number(c) for c in r] for r in rows]
        widths = [max(len(row[k]) for row in cells) for k in range(len(header))]
        lines = [title, "=" * len(title)]
        for n, row in enumerate(cells):
            lines.append("  ".join(c.ljust(w) if k == 0 else c.rjust(w) for k, (c, w) in enumerate(zip(row, widths))).rstrip())
            if n == 0:
                lines.append("  ".join("-" * w for w in widths))
        lines += notes
        out.append("\n".join(lines))
    return "\n\n".join(out) + "\n"


def _csv(blocks):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    many = len(blocks) > 1
    for n, (title, header, rows, _) in enumerate(blocks):
        if n:
            w.writerow([])
        w.writerow((["table"] if many else []) + list(header))
        for r in rows:
            w.writerow(([title] if many else []) + [c if isinstance(c, str) else fmt_number(c) for c in r])
    return buf.getvalue()


def _json(blocks):
    payload = []
    for title, header, rows, notes in blocks:
        keys = []
        for h in header:
            key = str(h) or "row"
            while key in keys:
                key += "_"
            keys.append(key)
        records = [{k: (c if isinstance(c, str) else _json_value(c)) for k, c in zip(keys, r)} for r in rows]
        payload.append({"title": title, "records": records, "notes": list(notes)})
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def render_table(result, fmt: str = "text") -> str:
    """Render a stage result; output is a pure function of the result."""
    if fmt not in FORMATS:
        raise UnsupportedFormat(f"format must be one of {FORMATS}, got {fmt!r}")
    blocks = table_blocks(result)
    return {"text": _text, "csv": _csv, "json": _json}[fmt](blocks)
