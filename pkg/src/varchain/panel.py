"""Aligned annual multivariate series: loading, validation and transforms."""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .errors import (
    DivisionByZero,
    DuplicateYear,
    MissingValue,
    NonNumericCell,
    NonPositiveLog,
    PanelError,
    UnknownLabel,
    YearGap,
)

TRANSFORMS = ("identity", "percent-change", "log-difference", "first-difference")

DEMO_LABELS = ("GSYIH", "IMALAT", "KIMYA", "MADEN", "ENERJI")


@dataclass(frozen=True, eq=False)
class SeriesPanel:
    """T x m matrix of annual observations with variable labels and year stamps.

    The value matrix is copied and made read-only on construction.
    """

    labels: tuple
    years: tuple
    values: np.ndarray

    def __post_init__(self):
        labels = tuple(str(x) for x in self.labels)
        years = tuple(int(y) for y in self.years)
        values = np.array(self.values, dtype=float, copy=True)
        if values.ndim == 1:
            values = values[:, None]
        if values.ndim != 2:
            raise PanelError("values must be a T x m matrix")
        T, m = values.shape
        if m < 1 or len(labels) != m:
            raise PanelError(f"{len(labels)} labels for {m} columns")
        if len(set(labels)) != m:
            raise PanelError("labels must be unique")
        if T < 2 or len(years) != T:
            raise PanelError(f"need at least 2 observations with one year each, got {T}")
        for a, b in zip(years, years[1:]):
            if b == a:
                raise DuplicateYear(f"year {a} appears twice")
            if b != a + 1:
                raise YearGap(f"years jump from {a} to {b}")
        bad = np.argwhere(~np.isfinite(values))
        if len(bad):
            r, c = bad[0]
            raise MissingValue(int(r), labels[c])
        values.setflags(write=False)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "years", years)
        object.__setattr__(self, "values", values)

    @property
    def nobs(self) -> int:
        return self.values.shape[0]

    @property
    def nvars(self) -> int:
        return self.values.shape[1]

    def column(self, label: str) -> np.ndarray:
        try:
            return self.values[:, self.labels.index(label)]
        except ValueError:
            raise UnknownLabel(label) from None

    def __eq__(self, other):
        if not isinstance(other, SeriesPanel):
            return NotImplemented
        return (
            self.labels == other.labels
            and self.years == other.years
            and np.array_equal(self.values, other.values)
        )

    __hash__ = None

    def to_csv(self) -> str:
        """Serialize in the same layout `load_panel` reads (floats round-trip exactly)."""
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["year", *self.labels])
        for year, row in zip(self.years, self.values):
            w.writerow([year, *(repr(float(x)) for x in row)])
        return buf.getvalue()


def load_panel(csv_text: str, expected_labels: Sequence[str] | None = None) -> SeriesPanel:
    """Parse CSV text whose first column holds integer years.

    If `expected_labels` is given the result holds exactly those columns, in
    that order.
    """
    rows = list(csv.reader(io.StringIO(csv_text)))
    rows = [r for r in rows if any(cell.strip() for cell in r)]
    if not rows:
        raise PanelError("empty CSV input")
    header = [h.strip() for h in rows[0]]
    labels = header[1:]
    if not labels:
        raise PanelError("CSV needs a year column and at least one series column")
    years, data = [], []
    for i, raw in enumerate(rows[1:], start=1):
        cells = [c.strip() for c in raw] + [""] * (len(header) - len(raw))
        if len(cells) > len(header):
            raise PanelError(f"data row {i} has {len(raw)} cells, header has {len(header)}")
        if not cells[0]:
            raise MissingValue(i, header[0])
        try:
            years.append(int(cells[0]))
        except ValueError:
            raise NonNumericCell(i, header[0], cells[0]) from None
        vals = []
        for label, cell in zip(labels, cells[1:]):
            if not cell:
                raise MissingValue(i, label)
            try:
                x = float(cell)
            except ValueError:
                raise NonNumericCell(i, label, cell) from None
            if not math.isfinite(x):
                raise MissingValue(i, label)
            vals.append(x)
        data.append(vals)
    if len(set(years)) != len(years):
        dup = sorted(y for y in set(years) if years.count(y) > 1)
        raise DuplicateYear(f"duplicate year(s): {dup}")
    panel = SeriesPanel(labels, years, np.array(data, dtype=float).reshape(len(data), len(labels)))
    if expected_labels is not None:
        panel = subpanel(panel, expected_labels)
    return panel


def read_panel(path, expected_labels=None) -> SeriesPanel:
    with open(path, encoding="utf-8") as fh:
        return load_panel(fh.read(), expected_labels)


def subpanel(panel: SeriesPanel, labels: Sequence[str]) -> SeriesPanel:
    idx = []
    for label in labels:
        if label not in panel.labels:
            raise UnknownLabel(label)
        idx.append(panel.labels.index(label))
    return SeriesPanel(tuple(labels), panel.years, panel.values[:, idx])


def first_difference(x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    return x[1:] - x[:-1]


def percent_change(x) -> np.ndarray:
    """100 * (x_t - x_{t-1}) / x_{t-1}; e.g. [100, 110] -> [10.0]."""
    x = np.asarray(x, dtype=float)
    if np.any(x[:-1] == 0):
        raise DivisionByZero("percent change over a zero value")
    return 100.0 * (x[1:] - x[:-1]) / x[:-1]


def log_difference(x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0):
        raise NonPositiveLog("log difference needs strictly positive values")
    return np.diff(np.log(x))


_COLUMN_TRANSFORMS = {
    "first-difference": first_difference,
    "percent-change": percent_change,
    "log-difference": log_difference,
}


def transform(panel: SeriesPanel, spec: str | Mapping[str, str] | Sequence[str]) -> SeriesPanel:
    """Apply a transform per column.

    `spec` is one kind for every column, a sequence aligned with the columns,
    or a mapping from label to kind (missing labels default to identity).
    When any column is differenced, the first year is dropped for all columns.
    """
    if isinstance(spec, str):
        kinds = [spec] * panel.nvars
    elif isinstance(spec, Mapping):
        for label in spec:
            if label not in panel.labels:
                raise UnknownLabel(label)
        kinds = [spec.get(label, "identity") for label in panel.labels]
    else:
        kinds = list(spec)
        if len(kinds) != panel.nvars:
            raise PanelError(f"{len(kinds)} transforms for {panel.nvars} columns")
    for k in kinds:
        if k not in TRANSFORMS:
            raise PanelError(f"unknown transform {k!r}; expected one of {TRANSFORMS}")
    if all(k == "identity" for k in kinds):
        return panel
    if panel.nobs < 3:
        raise PanelError("differencing a panel needs at least 3 observations")

    x = panel.values
    out = np.empty((panel.nobs - 1, panel.nvars))
    for j, (label, kind) in enumerate(zip(panel.labels, kinds)):
        try:
            out[:, j] = x[1:, j] if kind == "identity" else _COLUMN_TRANSFORMS[kind](x[:, j])
        except (DivisionByZero, NonPositiveLog) as exc:
            raise type(exc)(f"{label!r}: {exc}") from None
    return SeriesPanel(panel.labels, panel.years[1:], out)


def synthetic_demo_panel(seed: int = 20240215) -> SeriesPanel:
    """SYNTHETIC 1995-2023 panel shaped like the five growth-rate series
    (GDP, manufacturing, chemicals, mining, energy) in percent units.

    Generated from a stable VAR(2); it is not real data.
    """
    from .var import simulate_var

    rng = np.random.default_rng(seed)
    a1 = np.array([
        [0.90, 0.20, 0.05, 0.03, 0.02],
        [0.15, 0.85, 0.05, 0.02, 0.02],
        [0.10, 0.10, 0.80, 0.05, 0.00],
        [0.05, 0.05, 0.05, 0.80, 0.05],
        [0.10, 0.05, 0.00, 0.05, 0.85],
    ])
    a2 = np.array([
        [-0.65, 0.05, 0.05, 0.02, 0.00],
        [-0.05, -0.60, 0.05, 0.00, 0.02],
        [0.00, 0.05, -0.60, 0.00, 0.00],
        [0.02, 0.00, 0.00, -0.60, 0.00],
        [0.00, 0.02, 0.00, 0.00, -0.60],
    ])
    intercept = np.array([3.0, 2.5, 2.0, 1.0, 2.5])
    sd = np.array([4.0, 6.0, 7.0, 8.0, 4.0])
    corr = np.full((5, 5), 0.3) + 0.7 * np.eye(5)
    corr[0, 1] = corr[1, 0] = 0.7
    sigma = corr * np.outer(sd, sd)
    y = simulate_var([a1, a2], sigma, 29, intercept=intercept, rng=rng, burn=200)
    return SeriesPanel(DEMO_LABELS, range(1995, 2024), np.round(y, 4))
