"""Config-driven run of the full analysis chain.

Stage order is fixed: unit roots, lag selection, VAR, stability, LM,
White, Johansen, impulse responses, variance decomposition.  Each selected
stage writes one artifact per requested format into the output directory.
"""
from __future__ import annotations

import configparser
import logging
import os
import time
from dataclasses import dataclass, field, replace
from importlib import resources
from pathlib import Path

from . import cointegration, diagnostics, structural, unitroot
from .errors import ConfigError, PanelError, StageError, UnknownLabel
from .panel import TRANSFORMS, read_panel, transform
from .render import EXTENSIONS, FORMATS, render_table
from .var import estimate_var, lag_order_selection, stability

logger = logging.getLogger(__name__)

STAGES = ("unit_root", "lag_selection", "var", "stability", "lm", "white", "johansen", "irf", "fevd")
OUTPUT_DIR_ENV = "VARCHAIN_OUTPUT_DIR"
DEFAULT_OUTPUT_DIR = "varchain_output"
SECTION = "pipeline"


@dataclass(frozen=True)
class PipelineConfig:
    input_path: Path
    labels: tuple
    ordering: tuple
    det_case: int
    transform: dict = field(default_factory=dict)
    unit_root_specs: tuple = unitroot.SPECS
    max_lag: int = 2
    chosen_lag: int | None = None
    include_constant: bool = True
    lm_lags: int = 2
    white_cross_terms: bool = False
    horizon: int = 10
    bands: bool = True
    replications: int = 999
    seed: int = 0
    output_dir: Path | None = None
    formats: tuple = ("text",)
    stages: tuple = STAGES
    workers: int = 1

    def validate(self) -> "PipelineConfig":
        if not self.labels:
            raise ConfigError("labels must name at least one series")
        if len(set(self.labels)) != len(self.labels):
            raise ConfigError("labels contain duplicates")
        for name in self.ordering:
            if name not in self.labels:
                raise ConfigError(f"ordering names unknown label {name!r}")
        if sorted(self.ordering) != sorted(self.labels):
            missing = [x for x in self.labels if x not in self.ordering]
            raise ConfigError(f"ordering must list every label once; missing {missing}")
        for name, kind in self.transform.items():
            if name not in self.labels:
                raise ConfigError(f"transform names unknown label {name!r}")
            if kind not in TRANSFORMS:
                raise ConfigError(f"unknown transform {kind!r} for {name!r}")
        if self.det_case not in cointegration.CASES:
            raise ConfigError(f"johansen_det_case must be one of {sorted(cointegration.CASES)}")
        if self.horizon < 1:
            raise ConfigError("irf_horizon must be at least 1")
        if self.bands and self.replications < structural.MIN_REPLICATIONS:
            raise ConfigError(
                f"replications must be at least {structural.MIN_REPLICATIONS} when bands are on, "
                f"got {self.replications}"
            )
        if self.max_lag < 0:
            raise ConfigError("max_lag must be nonnegative")
        if self.chosen_lag is not None and self.chosen_lag < 1:
            raise ConfigError("chosen_lag must be at least 1")
        if self.lm_lags < 1:
            raise ConfigError("lm_lags must be at least 1")
        if self.workers < 1:
            raise ConfigError("workers must be at least 1")
        for f in self.formats:
            if f not in FORMATS:
                raise ConfigError(f"unknown format {f!r}; choose from {FORMATS}")
        for s in self.stages:
            if s not in STAGES:
                raise ConfigError(f"unknown stage {s!r}; choose from {STAGES}")
        for s in self.unit_root_specs:
            if s not in unitroot.SPECS:
                raise ConfigError(f"unknown unit-root spec {s!r}; choose from {unitroot.SPECS}")
        return self

    def resolved_output_dir(self) -> Path:
        if self.output_dir is not None:
            return Path(self.output_dir)
        return Path(os.environ.get(OUTPUT_DIR_ENV, DEFAULT_OUTPUT_DIR))


def _split(text):
    return tuple(x.strip() for x in text.replace("\n", ",").split(",") if x.strip())


def _parse_transform(text):
    text = text.strip()
    if not text or text == "identity":
        return {}
    out = {}
    for item in _split(text):
        if ":" not in item:
            raise ConfigError(f"transform entries look like LABEL:kind, got {item!r}")
        label, kind = (x.strip() for x in item.split(":", 1))
        out[label] = kind
    return out


def load_config(path, **overrides) -> PipelineConfig:
    """Read a ``[pipeline]`` key = value file; keyword overrides replace fields."""
    path = Path(path)
    parser = configparser.ConfigParser(interpolation=None)
    try:
        with open(path, encoding="utf-8") as fh:
            parser.read_file(fh)
    except (OSError, configparser.Error) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    if not parser.has_section(SECTION):
        raise ConfigError(f"config {path} has no [{SECTION}] section")
    sec = parser[SECTION]
    known = {"input", "labels", "ordering", "transform", "unit_root_specs", "max_lag", "chosen_lag",
             "include_constant", "lm_lags", "white_cross_terms", "johansen_det_case", "irf_horizon",
             "irf_bands", "replications", "seed", "output_dir", "formats", "stages", "workers"}
    unknown = set(sec) - known
    if unknown:
        raise ConfigError(f"unknown config key(s): {sorted(unknown)}")
    for key in ("input", "labels", "ordering", "johansen_det_case"):
        if key not in sec:
            raise ConfigError(f"config must state {key!r} explicitly")
    try:
        stages = sec.get("stages", "all").strip()
        out_dir = sec.get("output_dir", "").strip()
        chosen = sec.get("chosen_lag", "").strip()
        cfg = PipelineConfig(
            input_path=(path.parent / sec["input"].strip()),
            labels=_split(sec["labels"]),
            ordering=_split(sec["ordering"]),
            det_case=sec.getint("johansen_det_case"),
            transform=_parse_transform(sec.get("transform", "")),
            unit_root_specs=_split(sec.get("unit_root_specs", ",".join(unitroot.SPECS))),
            max_lag=sec.getint("max_lag", 2),
            chosen_lag=int(chosen) if chosen else None,
            include_constant=sec.getboolean("include_constant", True),
            lm_lags=sec.getint("lm_lags", 2),
            white_cross_terms=sec.getboolean("white_cross_terms", False),
            horizon=sec.getint("irf_horizon", 10),
            bands=sec.getboolean("irf_bands", True),
            replications=sec.getint("replications", 999),
            seed=sec.getint("seed", 0),
            output_dir=(path.parent / out_dir) if out_dir else None,
            formats=_split(sec.get("formats", "text")),
            stages=STAGES if stages in ("", "all") else _split(stages),
            workers=sec.getint("workers", 1),
        )
    except ValueError as exc:
        raise ConfigError(f"bad value in {path}: {exc}") from None
    overrides = {k: v for k, v in overrides.items() if v is not None}
    return replace(cfg, **overrides).validate()


def demo_config_path() -> Path:
    return Path(str(resources.files("varchain") / "data" / "demo.cfg"))


@dataclass
class StageRecord:
    name: str
    status: str
    artifacts: list = field(default_factory=list)
    seconds: float = 0.0
    warnings: list = field(default_factory=list)


@dataclass
class RunReport:
    output_dir: Path
    stages: list = field(default_factory=list)
    warnings: list = field(default_factory=list)

    @property
    def artifacts(self):
        return [a for s in self.stages for a in s.artifacts]

    @property
    def ok(self):
        return all(s.status == "ok" for s in self.stages)

    def summary(self) -> str:
        lines = [f"output directory: {self.output_dir}"]
        for s in self.stages:
            names = ", ".join(Path(a).name for a in s.artifacts)
            lines.append(f"  {s.name:<14} {s.status:<6} {s.seconds:8.3f}s  {names}")
        lines += [f"warning: {w}" for w in self.warnings]
        return "\n".join(lines)


class _Context:
    """Lazily computed upstream results shared between stages."""

    def __init__(self, config, panel):
        self.config = config
        self.panel = panel
        self._lags = None
        self._model = None

    def lag_selection(self):
        if self._lags is None:
            self._lags = lag_order_selection(self.panel, self.config.max_lag, self.config.include_constant)
        return self._lags

    @property
    def var_lag(self):
        if self.config.chosen_lag is not None:
            return self.config.chosen_lag
        return max(self.lag_selection().chosen["aic"], 1)

    def model(self):
        if self._model is None:
            self._model = estimate_var(self.panel, self.var_lag, self.config.include_constant)
        return self._model


def _stage_result(name, ctx: _Context, record: StageRecord):
    cfg = ctx.config
    if name == "unit_root":
        res = unitroot.panel_unit_roots(ctx.panel, cfg.unit_root_specs)
        record.warnings.append("unit-root pooled statistic assumes Fisher combination")
        return res
    if name == "lag_selection":
        return ctx.lag_selection()
    if name == "var":
        if cfg.chosen_lag is None and ctx.lag_selection().chosen["aic"] == 0:
            record.warnings.append("AIC chose lag 0; estimating VAR(1) instead")
        return ctx.model()
    if name == "stability":
        res = stability(ctx.model())
        if not res.is_stable:
            record.warnings.append("VAR is not stable: a root lies on or outside the unit circle")
        return res
    if name == "lm":
        return diagnostics.lm_table(ctx.model(), cfg.lm_lags)
    if name == "white":
        return diagnostics.white_heteroskedasticity(ctx.model(), cfg.white_cross_terms)
    if name == "johansen":
        record.warnings.append(
            f"Johansen deterministic case {cfg.det_case} ({cointegration.CASES[cfg.det_case]}) taken from config"
        )
        return cointegration.johansen(ctx.panel, ctx.var_lag, cfg.det_case)
    if name == "irf":
        if cfg.bands:
            return structural.irf_bands(ctx.model(), cfg.horizon, cfg.ordering, replications=cfg.replications,
                                        seed=cfg.seed, workers=cfg.workers)
        return structural.irf(ctx.model(), cfg.horizon, cfg.ordering)
    if name == "fevd":
        return structural.fevd(ctx.model(), cfg.horizon, cfg.ordering)
    raise ConfigError(f"unknown stage {name!r}")


def load_input(config: PipelineConfig):
    try:
        panel = read_panel(config.input_path, config.labels)
    except UnknownLabel as exc:
        raise ConfigError(f"label {exc.label!r} not found in {config.input_path}") from None
    except OSError as exc:
        raise ConfigError(f"cannot read input {config.input_path}: {exc}") from None
    if config.transform:
        panel = transform(panel, config.transform)
    return panel


def run_pipeline(config: PipelineConfig) -> RunReport:
    """Run the selected stages in order and write their artifacts.

    A failing stage raises `StageError` tagged with the stage name; the
    partial report is attached as ``error.report``.
    """
    config.validate()
    out_dir = config.resolved_output_dir()
    report = RunReport(out_dir)
    try:
        panel = load_input(config)
    except PanelError as exc:
        raise StageError("input", exc, report) from exc
    out_dir.mkdir(parents=True, exist_ok=True)
    ctx = _Context(config, panel)
    selected = [s for s in STAGES if s in config.stages]
    for index, name in enumerate(STAGES, start=1):
        if name not in selected:
            continue
        record = StageRecord(name, "running")
        report.stages.append(record)
        t0 = time.perf_counter()
        logger.info("stage %s", name)
        try:
            result = _stage_result(name, ctx, record)
            for fmt in config.formats:
                target = out_dir / f"{index:02d}_{name}.{EXTENSIONS[fmt]}"
                with open(target, "w", encoding="utf-8", newline="\n") as fh:
                    fh.write(render_table(result, fmt))
                record.artifacts.append(str(target))
        except Exception as exc:
            record.status = "failed"
            record.seconds = time.perf_counter() - t0
            raise StageError(name, exc, report) from exc
        record.status = "ok"
        record.seconds = time.perf_counter() - t0
        report.warnings += [f"{name}: {w}" for w in record.warnings]
    return report
