import filecmp
import shutil
from dataclasses import replace
from pathlib import Path

import pytest

from varchain.cli import main
from varchain.errors import ConfigError, StageError
from varchain.pipeline import (DEFAULT_OUTPUT_DIR, OUTPUT_DIR_ENV, STAGES, demo_config_path, load_config,
                               run_pipeline)


@pytest.fixture
def demo_dir(tmp_path):
    src = demo_config_path().parent
    for name in ("demo.cfg", "demo_panel.csv"):
        shutil.copyfile(src / name, tmp_path / name)
    return tmp_path


def _edit(cfg_path, **changes):
    lines = []
    for line in cfg_path.read_text().splitlines():
        key = line.split("=")[0].strip()
        if key in changes:
            line = f"{key} = {changes.pop(key)}"
        lines.append(line)
    lines += [f"{k} = {v}" for k, v in changes.items()]
    cfg_path.write_text("\n".join(lines) + "\n")
    return cfg_path


def test_demo_run_writes_nine_artifacts(tmp_path):
    config = load_config(demo_config_path(), output_dir=tmp_path / "out", replications=100)
    report = run_pipeline(config)
    assert [s.name for s in report.stages] == list(STAGES)
    assert all(s.status == "ok" for s in report.stages)
    assert len(report.artifacts) == 9
    assert all(Path(a).exists() for a in report.artifacts)
    assert any("deterministic case 3" in w for w in report.warnings)


def test_unknown_label(demo_dir):
    cfg = _edit(demo_dir / "demo.cfg", labels="GSYIH, NOPE", ordering="GSYIH, NOPE")
    with pytest.raises(ConfigError, match="NOPE"):
        run_pipeline(load_config(cfg, output_dir=demo_dir / "o"))


def test_ordering_outside_labels(demo_dir):
    cfg = _edit(demo_dir / "demo.cfg", ordering="GSYIH, IMALAT, KIMYA, MADEN, XX")
    with pytest.raises(ConfigError, match="XX"):
        load_config(cfg)


def test_replications_minimum(demo_dir):
    cfg = _edit(demo_dir / "demo.cfg", replications="50")
    with pytest.raises(ConfigError, match="100"):
        load_config(cfg)
    cfg = _edit(demo_dir / "demo.cfg", replications="50", irf_bands="false")
    assert load_config(cfg).replications == 50


def test_det_case_must_be_stated(demo_dir):
    cfg = demo_dir / "demo.cfg"
    cfg.write_text("\n".join(l for l in cfg.read_text().splitlines() if not l.startswith("johansen_det_case")))
    with pytest.raises(ConfigError, match="johansen_det_case"):
        load_config(cfg)


def test_unknown_key(demo_dir):
    with pytest.raises(ConfigError, match="colour"):
        load_config(_edit(demo_dir / "demo.cfg", colour="blue"))


def test_skipping_a_stage_removes_its_artifact(tmp_path):
    base = load_config(demo_config_path(), replications=100)
    full = run_pipeline(replace(base, output_dir=tmp_path / "a"))
    part = run_pipeline(replace(base, output_dir=tmp_path / "b", stages=tuple(s for s in STAGES if s != "white")))
    names_full = {Path(a).name for a in full.artifacts}
    names_part = {Path(a).name for a in part.artifacts}
    assert names_full - names_part == {"06_white.txt"}
    assert [s.name for s in part.stages] == [s for s in STAGES if s != "white"]


def test_formats_multiply_artifacts(tmp_path):
    config = load_config(demo_config_path(), output_dir=tmp_path, formats=("text", "csv", "json"),
                         stages=("lag_selection", "fevd"))
    report = run_pipeline(config)
    assert len(report.artifacts) == 6


def test_stage_failure_is_tagged(demo_dir):
    cfg = _edit(demo_dir / "demo.cfg", chosen_lag="9")
    with pytest.raises(StageError) as info:
        run_pipeline(load_config(cfg, output_dir=demo_dir / "o"))
    assert info.value.stage == "var"
    assert "[var]" in str(info.value)


def test_output_dir_precedence(demo_dir, monkeypatch):
    monkeypatch.setenv(OUTPUT_DIR_ENV, str(demo_dir / "env"))
    assert load_config(demo_dir / "demo.cfg").resolved_output_dir() == demo_dir / "env"
    cfg = _edit(demo_dir / "demo.cfg", output_dir="fromcfg")
    assert load_config(cfg).resolved_output_dir() == demo_dir / "fromcfg"
    assert load_config(cfg, output_dir=demo_dir / "flag").resolved_output_dir() == demo_dir / "flag"
    monkeypatch.delenv(OUTPUT_DIR_ENV)
    cfg.write_text(cfg.read_text().replace("output_dir = fromcfg", ""))
    assert load_config(cfg).resolved_output_dir() == Path(DEFAULT_OUTPUT_DIR)


def test_runs_are_byte_identical(tmp_path):
    base = load_config(demo_config_path(), replications=200, formats=("text", "csv", "json"))
    a = run_pipeline(replace(base, output_dir=tmp_path / "a"))
    b = run_pipeline(replace(base, output_dir=tmp_path / "b", workers=3))
    names = [Path(x).name for x in a.artifacts]
    match, mismatch, errors = filecmp.cmpfiles(tmp_path / "a", tmp_path / "b", names, shallow=False)
    assert mismatch == [] and errors == [] and len(match) == 27


def test_cli_run(tmp_path, capsys):
    code = main(["run", "--out-dir", str(tmp_path), "--seed", "7", "--format", "text,csv"])
    assert code == 0
    assert len(list(tmp_path.iterdir())) == 18
    assert "fevd" in capsys.readouterr().out


def test_cli_stage(tmp_path):
    assert main(["stage", "stability", "--config", str(demo_config_path()), "--out-dir", str(tmp_path)]) == 0
    assert [p.name for p in tmp_path.iterdir()] == ["04_stability.txt"]


def test_cli_failure_exit_code(demo_dir, capsys):
    cfg = _edit(demo_dir / "demo.cfg", chosen_lag="9")
    code = main(["run", "--config", str(cfg), "--out-dir", str(demo_dir / "o")])
    assert code != 0
    assert "[var]" in capsys.readouterr().err


def test_cli_config_error(demo_dir, capsys):
    cfg = _edit(demo_dir / "demo.cfg", replications="10")
    assert main(["run", "--config", str(cfg)]) == 2
    assert "[config]" in capsys.readouterr().err


def test_cli_demo_copy(tmp_path):
    assert main(["demo", str(tmp_path / "d")]) == 0
    assert (tmp_path / "d" / "demo.cfg").exists()
