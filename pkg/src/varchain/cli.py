"""Command line entry point: ``varchain run`` and ``varchain stage``."""
from __future__ import annotations

import argparse
import logging
import shutil
import sys
from pathlib import Path

from . import __version__
from .errors import ConfigError, StageError, VarChainError
from .pipeline import STAGES, demo_config_path, load_config, run_pipeline
from .render import FORMATS


def _formats(text):
    out = tuple(x.strip() for x in text.split(",") if x.strip())
    for f in out:
        if f not in FORMATS:
            raise argparse.ArgumentTypeError(f"unknown format {f!r}; choose from {', '.join(FORMATS)}")
    return out


def _positive(text):
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return n


def _common(p):
    p.add_argument("--config", type=Path, default=None,
                   help="pipeline config file (default: bundled demo)")
    p.add_argument("--seed", type=int, default=None, help="seed for the error-band replications")
    p.add_argument("--out-dir", type=Path, default=None, help="directory for the artifacts")
    p.add_argument("--format", type=_formats, default=None, dest="formats",
                   help="comma-separated output formats: text, csv, json")
    p.add_argument("--workers", type=_positive, default=None, help="threads for the error bands")
    p.add_argument("-v", "--verbose", action="store_true", help="log each stage")


def build_parser():
    parser = argparse.ArgumentParser(prog="varchain", description="VAR analysis chain for annual panels.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    run = sub.add_parser("run", help="run every stage selected by the config")
    _common(run)
    stage = sub.add_parser("stage", help="run a single stage")
    stage.add_argument("name", choices=STAGES)
    _common(stage)
    demo = sub.add_parser("demo", help="copy the bundled demo config and panel into a directory")
    demo.add_argument("target", type=Path)
    return parser


def _copy_demo(target: Path):
    src = demo_config_path().parent
    target.mkdir(parents=True, exist_ok=True)
    for name in ("demo.cfg", "demo_panel.csv"):
        shutil.copyfile(src / name, target / name)
    print(f"wrote {target / 'demo.cfg'} and {target / 'demo_panel.csv'}")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "demo":
        _copy_demo(args.target)
        return 0
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    overrides = dict(seed=args.seed, output_dir=args.out_dir, formats=args.formats, workers=args.workers)
    if args.command == "stage":
        overrides["stages"] = (args.name,)
    try:
        config = load_config(args.config or demo_config_path(), **overrides)
        report = run_pipeline(config)
    except ConfigError as exc:
        print(f"error [config]: {exc}", file=sys.stderr)
        return 2
    except StageError as exc:
        print(f"error [{exc.stage}]: {type(exc.error).__name__}: {exc.error}", file=sys.stderr)
        return 1
    except VarChainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(report.summary())
    return 0


if __name__ == "__main__":
    sys.exit(main())
