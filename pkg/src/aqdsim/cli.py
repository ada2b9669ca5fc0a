"""Command-line entry point.

Subcommands::

    aqdsim run <config-file>      simulate one config, write CSV + report
    aqdsim preset <name>          run all curves of a figure scenario
    aqdsim map-params <config>    print derived platform parameters
    aqdsim emit-preset <name>     print preset config documents

Output directory: ``--out``, else the AQDSIM_OUT environment variable,
else the current directory.  ``--self-check`` turns on the cutoff and
step-halving verification passes.  Failures print a one-line JSON error
record to stderr and exit nonzero.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import replace
from pathlib import Path

from .config import parse_config
from .errors import AqdsimError
from .presets import PRESET_NAMES, preset
from .runner import platform_report, render_report, run


def _out_dir(args) -> Path:
    if args.out is not None:
        return Path(args.out)
    return Path(os.environ.get("AQDSIM_OUT", "."))


def _with_checks(cfg, enabled: bool):
    if not enabled:
        return cfg
    return replace(cfg, check_cutoff=True, check_step_halving=True)


def _read_config(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise AqdsimError(f"cannot read config file {path}: {exc}") from None
    return parse_config(text)


def _cmd_run(args) -> int:
    cfg = _with_checks(_read_config(args.config), args.self_check)
    result = run(cfg, _out_dir(args))
    sys.stdout.write(render_report(result.report))
    sys.stdout.write(f"csv = {result.csv_path}\n")
    return 0


def _cmd_preset(args) -> int:
    out = _out_dir(args)
    for cfg in preset(args.name):
        result = run(_with_checks(cfg, args.self_check), out)
        sys.stdout.write(render_report(result.report))
        sys.stdout.write(f"csv = {result.csv_path}\n\n")
    return 0


def _cmd_map_params(args) -> int:
    report = platform_report(_read_config(args.config))
    sys.stdout.write(render_report(report))
    return 0


def _cmd_emit_preset(args) -> int:
    from .config import emit_config

    for cfg in preset(args.name):
        sys.stdout.write(f"# --- {cfg.label}\n")
        sys.stdout.write(emit_config(cfg))
        sys.stdout.write("\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aqdsim",
        description="Simulate atomic-quantum-dot qubits coupled to a "
        "condensate phonon mode.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="simulate one config file")
    p_run.add_argument("config")
    p_run.add_argument("--out", default=None, help="output directory")
    p_run.add_argument("--self-check", action="store_true",
                       help="enable cutoff and step-halving verification")
    p_run.set_defaults(func=_cmd_run)

    p_preset = sub.add_parser("preset", help="run a named figure scenario")
    p_preset.add_argument("name", choices=PRESET_NAMES)
    p_preset.add_argument("--out", default=None, help="output directory")
    p_preset.add_argument("--self-check", action="store_true",
                          help="enable cutoff and step-halving verification")
    p_preset.set_defaults(func=_cmd_preset)

    p_map = sub.add_parser("map-params",
                           help="derive model parameters from condensate data")
    p_map.add_argument("config")
    p_map.set_defaults(func=_cmd_map_params)

    p_emit = sub.add_parser("emit-preset", help="print preset config documents")
    p_emit.add_argument("name", choices=PRESET_NAMES)
    p_emit.set_defaults(func=_cmd_emit_preset)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except AqdsimError as exc:
        record = {"error": type(exc).__name__, "message": str(exc)}
        sys.stderr.write(json.dumps(record) + "\n")
        return 1
    except OSError as exc:
        record = {"error": "OSError", "message": str(exc)}
        sys.stderr.write(json.dumps(record) + "\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
