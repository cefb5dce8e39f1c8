"""Command-line entry point: ``uavsec run|compare|sweep|summary|dump-config``."""
from __future__ import annotations

import argparse
import dataclasses
import os
import sys
from pathlib import Path

from .config import ConfigError, ScenarioConfig, dump_config, load_config
from .sim import SweepSpec, run_scenario, run_sweep, summarize, with_strategy
from .traceio import format_joined_csv, format_trace_csv, read_trace_csv

EXIT_USAGE = 2
EXIT_CONFIG = 3
EXIT_IO = 4
OUTPUT_ENV = "UAVSEC_OUTPUT_DIR"

_EPILOG = f"""\
Config arguments accept a file path or a bundled preset name
(table1_handover, table1_relay; the .cfg suffix is optional).

Output directory precedence: --out, then ${OUTPUT_ENV}, then output.dir from
the config.

exit codes: 0 ok, 2 usage error, 3 config error, 4 I/O error
"""


class _UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, help="override run.seed")
    common.add_argument("--out", help="output directory")
    common.add_argument("--steps", type=int, help="override mobility.n_steps")

    parser = argparse.ArgumentParser(
        prog="uavsec",
        description="Secrecy-rate simulator for a mobile IoT device with a UAV relay and a ground eavesdropper.",
        epilog=_EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", parents=[common], help="run the configured strategy and write one trace")
    p.add_argument("config")

    p = sub.add_parser("compare", parents=[common], help="direct vs handover vs relay on the same geometry")
    p.add_argument("config")

    p = sub.add_parser("sweep", parents=[common], help="relay runs over speed rate or UAV height")
    p.add_argument("config")
    p.add_argument("--var", required=True, choices=("sr", "height"))
    p.add_argument("--values", required=True, help="comma-separated, strictly increasing")

    p = sub.add_parser("summary", help="headline statistics of a trace CSV")
    p.add_argument("trace")
    p.add_argument("--threshold", type=float, default=50.0, help="Mbps (default 50)")
    p.add_argument("--eavesdropper-x", type=float, help="defaults to the value in the trace header")

    p = sub.add_parser("dump-config", parents=[common], help="print the fully resolved config")
    p.add_argument("config")
    return parser


def _load(args) -> ScenarioConfig:
    cfg = load_config(args.config)
    if args.seed is not None:
        if not 0 <= args.seed < 2**64:
            raise ConfigError("violates 0 <= seed < 2**64", field="--seed")
        cfg = dataclasses.replace(cfg, seed=args.seed)
    if args.steps is not None:
        try:
            cfg = dataclasses.replace(cfg, mobility=dataclasses.replace(cfg.mobility, n_steps=args.steps))
        except ValueError as exc:
            raise ConfigError(str(exc), field="--steps") from exc
    return cfg


def _out_dir(args, cfg: ScenarioConfig) -> Path:
    out = Path(args.out or os.environ.get(OUTPUT_ENV) or cfg.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _write(path: Path, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
    print(path)


def _stem(config_arg: str) -> str:
    name = Path(config_arg).name
    return name[:-4] if name.endswith(".cfg") else Path(name).stem


def _cmd_run(args) -> None:
    cfg = _load(args)
    trace = run_scenario(cfg)
    out = _out_dir(args, cfg)
    _write(out / f"{_stem(args.config)}_{cfg.strategy.kind}.csv", format_trace_csv(trace, cfg))


def _cmd_compare(args) -> None:
    cfg = _load(args)
    out = _out_dir(args, cfg)
    stem = _stem(args.config)
    traces = {}
    for kind in ("direct", "handover", "relay"):
        scfg = with_strategy(cfg, kind)
        traces[kind] = run_scenario(scfg)
        _write(out / f"{stem}_{kind}.csv", format_trace_csv(traces[kind], scfg))
    _write(out / f"{stem}_compare.csv", format_joined_csv(traces, cfg))


def _cmd_sweep(args) -> None:
    try:
        values = tuple(float(v) for v in args.values.split(",") if v.strip())
        spec = SweepSpec("speed_rate" if args.var == "sr" else "uav_height", values)
    except ValueError as exc:
        raise _UsageError(f"--values: {exc}") from exc
    cfg = with_strategy(_load(args), "relay")
    out = _out_dir(args, cfg)
    stem = _stem(args.config)
    results = run_sweep(cfg, spec)
    for value, trace in results.items():
        vcfg = dataclasses.replace(cfg, mobility=dataclasses.replace(cfg.mobility, **{spec.variable: value}))
        _write(out / f"{stem}_{args.var}_{value:g}.csv", format_trace_csv(trace, vcfg, [f"sweep {spec.variable} = {value!r}"]))


def _cmd_summary(args) -> None:
    trace, meta = read_trace_csv(args.trace)
    if not trace:
        raise _UsageError(f"{args.trace}: trace has no data rows")
    eve_x = args.eavesdropper_x
    if eve_x is None and "eavesdropper_x_m" in meta:
        eve_x = float(meta["eavesdropper_x_m"])
    s = summarize(trace, args.threshold, eve_x)
    print(f"steps           {len(trace)}")
    print(f"mean_r_sec_mbps {s.mean_mbps:.6g}")
    print(f"min_r_sec_mbps  {s.min_mbps:.6g}")
    print(f"fraction_above  {s.fraction_above:.6g}  (threshold {args.threshold:g} Mbps)")
    if s.below_interval is None:
        print("below_interval  none")
    else:
        lo, hi = s.below_interval
        print(f"below_interval  [{lo:g}, {hi:g}] m  (width {hi - lo:g} m)")


def _cmd_dump(args) -> None:
    sys.stdout.write(dump_config(_load(args)))


_COMMANDS = {
    "run": _cmd_run,
    "compare": _cmd_compare,
    "sweep": _cmd_sweep,
    "summary": _cmd_summary,
    "dump-config": _cmd_dump,
}


def main(argv: list[str] | None = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"uavsec: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConfigError as exc:
        print(f"uavsec: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"uavsec: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        code = EXIT_IO if args.command == "summary" else EXIT_CONFIG
        print(f"uavsec: error: {exc}", file=sys.stderr)
        return code
    return 0


if __name__ == "__main__":
    sys.exit(main())
