"""Plot-ready CSV traces with a ``#`` comment header describing the run."""
from __future__ import annotations

import csv
import io
from pathlib import Path
from typing import Iterable, Sequence

from .config import ScenarioConfig
from .sim import TraceRecord

COLUMNS = (
    "step",
    "iot_x_m",
    "uav_x_m",
    "serving_bs",
    "r_t_l_mbps",
    "r_r_l_mbps",
    "r_t_i_mbps",
    "r_r_i_mbps",
    "r_l_mbps",
    "r_i_mbps",
    "r_sec_mbps",
    "r_sec_std_mbps",
)
_RATE_FIELDS = ("r_t_l", "r_r_l", "r_t_i", "r_r_i", "r_l", "r_i", "r_sec", "r_sec_std")


def fmt(value: float) -> str:
    return f"{value:.6g}"


def header_lines(config: ScenarioConfig | None, extra: Iterable[str] = ()) -> list[str]:
    if config is None:
        return [f"# {line}" for line in extra]
    ch = config.channel
    lines = [
        f"seed = {config.seed}",
        f"config_sha256 = {config.digest()}",
        f"strategy = {config.strategy.kind}",
        f"fading.g2g = {config.fading_g2g.kind}",
        f"fading.a2g = {config.fading_a2g.kind}",
        f"fading.realizations = {config.realizations}",
        f"carrier_frequency_hz = {ch.carrier_frequency_hz!r} (assumed; not given by the source model)",
        f"eavesdropper_x_m = {config.nodes.eavesdropper.x!r}",
        f"threshold_mbps = {config.threshold_mbps!r}",
    ]
    lines += [f"default: {d}" for d in config.defaults_applied]
    lines += list(extra)
    return [f"# {line}" for line in lines]


def format_trace_csv(trace: Sequence[TraceRecord], config: ScenarioConfig | None = None, extra: Iterable[str] = ()) -> str:
    buf = io.StringIO()
    for line in header_lines(config, extra):
        buf.write(line + "\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COLUMNS)
    for rec in trace:
        writer.writerow(
            [rec.step, fmt(rec.iot_x), "" if rec.uav_x is None else fmt(rec.uav_x), rec.serving_bs]
            + [fmt(getattr(rec, name)) for name in _RATE_FIELDS]
        )
    return buf.getvalue()


def write_trace_csv(trace: Sequence[TraceRecord], path: str | Path, config: ScenarioConfig | None = None,
                    extra: Iterable[str] = ()) -> Path:
    path = Path(path)
    text = format_trace_csv(trace, config, extra)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
    return path


def read_trace_csv(path: str | Path) -> tuple[list[TraceRecord], dict[str, str]]:
    """Parse a trace file back into records plus its ``key = value`` header comments."""
    meta: dict[str, str] = {}
    body = []
    with open(path, encoding="utf-8", newline="") as fh:
        for line in fh:
            if line.startswith("#"):
                key, sep, value = line[1:].strip().partition(" = ")
                if sep and not key.startswith("default:"):
                    meta[key] = value
            else:
                body.append(line)
    reader = csv.reader(body)
    header = next(reader, None)
    if header is None or tuple(header) != COLUMNS:
        raise ValueError(f"{path}: unexpected trace header {header!r}")
    records = []
    for row_no, row in enumerate(reader, start=2):
        if len(row) != len(COLUMNS):
            raise ValueError(f"{path}: data row {row_no} has {len(row)} columns, expected {len(COLUMNS)}")
        step, iot_x, uav_x, serving = row[:4]
        rates = [float(v) for v in row[4:]]
        records.append(
            TraceRecord(int(step), float(iot_x), float(uav_x) if uav_x else None, serving, *rates)
        )
    return records, meta


def format_joined_csv(traces: dict[str, Sequence[TraceRecord]], config: ScenarioConfig | None = None,
                      extra: Iterable[str] = ()) -> str:
    """One row per step with the secrecy rate of each named trace side by side."""
    names = list(traces)
    lengths = {len(t) for t in traces.values()}
    if len(lengths) > 1:
        raise ValueError("joined traces must have equal length")
    buf = io.StringIO()
    for line in header_lines(config, extra):
        buf.write(line + "\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["step", "iot_x_m"] + [f"r_sec_{n}_mbps" for n in names] + [f"serving_bs_{n}" for n in names])
    for rows in zip(*traces.values()):
        first = rows[0]
        writer.writerow([first.step, fmt(first.iot_x)] + [fmt(r.r_sec) for r in rows] + [r.serving_bs for r in rows])
    return buf.getvalue()
