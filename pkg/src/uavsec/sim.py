"""Scenario engine: direct-only, handover and UAV-relay strategies over a trajectory.

Per step the engine places the IoT device (and UAV), draws fading for every
link it needs, evaluates the four link rates for each realization and reduces
over realizations in index order. Rates in ``TraceRecord`` are Mbps.

Link draws are keyed by link name (``"<bs id>->ue"``, ``"<bs id>->eve"``,
``"uav->ue"``, ``"uav->eve"``), so the same link sees the same fading in every
strategy and every sweep value at a given step.
"""
from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass
from typing import Literal, Sequence

import numpy as np

from .config import ScenarioConfig, Strategy
from .fading import exponential_powers, nakagami_powers
from .geom import BaseStation, Position3D
from .mobility import iot_position, uav_position
from .secrecy import link_rates, secrecy_rate

__all__ = [
    "Strategy",
    "SweepSpec",
    "TraceRecord",
    "TraceSummary",
    "handover_policy",
    "run_scenario",
    "run_sweep",
    "summarize",
]

MBPS = 1e6


@dataclass(frozen=True)
class TraceRecord:
    step: int
    iot_x: float
    uav_x: float | None
    serving_bs: str
    r_t_l: float
    r_r_l: float
    r_t_i: float
    r_r_i: float
    r_l: float
    r_i: float
    r_sec: float
    r_sec_std: float = 0.0


SWEEP_VARIABLES = {"speed_rate": "speed_rate", "sr": "speed_rate", "uav_height": "uav_height", "height": "uav_height"}


@dataclass(frozen=True)
class SweepSpec:
    variable: Literal["speed_rate", "uav_height"]
    values: tuple[float, ...]

    def __post_init__(self):
        if self.variable not in SWEEP_VARIABLES:
            raise ValueError(f"unknown sweep variable {self.variable!r}; use speed_rate or uav_height")
        object.__setattr__(self, "variable", SWEEP_VARIABLES[self.variable])
        values = tuple(float(v) for v in self.values)
        if not values:
            raise ValueError("sweep needs at least one value")
        if any(not (math.isfinite(v) and v > 0) for v in values):
            raise ValueError(f"sweep values must be finite and > 0, got {values}")
        if any(b <= a for a, b in zip(values, values[1:])):
            raise ValueError(f"sweep values must be strictly increasing, got {values}")
        object.__setattr__(self, "values", values)


def handover_policy(step_rates: dict[str, float], current: str, margin: float = 0.0) -> str:
    """Serving BS after comparing per-BS secrecy rates at one step.

    Switches to the best other BS only if it beats the current one by more than
    ``margin``; ties keep the current association.
    """
    alternatives = [(bs_id, rate) for bs_id, rate in step_rates.items() if bs_id != current]
    if not alternatives:
        return current
    best_id, best_rate = max(alternatives, key=lambda item: item[1])
    return best_id if best_rate > step_rates[current] + margin else current


def _draws(cfg: ScenarioConfig, step: int, link: str, a2g: bool = False) -> np.ndarray:
    if a2g:
        return nakagami_powers(cfg.channel.nakagami_m, cfg.seed, step, link, cfg.fading_a2g)
    return exponential_powers(cfg.seed, step, link, cfg.fading_g2g)


def _evaluate(cfg: ScenarioConfig, step: int, bs: BaseStation, iot: Position3D, uav: Position3D | None) -> TraceRecord:
    g = (_draws(cfg, step, f"{bs.id}->ue"), _draws(cfg, step, f"{bs.id}->eve"))
    h = (1.0, 1.0)
    if uav is not None:
        h = (_draws(cfg, step, "uav->ue", a2g=True), _draws(cfg, step, "uav->eve", a2g=True))
    rates = link_rates(cfg.nodes, iot, uav, cfg.channel, g, bs=bs, a2g_samples=h,
                       half_duplex_penalty=cfg.strategy.relay_half_duplex_penalty)
    res = secrecy_rate(rates)
    cols = np.broadcast_arrays(rates.r_t_l, rates.r_r_l, rates.r_t_i, rates.r_r_i, res.r_l, res.r_i, res.r_sec)
    r_t_l, r_r_l, r_t_i, r_r_i, r_l, r_i, r_sec = (np.atleast_1d(c) for c in cols)
    if cfg.clamp_after_average:
        sec_mean = max(float(np.mean(r_l)) - float(np.mean(r_i)), 0.0)
    else:
        sec_mean = float(np.mean(r_sec))
    return TraceRecord(
        step=step,
        iot_x=iot.x,
        uav_x=None if uav is None else uav.x,
        serving_bs=bs.id,
        r_t_l=float(np.mean(r_t_l)) / MBPS,
        r_r_l=float(np.mean(r_r_l)) / MBPS,
        r_t_i=float(np.mean(r_t_i)) / MBPS,
        r_r_i=float(np.mean(r_r_i)) / MBPS,
        r_l=float(np.mean(r_l)) / MBPS,
        r_i=float(np.mean(r_i)) / MBPS,
        r_sec=sec_mean / MBPS,
        r_sec_std=float(np.std(r_sec)) / MBPS,
    )


def run_scenario(config: ScenarioConfig) -> list[TraceRecord]:
    """One TraceRecord per step ``0..n_steps`` for the configured strategy."""
    mob = config.mobility
    kind = config.strategy.kind
    current = config.serving_bs.id
    trace = []
    for step in range(mob.n_steps + 1):
        iot = iot_position(step, mob)
        if kind == "relay":
            trace.append(_evaluate(config, step, config.serving_bs, iot, uav_position(step, mob)))
        elif kind == "direct":
            trace.append(_evaluate(config, step, config.serving_bs, iot, None))
        else:
            candidates = {bs.id: _evaluate(config, step, bs, iot, None) for bs in config.nodes.base_stations}
            current = handover_policy(
                {bs_id: rec.r_sec for bs_id, rec in candidates.items()},
                current,
                config.strategy.hysteresis_margin_mbps,
            )
            trace.append(candidates[current])
    return trace


def with_strategy(config: ScenarioConfig, kind: str, **strategy_changes) -> ScenarioConfig:
    return dataclasses.replace(config, strategy=dataclasses.replace(config.strategy, kind=kind, **strategy_changes))


def run_sweep(config: ScenarioConfig, sweep: SweepSpec) -> dict[float, list[TraceRecord]]:
    """Re-run a relay scenario once per sweep value with the seed held fixed."""
    if config.strategy.kind != "relay":
        raise ValueError(f"sweeps need the relay strategy, config uses {config.strategy.kind!r}")
    out = {}
    for value in sweep.values:
        try:
            mobility = dataclasses.replace(config.mobility, **{sweep.variable: value})
            out[value] = run_scenario(dataclasses.replace(config, mobility=mobility))
        except ValueError as exc:
            raise ValueError(f"{sweep.variable} = {value}: {exc}") from exc
    return out


@dataclass(frozen=True)
class TraceSummary:
    mean_mbps: float
    min_mbps: float
    fraction_above: float
    below_interval: tuple[float, float] | None  # x-range of the below-threshold run nearest the eavesdropper

    @property
    def below_width(self) -> float:
        return 0.0 if self.below_interval is None else self.below_interval[1] - self.below_interval[0]


def summarize(trace: Sequence[TraceRecord], threshold: float = 50.0, eavesdropper_x: float | None = None) -> TraceSummary:
    """Headline statistics of a trace's secrecy rate against ``threshold`` Mbps.

    The below-threshold interval is the contiguous run of below-threshold steps
    containing the step closest to ``eavesdropper_x`` (the step with the lowest
    secrecy rate when not given); None when that step is not below threshold.
    """
    if not trace:
        raise ValueError("cannot summarize an empty trace")
    r = np.array([rec.r_sec for rec in trace])
    xs = np.array([rec.iot_x for rec in trace])
    below = r < threshold
    if eavesdropper_x is None:
        anchor = int(np.argmin(r))
    else:
        anchor = int(np.argmin(np.abs(xs - eavesdropper_x)))
    interval = None
    if below[anchor]:
        lo = hi = anchor
        while lo > 0 and below[lo - 1]:
            lo -= 1
        while hi < len(r) - 1 and below[hi + 1]:
            hi += 1
        interval = (float(xs[lo]), float(xs[hi]))
    return TraceSummary(
        mean_mbps=float(np.mean(r)),
        min_mbps=float(np.min(r)),
        fraction_above=float(np.mean(~below)),
        below_interval=interval,
    )
