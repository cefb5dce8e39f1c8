"""Scenario configuration: a sectioned ``key = value`` text format with dotted paths.

Example::

    [mobility]
    dx = 15
    speed_rate = 1

    nodes.bs.primary.position = (0, 0, 50)

A ``[section]`` header prefixes the keys below it; keys may also be written
fully dotted at top level. ``#`` and ``;`` start comments. Unknown keys are
rejected. Every default filled in by the loader is recorded in
``ScenarioConfig.defaults_applied`` so it can be echoed into output headers.
"""
from __future__ import annotations

import ast
import dataclasses
import hashlib
import math
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any, Callable, Literal

from .channel import ChannelParams
from .fading import MEAN_ONLY, MONTE_CARLO, FadingMode
from .geom import BaseStation, NodeSet, Position3D
from .mobility import MobilityParams

STRATEGIES = ("direct", "handover", "relay")
PRESETS = ("table1_handover", "table1_relay")


class ConfigError(ValueError):
    """Invalid scenario configuration; ``field`` names the dotted key at fault."""

    def __init__(self, message: str, field: str | None = None, line: int | None = None, path: str | None = None):
        self.field = field
        self.line = line
        self.path = path
        where = []
        if path:
            where.append(str(path) if line is None else f"{path}:{line}")
        elif line is not None:
            where.append(f"line {line}")
        if field:
            where.append(field)
        super().__init__(f"{': '.join(where)}: {message}" if where else message)


def table1_nodes() -> NodeSet:
    return NodeSet(
        base_stations=(
            BaseStation("primary", Position3D(0.0, 0.0, 50.0), 0.1),
            BaseStation("secondary", Position3D(1400.0, 0.0, 50.0), 0.1),
        ),
        eavesdropper=Position3D(300.0, 0.0, 0.0),
        iot_start=Position3D(0.0, 0.0, 0.0),
        uav_tx_power_w=0.01,
    )


@dataclass(frozen=True)
class Strategy:
    kind: Literal["direct", "handover", "relay"] = "relay"
    hysteresis_margin_mbps: float = 0.0
    serving_bs: str | None = None  # None: first configured base station
    relay_half_duplex_penalty: bool = False

    def __post_init__(self):
        if self.kind not in STRATEGIES:
            raise ValueError(f"strategy must be one of {STRATEGIES}, got {self.kind!r}")
        if not self.hysteresis_margin_mbps >= 0:
            raise ValueError("hysteresis margin must be >= 0")


@dataclass(frozen=True)
class ScenarioConfig:
    channel: ChannelParams = field(default_factory=ChannelParams)
    nodes: NodeSet = field(default_factory=table1_nodes)
    mobility: MobilityParams = field(default_factory=MobilityParams)
    strategy: Strategy = field(default_factory=Strategy)
    fading_g2g: FadingMode = FadingMode(MONTE_CARLO, 1000)
    fading_a2g: FadingMode = FadingMode(MEAN_ONLY, 1000)
    seed: int = 0
    threshold_mbps: float = 50.0
    clamp_after_average: bool = False
    output_dir: str = "."
    output_format: str = "csv"
    defaults_applied: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.strategy.serving_bs is not None:
            try:
                self.nodes.base_station(self.strategy.serving_bs)
            except KeyError:
                raise ValueError(f"strategy.serving_bs {self.strategy.serving_bs!r} is not a configured base station")

    @property
    def serving_bs(self) -> BaseStation:
        if self.strategy.serving_bs is None:
            return self.nodes.primary
        return self.nodes.base_station(self.strategy.serving_bs)

    @property
    def realizations(self) -> int:
        modes = [m for m in (self.fading_g2g, self.fading_a2g) if not m.is_mean]
        return max((m.realizations for m in modes), default=1)

    def with_overrides(self, **changes) -> ScenarioConfig:
        return dataclasses.replace(self, **changes)

    def digest(self) -> str:
        return hashlib.sha256(dump_config(self).encode("utf-8")).hexdigest()


# --- schema -----------------------------------------------------------------

def _positive(v):
    return math.isfinite(v) and v > 0


def _nonneg(v):
    return math.isfinite(v) and v >= 0


def _finite(v):
    return math.isfinite(v)


@dataclass(frozen=True)
class _Key:
    kind: type
    default: Any
    check: Callable[[Any], bool] | None = None
    rule: str = ""
    choices: tuple[str, ...] = ()


_CH = ChannelParams()
SCHEMA: dict[str, _Key] = {
    "run.seed": _Key(int, 0, lambda v: 0 <= v < 2**64, "0 <= seed < 2**64"),
    "run.threshold_mbps": _Key(float, 50.0, _nonneg, ">= 0"),
    "output.dir": _Key(str, "."),
    "output.format": _Key(str, "csv", choices=("csv",)),
    "channel.carrier_frequency_hz": _Key(float, _CH.carrier_frequency_hz, _positive, "> 0"),
    "channel.los_c": _Key(float, _CH.los_c, _positive, "> 0"),
    "channel.los_b": _Key(float, _CH.los_b, _positive, "> 0"),
    "channel.eta_los_db": _Key(float, _CH.eta_los_db, _nonneg, ">= 0"),
    "channel.eta_nlos_db": _Key(float, _CH.eta_nlos_db, _nonneg, ">= 0"),
    "channel.path_loss_exponent": _Key(float, _CH.path_loss_exponent, lambda v: math.isfinite(v) and v >= 2, ">= 2"),
    "channel.nakagami_m": _Key(float, _CH.nakagami_m, lambda v: math.isfinite(v) and v >= 0.5, ">= 0.5"),
    "channel.bandwidth_hz": _Key(float, _CH.bandwidth_hz, _positive, "> 0"),
    "channel.noise_spectral_density": _Key(float, _CH.noise_spectral_density, _positive, "> 0"),
    "channel.noise_power_w": _Key(float, None, _positive, "> 0"),
    "nodes.eavesdropper": _Key(tuple, (300.0, 0.0, 0.0)),
    "nodes.iot_start": _Key(tuple, (0.0, 0.0, 0.0)),
    "nodes.uav_tx_power_w": _Key(float, 0.01, _positive, "> 0"),
    "mobility.dx": _Key(float, 15.0, _positive, "> 0"),
    "mobility.speed_rate": _Key(float, 1.0, _positive, "> 0"),
    "mobility.n_steps": _Key(int, 100, lambda v: v >= 0, ">= 0"),
    "mobility.uav_height": _Key(float, 20.0, _positive, "> 0"),
    "mobility.fixed_y": _Key(float, None, _finite, "finite"),  # defaults to the iot_start y
    "strategy.kind": _Key(str, "relay", choices=STRATEGIES),
    "strategy.hysteresis_margin_mbps": _Key(float, 0.0, _nonneg, ">= 0"),
    "strategy.serving_bs": _Key(str, None),
    "strategy.relay_half_duplex_penalty": _Key(bool, False),
    "fading.g2g": _Key(str, MONTE_CARLO, choices=(MEAN_ONLY, MONTE_CARLO)),
    "fading.a2g": _Key(str, MEAN_ONLY, choices=(MEAN_ONLY, MONTE_CARLO)),
    "fading.realizations": _Key(int, 1000, lambda v: v >= 1, ">= 1"),
    "fading.clamp_after_average": _Key(bool, False),
}
_BS_KEY = re.compile(r"^nodes\.bs\.([A-Za-z0-9_\-]+)\.(position|tx_power_w)$")
_TABLE1_BS = {
    "primary": {"position": (0.0, 0.0, 50.0), "tx_power_w": 0.1},
    "secondary": {"position": (1400.0, 0.0, 50.0), "tx_power_w": 0.1},
}


# --- parsing ----------------------------------------------------------------

def _literal(text: str):
    low = text.lower()
    if low in ("true", "yes", "on"):
        return True
    if low in ("false", "no", "off"):
        return False
    try:
        return ast.literal_eval(text)
    except (ValueError, SyntaxError):
        if len(text) >= 2 and text[0] == text[-1] and text[0] in "'\"":
            return text[1:-1]
        return text


def parse_config_text(text: str, source: str | None = None) -> dict[str, tuple[Any, int]]:
    """Raw ``{dotted_key: (value, line_no)}`` mapping; no schema checks beyond syntax."""
    raw: dict[str, tuple[Any, int]] = {}
    section = ""
    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = re.split(r"\s[#;]|^[#;]", line, maxsplit=1)[0].strip()
        if not stripped:
            continue
        if stripped.startswith("["):
            m = re.fullmatch(r"\[\s*([A-Za-z0-9_.\-]*)\s*\]", stripped)
            if not m:
                raise ConfigError(f"malformed section header {stripped!r}", line=line_no, path=source)
            section = m.group(1)
            continue
        if "=" not in stripped:
            raise ConfigError(f"expected 'key = value', got {stripped!r}", line=line_no, path=source)
        key, value = (part.strip() for part in stripped.split("=", 1))
        if not re.fullmatch(r"[A-Za-z0-9_.\-]+", key):
            raise ConfigError(f"malformed key {key!r}", line=line_no, path=source)
        full = f"{section}.{key}" if section else key
        if full in raw:
            raise ConfigError(f"duplicate key (first set on line {raw[full][1]})", field=full, line=line_no, path=source)
        if value == "":
            raise ConfigError("missing value", field=full, line=line_no, path=source)
        raw[full] = (_literal(value), line_no)
    return raw


def _coerce(key: str, spec: _Key, value, line: int | None, source: str | None):
    def fail(msg):
        raise ConfigError(msg, field=key, line=line, path=source)

    if spec.kind is bool:
        if not isinstance(value, bool):
            fail(f"expected true/false, got {value!r}")
    elif spec.kind is int:
        if isinstance(value, bool) or not isinstance(value, (int, float)) or int(value) != value:
            fail(f"expected an integer, got {value!r}")
        value = int(value)
    elif spec.kind is float:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            fail(f"expected a number, got {value!r}")
        value = float(value)
    elif spec.kind is tuple:
        value = _position(value, fail)
    elif spec.kind is str:
        value = str(value)
        if spec.choices and value not in spec.choices:
            fail(f"must be one of {', '.join(spec.choices)}, got {value!r}")
    if spec.check is not None and not spec.check(value):
        fail(f"violates {spec.rule} (got {value!r})")
    return value


def _position(value, fail):
    if not (isinstance(value, (tuple, list)) and len(value) == 3):
        fail(f"expected a position (x, y, z), got {value!r}")
    if any(isinstance(v, bool) or not isinstance(v, (int, float)) for v in value):
        fail(f"position coordinates must be numbers, got {value!r}")
    coords = tuple(float(v) for v in value)
    if not all(math.isfinite(v) for v in coords):
        fail("position coordinates must be finite")
    if coords[2] < 0:
        fail("position z (height above ground) must be >= 0")
    return coords


def config_from_mapping(raw: dict[str, tuple[Any, int | None]], source: str | None = None) -> ScenarioConfig:
    """Validate ``{dotted_key: (value, line_no)}`` into a ScenarioConfig, filling defaults."""
    values: dict[str, Any] = {}
    bs_values: dict[str, dict[str, Any]] = {}
    for key, (value, line) in raw.items():
        m = _BS_KEY.match(key)
        if m:
            bs_id, attr = m.groups()
            spec = _Key(tuple, None) if attr == "position" else _Key(float, None, _positive, "> 0")
            bs_values.setdefault(bs_id, {})[attr] = _coerce(key, spec, value, line, source)
            continue
        if key not in SCHEMA:
            raise ConfigError("unknown key", field=key, line=line, path=source)
        values[key] = _coerce(key, SCHEMA[key], value, line, source)

    if "channel.noise_power_w" in values and "channel.noise_spectral_density" in values:
        raise ConfigError("set either noise_power_w or noise_spectral_density, not both", field="channel.noise_power_w", path=source)

    applied: list[str] = []
    for key, spec in SCHEMA.items():
        if key in values or spec.default is None:
            continue
        if key == "channel.noise_spectral_density" and "channel.noise_power_w" in values:
            continue
        values[key] = spec.default
        applied.append(f"{key} = {_format(spec.default)}")

    if not bs_values:
        bs_values = {k: dict(v) for k, v in _TABLE1_BS.items()}
        for bs_id, attrs in bs_values.items():
            for attr, v in attrs.items():
                applied.append(f"nodes.bs.{bs_id}.{attr} = {_format(v)}")
    for bs_id, attrs in bs_values.items():
        for attr in ("position", "tx_power_w"):
            if attr not in attrs:
                raise ConfigError("missing value", field=f"nodes.bs.{bs_id}.{attr}", path=source)

    def build(section: str, fn):
        try:
            return fn()
        except ConfigError:
            raise
        except (ValueError, KeyError) as exc:
            raise ConfigError(str(exc), field=section, path=source) from exc

    bandwidth = values["channel.bandwidth_hz"]
    n0 = values.get("channel.noise_spectral_density")
    if "channel.noise_power_w" in values:
        n0 = values["channel.noise_power_w"] / bandwidth
    channel = build("channel", lambda: ChannelParams(
        carrier_frequency_hz=values["channel.carrier_frequency_hz"],
        los_c=values["channel.los_c"],
        los_b=values["channel.los_b"],
        eta_los_db=values["channel.eta_los_db"],
        eta_nlos_db=values["channel.eta_nlos_db"],
        path_loss_exponent=values["channel.path_loss_exponent"],
        nakagami_m=values["channel.nakagami_m"],
        bandwidth_hz=bandwidth,
        noise_spectral_density=n0,
    ))
    iot_start = Position3D(*values["nodes.iot_start"])
    if "mobility.fixed_y" not in values:
        values["mobility.fixed_y"] = iot_start.y
        applied.append(f"mobility.fixed_y = {_format(iot_start.y)}")
    nodes = build("nodes", lambda: NodeSet(
        base_stations=tuple(
            BaseStation(bs_id, Position3D(*attrs["position"]), attrs["tx_power_w"]) for bs_id, attrs in bs_values.items()
        ),
        eavesdropper=Position3D(*values["nodes.eavesdropper"]),
        iot_start=iot_start,
        uav_tx_power_w=values["nodes.uav_tx_power_w"],
    ))
    mobility = build("mobility", lambda: MobilityParams(
        dx=values["mobility.dx"],
        speed_rate=values["mobility.speed_rate"],
        n_steps=values["mobility.n_steps"],
        iot_start=iot_start,
        uav_height=values["mobility.uav_height"],
        fixed_y=values["mobility.fixed_y"],
    ))
    strategy = build("strategy", lambda: Strategy(
        kind=values["strategy.kind"],
        hysteresis_margin_mbps=values["strategy.hysteresis_margin_mbps"],
        serving_bs=values.get("strategy.serving_bs"),
        relay_half_duplex_penalty=values["strategy.relay_half_duplex_penalty"],
    ))
    n = values["fading.realizations"]
    return build("strategy.serving_bs", lambda: ScenarioConfig(
        channel=channel,
        nodes=nodes,
        mobility=mobility,
        strategy=strategy,
        fading_g2g=FadingMode(values["fading.g2g"], n),
        fading_a2g=FadingMode(values["fading.a2g"], n),
        seed=values["run.seed"],
        threshold_mbps=values["run.threshold_mbps"],
        clamp_after_average=values["fading.clamp_after_average"],
        output_dir=values["output.dir"],
        output_format=values["output.format"],
        defaults_applied=tuple(applied),
    ))


def preset_path(name: str) -> Path | None:
    stem = name[:-4] if name.endswith(".cfg") else name
    if stem not in PRESETS:
        return None
    return Path(str(resources.files("uavsec") / "presets" / f"{stem}.cfg"))


def resolve_config_path(path: str | Path) -> Path:
    """A filesystem path, or the bundled preset of that name when no such file exists."""
    p = Path(path)
    if p.exists():
        return p
    preset = preset_path(p.name) if p.parent == Path(".") else None
    if preset is not None:
        return preset
    raise ConfigError(f"config file not found: {path}", path=str(path))


def load_config(path: str | Path) -> ScenarioConfig:
    p = resolve_config_path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc.strerror or exc}", path=str(p)) from exc
    return config_from_mapping(parse_config_text(text, str(p)), str(p))


def loads_config(text: str) -> ScenarioConfig:
    return config_from_mapping(parse_config_text(text))


# --- dumping ----------------------------------------------------------------

def _format(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, tuple):
        return "(" + ", ".join(_format(float(v)) for v in value) + ")"
    return str(value)


def dump_config(cfg: ScenarioConfig) -> str:
    """Every setting written out explicitly; ``loads_config`` of the result equals ``cfg``."""
    ch = cfg.channel
    sections = {
        "run": [("seed", cfg.seed), ("threshold_mbps", float(cfg.threshold_mbps))],
        "output": [("dir", cfg.output_dir), ("format", cfg.output_format)],
        "channel": [
            ("carrier_frequency_hz", ch.carrier_frequency_hz),
            ("los_c", ch.los_c),
            ("los_b", ch.los_b),
            ("eta_los_db", ch.eta_los_db),
            ("eta_nlos_db", ch.eta_nlos_db),
            ("path_loss_exponent", ch.path_loss_exponent),
            ("nakagami_m", ch.nakagami_m),
            ("bandwidth_hz", ch.bandwidth_hz),
            ("noise_spectral_density", ch.noise_spectral_density),
        ],
        "nodes": [
            ("eavesdropper", cfg.nodes.eavesdropper.as_tuple()),
            ("iot_start", cfg.nodes.iot_start.as_tuple()),
            ("uav_tx_power_w", cfg.nodes.uav_tx_power_w),
        ]
        + [
            item
            for bs in cfg.nodes.base_stations
            for item in ((f"bs.{bs.id}.position", bs.position.as_tuple()), (f"bs.{bs.id}.tx_power_w", bs.tx_power_w))
        ],
        "mobility": [
            ("dx", cfg.mobility.dx),
            ("speed_rate", cfg.mobility.speed_rate),
            ("n_steps", cfg.mobility.n_steps),
            ("uav_height", cfg.mobility.uav_height),
            ("fixed_y", cfg.mobility.fixed_y),
        ],
        "strategy": [
            ("kind", cfg.strategy.kind),
            ("hysteresis_margin_mbps", cfg.strategy.hysteresis_margin_mbps),
            ("relay_half_duplex_penalty", cfg.strategy.relay_half_duplex_penalty),
        ]
        + ([("serving_bs", cfg.strategy.serving_bs)] if cfg.strategy.serving_bs is not None else []),
        "fading": [
            ("g2g", cfg.fading_g2g.kind),
            ("a2g", cfg.fading_a2g.kind),
            ("realizations", max(cfg.fading_g2g.realizations, cfg.fading_a2g.realizations)),
            ("clamp_after_average", cfg.clamp_after_average),
        ],
    }
    lines = []
    for name, entries in sections.items():
        lines.append(f"[{name}]")
        lines.extend(f"{key} = {_format(value)}" for key, value in entries)
        lines.append("")
    return "\n".join(lines)
