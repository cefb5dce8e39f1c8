"""Node positions on a 3D Cartesian grid (meters) and the geometry the channel models need."""
from __future__ import annotations

import math
from dataclasses import dataclass


class GeometryError(ValueError):
    """Raised for geometry that the propagation models cannot evaluate."""


@dataclass(frozen=True)
class Position3D:
    x: float
    y: float
    z: float = 0.0

    def __post_init__(self):
        for name in ("x", "y", "z"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise GeometryError(f"position.{name} must be finite, got {value!r}")
        if self.z < 0:
            raise GeometryError(f"position.z must be >= 0 (height above ground), got {self.z}")

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)


@dataclass(frozen=True)
class BaseStation:
    id: str
    position: Position3D
    tx_power_w: float

    def __post_init__(self):
        if not self.tx_power_w > 0:
            raise GeometryError(f"base station {self.id!r}: tx_power_w must be > 0")


@dataclass(frozen=True)
class NodeSet:
    """Static nodes of a scenario plus the IoT start point and UAV power."""

    base_stations: tuple[BaseStation, ...]
    eavesdropper: Position3D
    iot_start: Position3D
    uav_tx_power_w: float

    def __post_init__(self):
        if not self.base_stations:
            raise GeometryError("at least one base station is required")
        ids = [bs.id for bs in self.base_stations]
        if len(set(ids)) != len(ids):
            raise GeometryError(f"duplicate base station ids: {ids}")
        if not self.uav_tx_power_w > 0:
            raise GeometryError("uav_tx_power_w must be > 0")

    @property
    def primary(self) -> BaseStation:
        return self.base_stations[0]

    def base_station(self, bs_id: str) -> BaseStation:
        for bs in self.base_stations:
            if bs.id == bs_id:
                return bs
        raise KeyError(bs_id)


def distance3(a: Position3D, b: Position3D) -> float:
    return math.sqrt((a.x - b.x) ** 2 + (a.y - b.y) ** 2 + (a.z - b.z) ** 2)


def horizontal_distance(a: Position3D, b: Position3D) -> float:
    return math.hypot(a.x - b.x, a.y - b.y)


def elevation_angle_deg(h_t: float, r: float) -> float:
    """Elevation angle in degrees of a transmitter ``h_t`` above the receiver at ground range ``r``.

    A vertical link (``r == 0``) returns exactly 90 degrees.
    """
    if h_t < 0 or r < 0:
        raise GeometryError(f"elevation angle needs h_t >= 0 and r >= 0, got h_t={h_t}, r={r}")
    if r == 0:
        if h_t == 0:
            raise GeometryError("elevation angle is undefined for co-located ground nodes")
        return 90.0
    return math.degrees(math.atan(h_t / r))
