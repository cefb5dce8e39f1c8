"""Straight-road mobility: the IoT device advances ``dx`` per tick along x and the
UAV relay sits at ``speed_rate`` times the device's x-position.

Positions are closed-form in the step index, so replays and out-of-order
evaluation give the same coordinates.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .geom import Position3D


@dataclass(frozen=True)
class MobilityParams:
    dx: float = 15.0
    speed_rate: float = 1.0
    n_steps: int = 100
    iot_start: Position3D = field(default_factory=lambda: Position3D(0.0, 0.0, 0.0))
    uav_height: float = 20.0
    fixed_y: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.dx) and self.dx > 0):
            raise ValueError(f"dx must be > 0, got {self.dx}")
        if not (math.isfinite(self.speed_rate) and self.speed_rate > 0):
            raise ValueError(f"speed_rate must be > 0, got {self.speed_rate}")
        if self.n_steps < 0:
            raise ValueError(f"n_steps must be >= 0, got {self.n_steps}")
        if not (math.isfinite(self.uav_height) and self.uav_height > 0):
            raise ValueError(f"uav_height must be > 0, got {self.uav_height}")


def iot_position(step: int, params: MobilityParams) -> Position3D:
    if step < 0:
        raise ValueError(f"step must be >= 0, got {step}")
    return Position3D(params.iot_start.x + step * params.dx, params.fixed_y, 0.0)


def uav_position(step: int, params: MobilityParams) -> Position3D:
    return Position3D(params.speed_rate * iot_position(step, params).x, params.fixed_y, params.uav_height)
