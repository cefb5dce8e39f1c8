"""Propagation math: free-space and excess pathloss, LoS probability, G2G power law and SNR.

Pathloss values are in dB, gains are linear power ratios. Distances below
``MIN_DISTANCE_M`` are clamped by the link-level helpers because the far-field
models are meaningless there (it happens when the IoT device passes exactly
over the eavesdropper position).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .geom import Position3D, distance3, elevation_angle_deg, horizontal_distance

SPEED_OF_LIGHT = 2.998e8  # m/s
MIN_DISTANCE_M = 1.0


class ChannelDomainError(ValueError):
    """Raised when a propagation formula is evaluated outside its domain."""


@dataclass(frozen=True)
class ChannelParams:
    """Environment constants shared by every link of a scenario.

    Defaults are the urban constants of the A2G measurement model at 2 GHz and
    the reference radio settings (10 MHz, total noise power 1e-12 W).
    """

    carrier_frequency_hz: float = 2e9
    los_c: float = 9.61
    los_b: float = 0.16
    eta_los_db: float = 1.0
    eta_nlos_db: float = 20.0
    path_loss_exponent: float = 4.0
    nakagami_m: float = 1.0
    bandwidth_hz: float = 10e6
    noise_spectral_density: float = 1e-19  # W/Hz

    def __post_init__(self):
        for name in ("carrier_frequency_hz", "bandwidth_hz", "noise_spectral_density", "los_b", "los_c"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise ChannelDomainError(f"{name} must be finite and > 0, got {value!r}")
        if not 0 <= self.eta_los_db <= self.eta_nlos_db:
            raise ChannelDomainError(
                f"need 0 <= eta_los_db <= eta_nlos_db, got {self.eta_los_db}, {self.eta_nlos_db}"
            )
        if not self.path_loss_exponent >= 2:
            raise ChannelDomainError(f"path_loss_exponent must be >= 2, got {self.path_loss_exponent}")
        if not self.nakagami_m >= 0.5:
            raise ChannelDomainError(f"nakagami_m must be >= 0.5, got {self.nakagami_m}")

    @property
    def noise_power_w(self) -> float:
        return self.bandwidth_hz * self.noise_spectral_density

    @property
    def eta_ratio(self) -> float:
        """LoS over NLoS excess-loss ratio (informational only)."""
        return self.eta_los_db / self.eta_nlos_db if self.eta_nlos_db else math.nan


@dataclass(frozen=True)
class LinkGain:
    gain_linear: float
    source: Literal["A2G-mean", "G2G-faded"]

    def __post_init__(self):
        if not (math.isfinite(self.gain_linear) and self.gain_linear > 0):
            raise ChannelDomainError(f"link gain must be finite and > 0, got {self.gain_linear!r}")


def fspl_db(f: float, d: float) -> float:
    if not f > 0:
        raise ChannelDomainError(f"carrier frequency must be > 0, got {f}")
    if not d > 0:
        raise ChannelDomainError(f"FSPL is undefined at distance {d} m; clamp before calling")
    return 20.0 * math.log10(4.0 * math.pi * f * d / SPEED_OF_LIGHT)


def los_probability(theta_deg: float, params: ChannelParams) -> float:
    if not 0.0 <= theta_deg <= 90.0:
        raise ChannelDomainError(f"elevation angle must lie in [0, 90] degrees, got {theta_deg}")
    c = params.los_c
    return 1.0 / (1.0 + c * math.exp(-params.los_b * (theta_deg - c)))


def mean_pathloss_a2g_db(tx: Position3D, rx: Position3D, params: ChannelParams) -> float:
    """LoS-probability weighted pathloss from an aerial ``tx`` to a lower ``rx``."""
    theta = elevation_angle_deg(tx.z - rx.z, horizontal_distance(tx, rx))
    p_los = los_probability(theta, params)
    fspl = fspl_db(params.carrier_frequency_hz, max(distance3(tx, rx), MIN_DISTANCE_M))
    return fspl + p_los * params.eta_los_db + (1.0 - p_los) * params.eta_nlos_db


def db_to_linear_gain(pl_db):
    """Pathloss in dB to a linear power gain, ``10**(-pl/10)``."""
    return np.power(10.0, -np.asarray(pl_db, dtype=float) / 10.0)[()]


def g2g_gain(g, d: float, alpha: float):
    """Ground link attenuation ``g * d**-alpha``; ``g`` may be an array of fading powers."""
    if not d > 0:
        raise ChannelDomainError(f"G2G gain is undefined at distance {d} m; clamp before calling")
    return g * d ** (-alpha)


def snr(p_tx: float, gain, bandwidth: float, n0: float):
    return p_tx * gain / (bandwidth * n0)


def a2g_mean_gain(tx: Position3D, rx: Position3D, params: ChannelParams) -> LinkGain:
    return LinkGain(db_to_linear_gain(mean_pathloss_a2g_db(tx, rx, params)), "A2G-mean")


def g2g_link_distance(tx: Position3D, rx: Position3D) -> float:
    return max(distance3(tx, rx), MIN_DISTANCE_M)
