"""Link rates and secrecy rate of the relay-assisted downlink.

The legitimate receiver keeps the better of the direct and relayed copies and
so does the eavesdropper; the secrecy rate is the clamped difference.
All rates here are bits/s. Every function accepts scalars or numpy arrays of
fading realizations and broadcasts.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import channel
from .channel import ChannelParams
from .geom import BaseStation, NodeSet, Position3D


@dataclass(frozen=True)
class LinkRateSet:
    r_t_l: np.ndarray | float  # BS -> UE
    r_r_l: np.ndarray | float  # UAV -> UE
    r_t_i: np.ndarray | float  # BS -> eavesdropper
    r_r_i: np.ndarray | float  # UAV -> eavesdropper


@dataclass(frozen=True)
class SecrecyResult:
    r_l: np.ndarray | float
    r_i: np.ndarray | float
    r_sec: np.ndarray | float


def shannon_rate(bandwidth: float, snr):
    return bandwidth * np.log2(1.0 + np.asarray(snr, dtype=float))[()]


def _g2g_rate(bs: BaseStation, rx: Position3D, g, params: ChannelParams):
    gain = channel.g2g_gain(g, channel.g2g_link_distance(bs.position, rx), params.path_loss_exponent)
    return shannon_rate(
        params.bandwidth_hz, channel.snr(bs.tx_power_w, gain, params.bandwidth_hz, params.noise_spectral_density)
    )


def _a2g_rate(p_tx: float, uav: Position3D, rx: Position3D, fading, params: ChannelParams):
    gain = channel.a2g_mean_gain(uav, rx, params).gain_linear * fading
    return shannon_rate(params.bandwidth_hz, channel.snr(p_tx, gain, params.bandwidth_hz, params.noise_spectral_density))


def link_rates(
    nodes: NodeSet,
    iot: Position3D,
    uav: Position3D | None,
    params: ChannelParams,
    g_samples,
    bs: BaseStation | None = None,
    a2g_samples=(1.0, 1.0),
    half_duplex_penalty: bool = False,
) -> LinkRateSet:
    """Rates of the four links for one geometry.

    ``g_samples`` is ``(g_ue, g_eve)``, the exponential fading powers of the
    BS->UE and BS->eavesdropper links; ``a2g_samples`` the Nakagami powers of
    UAV->UE and UAV->eavesdropper (unit in mean-only mode). Direct links use the
    BS power, relay links the UAV power. Without a UAV the relay rates are 0.
    """
    bs = nodes.primary if bs is None else bs
    g_ue, g_eve = g_samples
    r_t_l = _g2g_rate(bs, iot, g_ue, params)
    r_t_i = _g2g_rate(bs, nodes.eavesdropper, g_eve, params)
    if uav is None:
        zero = np.zeros_like(np.asarray(r_t_l, dtype=float))[()]
        return LinkRateSet(r_t_l, zero, r_t_i, zero)
    h_ue, h_eve = a2g_samples
    r_r_l = _a2g_rate(nodes.uav_tx_power_w, uav, iot, h_ue, params)
    r_r_i = _a2g_rate(nodes.uav_tx_power_w, uav, nodes.eavesdropper, h_eve, params)
    if half_duplex_penalty:
        r_r_l, r_r_i = 0.5 * r_r_l, 0.5 * r_r_i
    return LinkRateSet(r_t_l, r_r_l, r_t_i, r_r_i)


def secrecy_rate(rates: LinkRateSet) -> SecrecyResult:
    r_l = np.maximum(rates.r_t_l, rates.r_r_l)[()]
    r_i = np.maximum(rates.r_t_i, rates.r_r_i)[()]
    return SecrecyResult(r_l, r_i, np.maximum(r_l - r_i, 0.0)[()])
