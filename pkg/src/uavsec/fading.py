"""Seeded small-scale fading powers.

Every (seed, time step, link) triple owns its own Philox substream derived
through ``numpy.random.SeedSequence`` spawn keys; realization ``k`` of a link is
the ``k``-th draw of that substream. Draws for one link therefore never shift
when another link consumes more or fewer samples, and a realization's value
does not depend on how many realizations are requested after it.
"""
from __future__ import annotations

import zlib
from dataclasses import dataclass
from typing import Literal

import numpy as np

MEAN_ONLY = "mean"
MONTE_CARLO = "montecarlo"

_SEED_LIMIT = 2**64


@dataclass(frozen=True)
class FadingMode:
    kind: Literal["mean", "montecarlo"] = MEAN_ONLY
    realizations: int = 1

    def __post_init__(self):
        if self.kind not in (MEAN_ONLY, MONTE_CARLO):
            raise ValueError(f"fading mode must be {MEAN_ONLY!r} or {MONTE_CARLO!r}, got {self.kind!r}")
        if self.realizations < 1:
            raise ValueError(f"realizations must be >= 1, got {self.realizations}")

    @property
    def is_mean(self) -> bool:
        return self.kind == MEAN_ONLY


MEAN = FadingMode(MEAN_ONLY, 1)


def link_key(link_id: int | str) -> int:
    """Stable non-negative integer for a link name (CRC-32, identical on every platform)."""
    if isinstance(link_id, str):
        return zlib.crc32(link_id.encode("utf-8"))
    if link_id < 0:
        raise ValueError(f"integer link ids must be >= 0, got {link_id}")
    return int(link_id)


@dataclass(frozen=True)
class RngStream:
    seed: int
    step: int
    realization: int
    link_id: int | str

    def __post_init__(self):
        if not 0 <= self.seed < _SEED_LIMIT:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if self.step < 0 or self.realization < 0:
            raise ValueError("step and realization must be >= 0")


def _link_generator(seed: int, step: int, link_id: int | str) -> np.random.Generator:
    ss = np.random.SeedSequence(entropy=seed, spawn_key=(step, link_key(link_id)))
    return np.random.Generator(np.random.Philox(ss))


def exponential_powers(seed: int, step: int, link_id: int | str, mode: FadingMode) -> np.ndarray:
    """Unit-mean Exp(1) powers (Rayleigh fading) for realizations ``0..n-1`` of one link."""
    if mode.is_mean:
        return np.ones(1)
    return _link_generator(seed, step, link_id).standard_exponential(mode.realizations)


def nakagami_powers(m: float, seed: int, step: int, link_id: int | str, mode: FadingMode) -> np.ndarray:
    """Nakagami-m power samples, i.e. Gamma(shape=m, scale=1/m), unit mean."""
    if not m >= 0.5:
        raise ValueError(f"Nakagami shape m must be >= 0.5, got {m}")
    if mode.is_mean:
        return np.ones(1)
    return _link_generator(seed, step, link_id).gamma(m, 1.0 / m, mode.realizations)


def sample_exponential_power(stream: RngStream, mode: FadingMode = FadingMode(MONTE_CARLO, 1)) -> float:
    if mode.is_mean:
        return 1.0
    draws = exponential_powers(stream.seed, stream.step, stream.link_id, FadingMode(MONTE_CARLO, stream.realization + 1))
    return float(draws[stream.realization])


def sample_nakagami_power(m: float, stream: RngStream, mode: FadingMode = FadingMode(MONTE_CARLO, 1)) -> float:
    if not m >= 0.5:
        raise ValueError(f"Nakagami shape m must be >= 0.5, got {m}")
    if mode.is_mean:
        return 1.0
    draws = nakagami_powers(m, stream.seed, stream.step, stream.link_id, FadingMode(MONTE_CARLO, stream.realization + 1))
    return float(draws[stream.realization])
