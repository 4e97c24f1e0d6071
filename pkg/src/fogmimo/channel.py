"""Large-scale gains (three-slope path loss, lognormal shadowing) and Rayleigh fading.

The channel between antenna n of AP m and UT k is ``h_mnk * sqrt(beta_mk)``.
Transmit powers are normalised to 1, so every power here is relative to it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .config_io import SimulationConfig
from .geometry import NetworkLayout


@dataclass(frozen=True)
class ChannelRealization:
    """``beta`` is (M, K); ``h`` is (M, n_r, K) complex, only for exact fading."""

    beta: np.ndarray
    h: np.ndarray | None = None
    n_r: int = 1

    def __post_init__(self):
        if self.h is not None:
            if self.h.shape != (self.beta.shape[0], self.n_r, self.beta.shape[1]):
                raise ValueError(f"fading shape {self.h.shape} does not match beta {self.beta.shape} / n_r={self.n_r}")

    @cached_property
    def faded_gain(self) -> np.ndarray:
        """``||h_mk||^2 * beta_mk`` per (AP, UT); requires realised fading."""
        if self.h is None:
            raise ValueError("no small-scale fading in this realization")
        power = self.h.real**2 + self.h.imag**2
        return power.sum(axis=1) * self.beta


def path_loss(d, config: SimulationConfig):
    """Three-slope distance law without shadowing.

    Flat (gain 1) below ``d0``, exponent ``gamma0`` between ``d0`` and ``d1``,
    ``gamma1`` beyond. Accepts scalars or arrays.
    """
    d = np.asarray(d, dtype=float)
    d0, d1, g0, g1 = config.d0, config.d1, config.gamma0, config.gamma1
    middle = (np.maximum(d, d0) / d0) ** -g0
    far = (d1 / d0) ** -g0 * (np.maximum(d, d1) / d1) ** -g1
    out = np.where(d < d0, 1.0, np.where(d < d1, middle, far))
    return float(out) if out.ndim == 0 else out


def sample_shadowing_db(rng: np.random.Generator, config: SimulationConfig, size=None):
    return rng.normal(0.0, config.sigma_sh_db, size=size)


def shadowed_gain(shadowing_db, pl):
    return 10.0 ** (np.asarray(shadowing_db) / 10.0) * pl


def large_scale_gains(layout: NetworkLayout, config: SimulationConfig, rng: np.random.Generator) -> np.ndarray:
    """beta matrix (APs x UTs) with independent shadowing per pair."""
    pl = path_loss(layout.ap_ut_distance, config)
    xi = sample_shadowing_db(rng, config, size=pl.shape)
    return shadowed_gain(xi, pl)


def sample_fading(M: int, n_r: int, K: int, rng: np.random.Generator) -> np.ndarray:
    """i.i.d. CN(0, 1) entries of shape (M, n_r, K)."""
    if min(M, n_r, K) < 1:
        raise ValueError("fading dimensions must be >= 1")
    scale = np.sqrt(0.5)
    return scale * (rng.standard_normal((M, n_r, K)) + 1j * rng.standard_normal((M, n_r, K)))


def realize_channel(
    layout: NetworkLayout,
    config: SimulationConfig,
    shadow_rng: np.random.Generator,
    fading_rng: np.random.Generator | None = None,
) -> ChannelRealization:
    beta = large_scale_gains(layout, config, shadow_rng)
    h = None
    if config.fading_mode == "exact" and beta.size:
        h = sample_fading(beta.shape[0], config.n_r, beta.shape[1], fading_rng)
    return ChannelRealization(beta=beta, h=h, n_r=config.n_r)
