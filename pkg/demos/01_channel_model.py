"""
Channel model: three-slope path loss, shadowing and Rayleigh fading
===================================================================

Walks through the large-scale gain and the small-scale fading that the
simulator draws for every AP/UT pair.
"""

import numpy as np

from fogmimo import SimulationConfig
from fogmimo.channel import path_loss, sample_fading, sample_shadowing_db

config = SimulationConfig()

# %%
# The distance law is flat up to d0 = 10 m, falls at 20 dB/decade up to
# d1 = 100 m and at 35 dB/decade beyond.
for d in (1, 10, 50, 100, 300, 1000, 3000):
    print(f"{d:6d} m  {10 * np.log10(path_loss(d, config)):8.2f} dB")

# %%
# Shadowing is lognormal: Gaussian in dB with an 8 dB deviation.
rng = np.random.default_rng(0)
xi = sample_shadowing_db(rng, config, size=100_000)
print(f"shadowing mean {xi.mean():.3f} dB, std {xi.std():.3f} dB")

# %%
# Rayleigh fading: unit-variance circular Gaussian. With more antennas per AP
# the collected power ||h||^2 / N_r concentrates around 1 (channel hardening).
for n_r in (1, 4, 16, 64):
    h = sample_fading(1, n_r, 20_000, rng)
    norm = (np.abs(h) ** 2).sum(axis=1).ravel() / n_r
    print(f"N_r={n_r:3d}: mean {norm.mean():.3f}, std {norm.std():.3f}")
