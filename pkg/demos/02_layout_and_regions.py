"""
Network layout: EPU lattice, service hexagons and coordination discs
====================================================================

Builds one wrap-around layout and counts what each EPU sees as the
coordination radius grows.
"""

import math

import numpy as np

from fogmimo import SimulationConfig
from fogmimo.geometry import build_layout, coordination_set, in_region_uts, served_uts, service_hexagon_aps

config = SimulationConfig()
layout = build_layout(config, np.random.default_rng(1))
print(f"torus {layout.width:.0f} x {layout.height:.0f} m, {layout.n_epus} EPUs, "
      f"{layout.n_aps} APs, {layout.n_uts} UTs")

# %%
# A service hexagon has area (sqrt(3)/2) d_epu^2, about 0.866 km^2.
hex_aps = [len(service_hexagon_aps(e, layout)) for e in range(layout.n_epus)]
hex_uts = [len(served_uts(e, layout)) for e in range(layout.n_epus)]
print(f"per hexagon: {np.mean(hex_aps):.1f} APs (expect 34.6), {np.mean(hex_uts):.2f} UTs (expect 8.66)")

# %%
# Coordination discs: expected AP and UT counts grow as pi r^2. Once r passes
# d_epu / 2 neighbouring discs overlap and some APs serve several EPUs.
for r in (300, 500, 700, 1000):
    aps = [len(coordination_set(e, r, layout)) for e in range(layout.n_epus)]
    uts = [len(in_region_uts(e, r, layout)) for e in range(layout.n_epus)]
    membership = np.zeros(layout.n_aps, dtype=int)
    for e in range(layout.n_epus):
        membership[coordination_set(e, r, layout)] += 1
    area = math.pi * (r / 1000) ** 2
    print(f"r={r:5d} m: {np.mean(aps):6.1f} APs (expect {40 * area:5.1f}), "
          f"{np.mean(uts):5.2f} UTs = pilot length (expect {10 * area:5.2f}), "
          f"{np.mean(membership >= 2):.0%} APs shared")
