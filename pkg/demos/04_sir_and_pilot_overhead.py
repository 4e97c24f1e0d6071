"""
SIR, pilot overhead and spectral efficiency
===========================================

A larger coordination disc collects more signal but needs one orthogonal
pilot per in-region UT, which eats into the coherence interval. This script
compares both interference models.
"""

import math

import numpy as np

from fogmimo import SimulationConfig, run_simulation

for mode in ("all_out_of_region", "pilot_collision_only"):
    config = SimulationConfig(interference_mode=mode, trials=30, r_coord_list=(300, 500, 700, 1000, 1500))
    result = run_simulation(config)
    print(f"\ninterference model: {mode}")
    print("  r km  E[tau_p]  SIR median dB   SE median b/s/Hz")
    for r in config.r_coord_list:
        sir = 10 * np.log10(result["sir", r].quantile(0.5))
        se = result["se", r].quantile(0.5)
        tau_p = math.pi * (r / 1000) ** 2 * config.rho_u
        print(f"  {r / 1000:4.1f}  {tau_p:6.1f}  {sir:14.2f}  {se:17.3f}")
