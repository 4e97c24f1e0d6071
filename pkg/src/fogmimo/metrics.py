"""Per-UT signal, interference, SIR and spectral efficiency.

Signal is the power collected over an EPU's coordinated APs. Interference is
the power those same APs receive from UTs outside the coordination region
(all of them, or only those reusing the UT's pilot). Interference always uses
the hardened ``n_r * beta`` form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .channel import ChannelRealization
from .coordination import EpuView


@dataclass(frozen=True, slots=True)
class MetricsRecord:
    ut_index: int
    epu_index: int
    r_coord: float | str
    signal: float
    interference: float
    sir_db: float
    overhead: float
    se: float


def signal_power(view: EpuView, chan: ChannelRealization, k: int, mode: str = "hardened") -> float:
    view.check_in_region(k)
    aps = view.coordinated_aps
    if mode == "hardened":
        return float(chan.n_r * chan.beta[aps, k].sum())
    if mode == "exact":
        return float(chan.faded_gain[aps, k].sum())
    raise ValueError(f"unknown fading mode {mode!r}")


def interference_power(view: EpuView, chan: ChannelRealization, k: int, mode: str = "all_out_of_region") -> float:
    view.check_in_region(k)
    if mode == "all_out_of_region":
        interferers = ~view.in_region_mask
    elif mode == "pilot_collision_only":
        interferers = ~view.in_region_mask & (view.pilot_of == view.pilot_of[k])
    else:
        raise ValueError(f"unknown interference mode {mode!r}")
    block = chan.beta[np.ix_(view.coordinated_aps, np.flatnonzero(interferers))]
    return float(chan.n_r * block.sum())


def sir_db(S: float, I: float, cap_db: float) -> float:
    if S < 0 or I < 0:
        raise ValueError("powers must be non-negative")
    if S == 0 and I == 0:
        raise ValueError("SIR undefined: zero signal and zero interference")
    if I == 0:
        return float(cap_db)
    if S == 0:
        return -math.inf
    return min(10 * math.log10(S / I), float(cap_db))


def overhead(tau_p: int, tau_c: int) -> float:
    """Fraction of the coherence interval left for data."""
    return max(0, tau_c - tau_p) / tau_c


def spectral_efficiency(sir_db: float, tau_p: int, tau_c: int) -> float:
    return overhead(tau_p, tau_c) * math.log2(1 + 10 ** (sir_db / 10))


def evaluate_view(
    view: EpuView,
    chan: ChannelRealization,
    r_coord: float | str,
    *,
    fading_mode: str,
    interference_mode: str,
    max_sir_db: float,
    tau_c: int,
) -> list[MetricsRecord]:
    """Records for every served, in-region UT of a view.

    Vectorised equivalent of calling :func:`signal_power`,
    :func:`interference_power` and :func:`sir_db` per UT.
    """
    uts = view.evaluated_uts
    aps = view.coordinated_aps
    # no APs means S = I = 0: nothing meaningful to record
    if view.degenerate or len(uts) == 0 or len(aps) == 0:
        return []
    # received power at the coordinated APs, per UT
    collected = chan.n_r * chan.beta[aps].sum(axis=0)
    if fading_mode == "exact":
        signal = chan.faded_gain[aps][:, uts].sum(axis=0)
    else:
        signal = collected[uts]

    outside = ~view.in_region_mask
    if interference_mode == "all_out_of_region":
        interference = np.full(len(uts), collected[outside].sum())
    else:
        per_pilot = np.bincount(view.pilot_of[outside], weights=collected[outside], minlength=view.tau_p)
        interference = per_pilot[view.pilot_of[uts]]

    ovh = overhead(view.tau_p, tau_c)
    records = []
    for k, s, i in zip(uts.tolist(), signal.tolist(), interference.tolist()):
        sir = sir_db(s, i, max_sir_db)
        se = ovh * math.log2(1 + 10 ** (sir / 10))
        records.append(MetricsRecord(k, view.epu_index, r_coord, s, i, sir, ovh, se))
    return records
