"""Seeded Monte Carlo trials over the coordination-radius sweep.

Every random stream of a trial is seeded from ``(master_seed, trial, purpose)``
alone, so results do not depend on worker count or scheduling. Layout,
shadowing and fading are drawn once per trial and shared by all radii.
"""

from __future__ import annotations

import enum
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .channel import realize_channel
from .config_io import SimulationConfig
from .coordination import BASELINE, build_epu_view
from .geometry import build_layout
from .metrics import MetricsRecord, evaluate_view

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MIX_MUL1 = 0xBF58476D1CE4E5B9
MIX_MUL2 = 0x94D049BB133111EB

METRICS = ("signal", "interference", "sir", "se")


class Purpose(enum.IntEnum):
    LAYOUT = 1
    SHADOWING = 2
    FADING = 3
    PILOTS = 4

    @property
    def tag(self) -> int:
        # spread the small enum values across the word before xoring
        return _mix64(self.value * GOLDEN_GAMMA & MASK64)


def _mix64(z: int) -> int:
    """SplitMix64 finalizer; a bijection on 64-bit words."""
    z = ((z ^ (z >> 30)) * MIX_MUL1) & MASK64
    z = ((z ^ (z >> 27)) * MIX_MUL2) & MASK64
    return z ^ (z >> 31)


def derive_trial_seed(master_seed: int, trial: int, purpose: Purpose | str) -> int:
    """64-bit seed for one (trial, purpose) stream.

    Each step is a bijection in its varying input, so distinct trials (below
    2**64) or distinct purposes never collide for a given master seed.
    """
    if isinstance(purpose, str):
        purpose = Purpose[purpose.upper()]
    z = _mix64((master_seed + GOLDEN_GAMMA) & MASK64)
    z = _mix64((z + (trial + 1) * GOLDEN_GAMMA) & MASK64)
    return _mix64(z ^ purpose.tag)


def trial_rng(config: SimulationConfig, trial: int, purpose: Purpose) -> np.random.Generator:
    return np.random.default_rng(derive_trial_seed(config.master_seed, trial, purpose))


@dataclass(frozen=True)
class EmpiricalCdf:
    sorted_values: np.ndarray
    probabilities: np.ndarray

    def __len__(self):
        return len(self.sorted_values)

    def __eq__(self, other):
        if not isinstance(other, EmpiricalCdf):
            return NotImplemented
        return np.array_equal(self.sorted_values, other.sorted_values) and np.array_equal(
            self.probabilities, other.probabilities
        )

    def quantile(self, q: float) -> float:
        """Smallest sample whose CDF reaches ``q``."""
        idx = np.searchsorted(self.probabilities, q * (1 - 1e-12))
        return float(self.sorted_values[min(idx, len(self) - 1)])

    def evaluate(self, x: float) -> float:
        """Fraction of samples <= x."""
        return np.searchsorted(self.sorted_values, x, side="right") / len(self)


def empirical_cdf(samples) -> EmpiricalCdf:
    values = np.sort(np.asarray(samples, dtype=float).ravel(), kind="stable")
    n = len(values)
    if n == 0:
        raise ValueError("empirical CDF of an empty sample")
    return EmpiricalCdf(values, np.arange(1, n + 1) / n)


@dataclass
class SweepResult:
    per_point: dict[tuple[str, float | str], EmpiricalCdf] = field(default_factory=dict)
    skipped_records: int = 0

    def __getitem__(self, key):
        return self.per_point[key]


@dataclass
class TrialOutput:
    trial: int
    records: list[MetricsRecord]
    skipped: int


def sweep_points(config: SimulationConfig) -> list[float | str]:
    points = list(config.r_coord_list)
    if config.baseline_service_area:
        points.append(BASELINE)
    return points


def simulate_trial(config: SimulationConfig, trial: int) -> TrialOutput:
    """One layout + channel, evaluated for every EPU and sweep point."""
    layout = build_layout(config, trial_rng(config, trial, Purpose.LAYOUT))
    chan = realize_channel(
        layout,
        config,
        trial_rng(config, trial, Purpose.SHADOWING),
        trial_rng(config, trial, Purpose.FADING),
    )
    pilot_rng = trial_rng(config, trial, Purpose.PILOTS)
    records = []
    skipped = 0
    for r_coord in sweep_points(config):
        for epu in range(layout.n_epus):
            view = build_epu_view(epu, r_coord, layout, pilot_rng)
            if view.degenerate:
                skipped += len(view.served_uts)
                continue
            if len(view.coordinated_aps) == 0:
                skipped += len(view.evaluated_uts)
                continue
            records += evaluate_view(
                view,
                chan,
                r_coord,
                fading_mode=config.fading_mode,
                interference_mode=config.interference_mode,
                max_sir_db=config.max_sir_db,
                tau_c=config.tau_c,
            )
    return TrialOutput(trial, records, skipped)


def run_trial(config: SimulationConfig, trial: int) -> list[MetricsRecord]:
    return simulate_trial(config, trial).records


def _metric_value(rec: MetricsRecord, metric: str) -> float:
    if metric == "sir":
        return 10 ** (rec.sir_db / 10)
    return getattr(rec, metric)


def aggregate(outputs: Iterable[TrialOutput], config: SimulationConfig) -> SweepResult:
    outputs = sorted(outputs, key=lambda o: o.trial)
    samples = defaultdict(list)
    skipped = 0
    for out in outputs:
        skipped += out.skipped
        for rec in out.records:
            for metric in METRICS:
                samples[metric, rec.r_coord].append(_metric_value(rec, metric))
    result = SweepResult(skipped_records=skipped)
    for metric in METRICS:
        for point in sweep_points(config):
            values = samples.get((metric, point))
            if not values:
                raise RuntimeError(f"no usable records for metric {metric!r} at {point!r}")
            result.per_point[metric, point] = empirical_cdf(values)
    return result


def run_simulation(config: SimulationConfig, workers: int = 1, trials: Iterable[int] | None = None) -> SweepResult:
    """Run all trials and pool served-UT samples into one CDF per (metric, point).

    Power-like metrics (signal, interference, sir) are kept linear;
    ``se`` is in bit/s/Hz.
    """
    trial_ids = list(range(config.trials)) if trials is None else list(trials)
    if workers <= 1:
        outputs = [simulate_trial(config, t) for t in trial_ids]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outputs = list(pool.map(simulate_trial, [config] * len(trial_ids), trial_ids))
    return aggregate(outputs, config)
