"""Monte Carlo simulator for Fog Massive MIMO coordination-radius trade-offs."""

from .channel import ChannelRealization, large_scale_gains, path_loss, sample_fading, sample_shadowing_db
from .config_io import ConfigError, SimulationConfig, parse_config, write_cdf_csv, write_results
from .coordination import BASELINE, EpuView, build_epu_view, pilot_collision_set
from .geometry import NetworkLayout, build_layout, toroidal_distance
from .metrics import MetricsRecord, interference_power, signal_power, sir_db, spectral_efficiency
from .montecarlo import EmpiricalCdf, SweepResult, derive_trial_seed, empirical_cdf, run_simulation, run_trial

__version__ = "0.1.0"
