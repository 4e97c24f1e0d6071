"""Simulation parameters, config-file / command-line parsing and CSV output.

Config files are flat ``key = value`` lines with ``#`` comments. Keys are the
field names of :class:`SimulationConfig`; command-line flags ``--key value``
override whatever the file sets.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import math
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import TYPE_CHECKING, Any

import numpy as np

if TYPE_CHECKING:
    from .montecarlo import EmpiricalCdf, SweepResult

FADING_MODES = ("hardened", "exact")
INTERFERENCE_MODES = ("all_out_of_region", "pilot_collision_only")

# metrics whose samples are linear powers; written to CSV in dB
POWER_METRICS = ("signal", "interference", "sir")


class ConfigError(ValueError):
    """Invalid or unreadable configuration. ``key`` names the offending field."""

    def __init__(self, key: str, reason: str):
        self.key = key
        self.reason = reason
        super().__init__(f"{key}: {reason}")


@dataclass(frozen=True)
class SimulationConfig:
    """All physical, geometric and run-control parameters.

    Densities are per km^2, lengths are meters. Defaults reproduce the
    reference scenario (10 UTs/km^2, 40 APs/km^2, 1 km EPU spacing).
    """

    rho_u: float = 10.0
    rho_a: float = 40.0
    d_epu: float = 1000.0
    r_coord_list: tuple[float, ...] = (300.0, 500.0, 700.0, 1000.0)
    baseline_service_area: bool = False
    gamma0: float = 2.0
    gamma1: float = 3.5
    d0: float = 10.0
    d1: float = 100.0
    sigma_sh_db: float = 8.0
    n_r: int = 1
    tau_c: int = 200
    window_nx: int = 6
    window_ny: int = 6
    trials: int = 100
    master_seed: int = 0
    fading_mode: str = "hardened"
    interference_mode: str = "all_out_of_region"
    max_sir_db: float = 60.0

    def __post_init__(self):
        object.__setattr__(self, "r_coord_list", tuple(float(r) for r in self.r_coord_list))
        self._validate()

    def _validate(self):
        for key in ("rho_u", "rho_a", "d_epu", "d0", "d1", "gamma0", "gamma1"):
            value = getattr(self, key)
            if not (math.isfinite(value) and value > 0):
                raise ConfigError(key, f"must be > 0, got {value}")
        if not self.d0 < self.d1:
            raise ConfigError("d0", "d0 < d1 violated")
        if not (math.isfinite(self.sigma_sh_db) and self.sigma_sh_db >= 0):
            raise ConfigError("sigma_sh_db", f"must be >= 0, got {self.sigma_sh_db}")
        if self.n_r < 1:
            raise ConfigError("n_r", f"must be >= 1, got {self.n_r}")
        if self.tau_c < 2:
            raise ConfigError("tau_c", f"must be >= 2, got {self.tau_c}")
        if self.window_nx < 1 or self.window_ny < 2:
            raise ConfigError("window_nx", "lattice needs window_nx >= 1 and window_ny >= 2")
        if self.window_ny % 2:
            raise ConfigError("window_ny", f"must be even for hexagonal wrap-around, got {self.window_ny}")
        if self.trials < 1:
            raise ConfigError("trials", f"must be >= 1, got {self.trials}")
        if not 0 <= self.master_seed < 2**64:
            raise ConfigError("master_seed", "must be an unsigned 64-bit integer")
        if self.fading_mode not in FADING_MODES:
            raise ConfigError("fading_mode", f"must be one of {FADING_MODES}, got {self.fading_mode!r}")
        if self.interference_mode not in INTERFERENCE_MODES:
            raise ConfigError(
                "interference_mode",
                f"must be one of {INTERFERENCE_MODES}, got {self.interference_mode!r}",
            )
        if not math.isfinite(self.max_sir_db):
            raise ConfigError("max_sir_db", "must be finite")
        if not self.r_coord_list and not self.baseline_service_area:
            raise ConfigError("r_coord_list", "nothing to simulate: empty radius list and no baseline")
        r_max = 0.5 * min(self.width, self.height)
        for r in self.r_coord_list:
            if not 0 < r <= r_max:
                raise ConfigError("r_coord_list", f"radius {r} outside (0, {r_max:.3f}]")

    @property
    def width(self) -> float:
        return self.window_nx * self.d_epu

    @property
    def height(self) -> float:
        return self.window_ny * math.sqrt(3) / 2 * self.d_epu

    @property
    def area_km2(self) -> float:
        return self.width * self.height / 1e6

    @property
    def n_epus(self) -> int:
        return self.window_nx * self.window_ny

    def replace(self, **changes) -> SimulationConfig:
        return dataclasses.replace(self, **changes)


_FIELDS = {f.name: f for f in dataclasses.fields(SimulationConfig)}

# short / legacy CLI spellings
_FLAG_ALIASES = {
    "seed": "master_seed",
    "r_coord": "r_coord_list",
}


def _coerce(key: str, raw: str) -> Any:
    ftype = _FIELDS[key].type
    text = raw.strip()
    try:
        if ftype == "bool":
            low = text.lower()
            if low in ("1", "true", "yes", "on"):
                return True
            if low in ("0", "false", "no", "off"):
                return False
            raise ValueError(text)
        if ftype == "int":
            return int(text, 0)
        if ftype == "float":
            return float(text)
        if ftype.startswith("tuple"):
            return tuple(float(v) for v in text.split(",") if v.strip())
    except ValueError:
        raise ConfigError(key, f"cannot parse value {raw!r}") from None
    return text


def _format(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, tuple):
        return ",".join(repr(v) for v in value)
    if isinstance(value, float):
        return repr(value)
    return str(value)


def read_config_file(path: str | os.PathLike) -> dict[str, Any]:
    path = Path(path)
    if not path.is_file():
        raise ConfigError("config", f"file not found: {path}")
    values = {}
    for lineno, line in enumerate(path.read_text().splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError("config", f"{path}:{lineno}: expected 'key = value'")
        key, raw = (s.strip() for s in line.split("=", 1))
        if key not in _FIELDS:
            raise ConfigError(key, f"unknown key in {path}:{lineno}")
        values[key] = _coerce(key, raw)
    return values


def write_config_file(config: SimulationConfig, path: str | os.PathLike) -> Path:
    path = Path(path)
    lines = [f"{name} = {_format(getattr(config, name))}" for name in _FIELDS]
    path.write_text("\n".join(lines) + "\n")
    return path


class _RaisingParser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError("argv", message)


def _build_parser() -> argparse.ArgumentParser:
    parser = _RaisingParser(prog="fogmimo", description="F-MaMIMO coordination-radius Monte Carlo")
    parser.add_argument("--config", default=None, help="key = value config file")
    parser.add_argument("--out", default="results", help="output directory for CSV files")
    parser.add_argument("--workers", type=int, default=1, help="worker processes")
    parser.add_argument(
        "--baseline-service-area", "--baseline_service_area",
        dest="baseline_service_area", action="store_const", const="true",
        default=argparse.SUPPRESS,
    )
    for name in _FIELDS:
        if name == "baseline_service_area":
            continue
        flags = {f"--{name}", f"--{name.replace('_', '-')}"}
        flags |= {f"--{a}" for a, target in _FLAG_ALIASES.items() if target == name}
        flags |= {f"--{a.replace('_', '-')}" for a, target in _FLAG_ALIASES.items() if target == name}
        parser.add_argument(*sorted(flags), dest=name, default=argparse.SUPPRESS, metavar="VALUE")
    return parser


def parse_args(cli_args: list[str]) -> tuple[SimulationConfig, Path, int]:
    """Parse a command line into ``(config, out_dir, workers)``."""
    ns = vars(_build_parser().parse_args(cli_args))
    config_path = ns.pop("config")
    out_dir = Path(ns.pop("out"))
    workers = ns.pop("workers")
    if workers < 1:
        raise ConfigError("workers", f"must be >= 1, got {workers}")
    values = read_config_file(config_path) if config_path else {}
    for key, raw in ns.items():
        values[key] = _coerce(key, raw)
    return SimulationConfig(**values), out_dir, workers


def parse_config(cli_args: list[str]) -> SimulationConfig:
    """Build a validated :class:`SimulationConfig` from command-line arguments.

    Raises :class:`ConfigError` naming the key on a missing file, an
    unparsable value or a violated invariant.
    """
    return parse_args(cli_args)[0]


def radius_tag(r_coord: float | str) -> str:
    if isinstance(r_coord, str):
        return r_coord
    return f"r{r_coord / 1000:.2f}"


def _to_db(values: np.ndarray) -> np.ndarray:
    with np.errstate(divide="ignore"):
        return 10 * np.log10(values)


def write_cdf_csv(metric_name: str, r_coord: float | str, cdf: EmpiricalCdf, out_dir: str | os.PathLike) -> Path:
    """Write one CDF curve to ``{metric}_r{km:.2f}.csv``.

    Power metrics (signal, interference, sir) are stored linear in the CDF
    and written in dB relative to unit transmit power; other metrics are
    written as-is under a ``value`` header.
    """
    values = np.asarray(cdf.sorted_values, dtype=float)
    if values.size == 0:
        raise ValueError(f"empty CDF for {metric_name} at {r_coord}")
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    is_power = metric_name in POWER_METRICS
    column = _to_db(values) if is_power else values
    path = out_dir / f"{metric_name}_{radius_tag(r_coord)}.csv"
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["value_db" if is_power else "value", "cdf"])
        for v, p in zip(column, cdf.probabilities):
            writer.writerow([f"{v:.6f}", f"{p:.6f}"])
    return path


def write_results(result: SweepResult, out_dir: str | os.PathLike) -> list[Path]:
    """Write every CDF of a sweep plus ``summary.csv``."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = []
    rows = []
    for (metric, r_coord), cdf in result.per_point.items():
        paths.append(write_cdf_csv(metric, r_coord, cdf, out_dir))
        values = np.asarray(cdf.sorted_values)
        if metric in POWER_METRICS:
            values = _to_db(values)
        # inverted_cdf never interpolates, so -inf dB samples stay harmless
        p05, med, p95 = np.percentile(values, [5, 50, 95], method="inverted_cdf")
        km = r_coord if isinstance(r_coord, str) else f"{r_coord / 1000:.2f}"
        rows.append([metric, km, f"{med:.6f}", f"{p05:.6f}", f"{p95:.6f}"])
    summary = out_dir / "summary.csv"
    with open(summary, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["metric", "r_coord_km", "median_db", "p05_db", "p95_db"])
        writer.writerows(rows)
    paths.append(summary)
    return paths
