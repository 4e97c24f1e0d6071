"""Wrap-around hexagonal EPU lattice with Poisson-scattered APs and UTs."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .config_io import SimulationConfig


@dataclass(frozen=True)
class NetworkLayout:
    """Positions (meters) of EPUs, APs and UTs on a ``width x height`` torus."""

    width: float
    height: float
    epu_centers: np.ndarray
    ap_positions: np.ndarray
    ut_positions: np.ndarray

    @property
    def n_aps(self) -> int:
        return len(self.ap_positions)

    @property
    def n_uts(self) -> int:
        return len(self.ut_positions)

    @property
    def n_epus(self) -> int:
        return len(self.epu_centers)

    # Cached pairwise tables; the layout itself is never mutated.
    @cached_property
    def epu_ap_distance(self) -> np.ndarray:
        return distance_matrix(self.epu_centers, self.ap_positions, self.width, self.height)

    @cached_property
    def epu_ut_distance(self) -> np.ndarray:
        return distance_matrix(self.epu_centers, self.ut_positions, self.width, self.height)

    @cached_property
    def ap_ut_distance(self) -> np.ndarray:
        return distance_matrix(self.ap_positions, self.ut_positions, self.width, self.height)

    @cached_property
    def ap_serving_epu(self) -> np.ndarray:
        return np.argmin(self.epu_ap_distance, axis=0)

    @cached_property
    def ut_serving_epu(self) -> np.ndarray:
        return np.argmin(self.epu_ut_distance, axis=0)


def lattice_centers(nx: int, ny: int, d_epu: float) -> np.ndarray:
    """Triangular lattice of ``nx * ny`` points; odd rows shifted by half a spacing."""
    width = nx * d_epu
    row_pitch = math.sqrt(3) / 2 * d_epu
    j, i = np.divmod(np.arange(nx * ny), nx)
    x = np.mod(i * d_epu + (j % 2) * d_epu / 2, width)
    y = j * row_pitch
    return np.column_stack([x, y]).astype(float)


def _uniform_points(rng: np.random.Generator, density_km2: float, width: float, height: float) -> np.ndarray:
    n = rng.poisson(density_km2 * width * height / 1e6)
    return rng.uniform((0.0, 0.0), (width, height), size=(n, 2))


def build_layout(config: SimulationConfig, rng: np.random.Generator) -> NetworkLayout:
    """Lay out EPUs on the lattice and drop APs then UTs as homogeneous PPPs."""
    width, height = config.width, config.height
    centers = lattice_centers(config.window_nx, config.window_ny, config.d_epu)
    aps = _uniform_points(rng, config.rho_a, width, height)
    uts = _uniform_points(rng, config.rho_u, width, height)
    return NetworkLayout(width, height, centers, aps, uts)


def distance_matrix(a: np.ndarray, b: np.ndarray, width: float, height: float) -> np.ndarray:
    """Toroidal distances between every row of ``a`` and every row of ``b``."""
    a = np.asarray(a, dtype=float).reshape(-1, 2)
    b = np.asarray(b, dtype=float).reshape(-1, 2)
    dx = np.abs(a[:, None, 0] - b[None, :, 0])
    dy = np.abs(a[:, None, 1] - b[None, :, 1])
    dx = np.minimum(dx, width - dx)
    dy = np.minimum(dy, height - dy)
    return np.hypot(dx, dy)


def toroidal_distance(p, q, layout: NetworkLayout) -> float:
    return float(distance_matrix(p, q, layout.width, layout.height)[0, 0])


def serving_epu(ut_index: int, layout: NetworkLayout) -> int:
    """Nearest EPU center to a UT; ties go to the lowest EPU index."""
    return int(layout.ut_serving_epu[ut_index])


def nearest_epu(points, layout: NetworkLayout) -> np.ndarray:
    d = distance_matrix(layout.epu_centers, points, layout.width, layout.height)
    return np.argmin(d, axis=0)


def coordination_set(epu_index: int, r_coord: float, layout: NetworkLayout) -> np.ndarray:
    """Sorted indices of the APs within ``r_coord`` of the EPU center."""
    return np.flatnonzero(layout.epu_ap_distance[epu_index] <= r_coord)


def in_region_uts(epu_index: int, r_coord: float, layout: NetworkLayout) -> np.ndarray:
    return np.flatnonzero(layout.epu_ut_distance[epu_index] <= r_coord)


def service_hexagon_aps(epu_index: int, layout: NetworkLayout) -> np.ndarray:
    return np.flatnonzero(layout.ap_serving_epu == epu_index)


def served_uts(epu_index: int, layout: NetworkLayout) -> np.ndarray:
    return np.flatnonzero(layout.ut_serving_epu == epu_index)
