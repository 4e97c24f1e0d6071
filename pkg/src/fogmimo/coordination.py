"""Per-EPU views: coordinated APs, in-region UTs and pilot assignment.

UTs inside an EPU's coordination region get mutually orthogonal pilots
(numbered in UT-index order); every other UT gets a uniformly random pilot
from the same pool, so the pilot length equals the in-region UT count.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import geometry
from .geometry import NetworkLayout

BASELINE = "baseline"


@dataclass(frozen=True)
class EpuView:
    epu_index: int
    coordinated_aps: np.ndarray
    in_region_uts: np.ndarray
    served_uts: np.ndarray
    tau_p: int
    pilot_of: np.ndarray  # pilot per UT of the whole layout; -1 when tau_p == 0

    @property
    def degenerate(self) -> bool:
        return self.tau_p == 0

    @cached_property
    def in_region_mask(self) -> np.ndarray:
        mask = np.zeros(len(self.pilot_of), dtype=bool)
        mask[self.in_region_uts] = True
        return mask

    @cached_property
    def evaluated_uts(self) -> np.ndarray:
        """Served UTs that also lie in the coordination region."""
        return self.served_uts[self.in_region_mask[self.served_uts]]

    def check_in_region(self, k: int):
        if not self.in_region_mask[k]:
            raise ValueError(f"UT {k} is outside the coordination region of EPU {self.epu_index}")


def build_epu_view(
    epu_index: int,
    r_coord: float | str,
    layout: NetworkLayout,
    rng: np.random.Generator,
) -> EpuView:
    """Assemble one EPU's view for a radius, or for ``BASELINE`` (service hexagon).

    An empty region gives a degenerate view with ``tau_p == 0``.
    """
    served = geometry.served_uts(epu_index, layout)
    if r_coord == BASELINE:
        aps = geometry.service_hexagon_aps(epu_index, layout)
        region = served
    else:
        aps = geometry.coordination_set(epu_index, r_coord, layout)
        region = geometry.in_region_uts(epu_index, r_coord, layout)

    tau_p = len(region)
    pilots = np.full(layout.n_uts, -1, dtype=np.int64)
    if tau_p:
        outside = np.ones(layout.n_uts, dtype=bool)
        outside[region] = False
        pilots[outside] = rng.integers(0, tau_p, size=int(outside.sum()))
        pilots[region] = np.arange(tau_p)
    return EpuView(epu_index, aps, region, served, tau_p, pilots)


def pilot_collision_set(view: EpuView, k: int) -> np.ndarray:
    """Out-of-region UTs that reuse the pilot of in-region UT ``k``."""
    view.check_in_region(k)
    return np.flatnonzero((view.pilot_of == view.pilot_of[k]) & ~view.in_region_mask)
