from pathlib import Path

import numpy as np
import pytest

from fogmimo import SimulationConfig
from fogmimo.geometry import NetworkLayout, lattice_centers

DATA = Path(__file__).parent / "data"


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def defaults():
    return SimulationConfig()


def make_layout(aps, uts, nx=6, ny=6, d_epu=1000.0):
    """Hand-built layout on the default lattice."""
    width = nx * d_epu
    height = ny * np.sqrt(3) / 2 * d_epu
    return NetworkLayout(
        width,
        height,
        lattice_centers(nx, ny, d_epu),
        np.asarray(aps, dtype=float).reshape(-1, 2),
        np.asarray(uts, dtype=float).reshape(-1, 2),
    )


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if rep.when != "call":
                continue
            props = dict(rep.user_properties)
            if "criterion" in props:
                lines.append((props["criterion"], outcome.upper()[:4], props.get("detail", "")))
    if lines:
        terminalreporter.section("acceptance criteria")
        for crit, status, detail in sorted(lines):
            terminalreporter.write_line(f"[{status}] criterion {crit}: {detail}")
