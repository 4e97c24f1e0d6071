import math

import numpy as np
import pytest

from fogmimo import SimulationConfig
from fogmimo.channel import ChannelRealization, realize_channel, sample_fading
from fogmimo.coordination import EpuView, build_epu_view
from fogmimo.geometry import build_layout
from fogmimo.metrics import (
    evaluate_view,
    interference_power,
    signal_power,
    sir_db,
    spectral_efficiency,
)


def hand_view(aps, region, n_uts, pilots=None, tau_p=None):
    region = np.asarray(region)
    pilot_of = np.asarray(pilots) if pilots is not None else np.zeros(n_uts, dtype=int)
    return EpuView(0, np.asarray(aps, dtype=int), region, region, len(region) if tau_p is None else tau_p, pilot_of)


def test_signal_single_ap_hardened():
    chan = ChannelRealization(beta=np.array([[0.01]]), n_r=4)
    view = hand_view([0], [0], 1)
    assert signal_power(view, chan, 0) == pytest.approx(0.04)


def test_signal_empty_coordination():
    chan = ChannelRealization(beta=np.array([[0.01]]), n_r=4)
    assert signal_power(hand_view([], [0], 1), chan, 0) == 0.0


def test_signal_outside_region_rejected():
    chan = ChannelRealization(beta=np.ones((1, 2)))
    with pytest.raises(ValueError):
        signal_power(hand_view([0], [0], 2), chan, 1)


def test_exact_signal_mean_matches_hardened():
    rng = np.random.default_rng(0)
    beta = np.array([[0.01]])
    view = hand_view([0], [0], 1)
    draws = [
        signal_power(view, ChannelRealization(beta, sample_fading(1, 4, 1, rng), n_r=4), 0, "exact")
        for _ in range(10_000)
    ]
    # ||h||^2 beta has mean 0.04, std 0.02; 3 sigma of the mean is 0.0006 (1.5 %)
    assert np.mean(draws) == pytest.approx(0.04, abs=3 * 0.02 / math.sqrt(len(draws)))


def test_interference_two_aps_one_interferer():
    beta = np.array([[0.5, 0.001], [0.2, 0.001]])
    chan = ChannelRealization(beta=beta)
    view = hand_view([0, 1], [0], 2, pilots=[0, 0])
    assert interference_power(view, chan, 0, "all_out_of_region") == pytest.approx(0.002)
    assert interference_power(view, chan, 0, "pilot_collision_only") == pytest.approx(0.002)


def test_no_interferers():
    chan = ChannelRealization(beta=np.full((2, 2), 0.3))
    view = hand_view([0, 1], [0, 1], 2, pilots=[0, 1])
    for mode in ("all_out_of_region", "pilot_collision_only"):
        assert interference_power(view, chan, 0, mode) == 0.0


def test_collision_only_is_subset():
    cfg = SimulationConfig()
    layout = build_layout(cfg, np.random.default_rng(1))
    chan = realize_channel(layout, cfg, np.random.default_rng(2))
    rng = np.random.default_rng(3)
    for epu in range(0, 36, 5):
        view = build_epu_view(epu, 500.0, layout, rng)
        for k in view.in_region_uts:
            assert interference_power(view, chan, k, "pilot_collision_only") <= interference_power(
                view, chan, k, "all_out_of_region"
            )


@pytest.mark.parametrize(
    "S, I, expected",
    [(1.0, 1.0, 0.0), (1.0, 0.0, 60.0), (0.04, 0.002, 10 * math.log10(20)), (1e9, 1.0, 60.0)],
)
def test_sir_db(S, I, expected):
    assert sir_db(S, I, 60.0) == pytest.approx(expected, abs=1e-9)
    assert sir_db(0.04, 0.002, 60.0) == pytest.approx(13.0103, abs=1e-4)


def test_sir_db_degenerate():
    with pytest.raises(ValueError):
        sir_db(0.0, 0.0, 60.0)


@pytest.mark.parametrize(
    "sir, tau_p, tau_c, expected",
    [(0.0, 100, 200, 0.5), (10.0, 200, 200, 0.0), (10.0, 250, 200, 0.0), (10 * math.log10(20), 10, 200, 0.95 * math.log2(21))],
)
def test_spectral_efficiency(sir, tau_p, tau_c, expected):
    assert spectral_efficiency(sir, tau_p, tau_c) == pytest.approx(expected, abs=1e-12)
    assert spectral_efficiency(10 * math.log10(20), 10, 200) == pytest.approx(4.172, abs=1e-3)


@pytest.mark.parametrize("fading_mode", ["hardened", "exact"])
@pytest.mark.parametrize("interference_mode", ["all_out_of_region", "pilot_collision_only"])
def test_vectorised_matches_scalar(fading_mode, interference_mode):
    cfg = SimulationConfig(n_r=2, fading_mode=fading_mode, interference_mode=interference_mode)
    layout = build_layout(cfg, np.random.default_rng(4))
    chan = realize_channel(layout, cfg, np.random.default_rng(5), np.random.default_rng(6))
    rng = np.random.default_rng(7)
    n = 0
    for epu in range(layout.n_epus):
        view = build_epu_view(epu, 600.0, layout, rng)
        records = evaluate_view(
            view, chan, 600.0, fading_mode=fading_mode, interference_mode=interference_mode,
            max_sir_db=cfg.max_sir_db, tau_c=cfg.tau_c,
        )
        assert [r.ut_index for r in records] == list(view.evaluated_uts)
        for rec in records:
            S = signal_power(view, chan, rec.ut_index, fading_mode)
            I = interference_power(view, chan, rec.ut_index, interference_mode)
            assert rec.signal == pytest.approx(S, rel=1e-12)
            assert rec.interference == pytest.approx(I, rel=1e-12, abs=1e-300)
            assert rec.sir_db == pytest.approx(sir_db(S, I, cfg.max_sir_db), abs=1e-9)
            assert rec.overhead == max(0, cfg.tau_c - view.tau_p) / cfg.tau_c
            assert rec.se == pytest.approx(spectral_efficiency(rec.sir_db, view.tau_p, cfg.tau_c), rel=1e-12)
            n += 1
    assert n > 100


def test_sir_scale_invariance():
    cfg = SimulationConfig()
    layout = build_layout(cfg, np.random.default_rng(8))
    chan = realize_channel(layout, cfg, np.random.default_rng(9))
    scaled = ChannelRealization(beta=chan.beta * 8.0, n_r=chan.n_r)
    kwargs = dict(fading_mode="hardened", interference_mode="all_out_of_region", max_sir_db=60.0, tau_c=200)
    for epu in range(layout.n_epus):
        view = build_epu_view(epu, 700.0, layout, np.random.default_rng(epu))
        a = evaluate_view(view, chan, 700.0, **kwargs)
        b = evaluate_view(view, scaled, 700.0, **kwargs)
        # power-of-two scaling is exact in floating point
        assert [r.sir_db for r in a] == [r.sir_db for r in b]


def test_signal_monotone_in_radius():
    cfg = SimulationConfig()
    radii = [300.0, 500.0, 700.0, 1000.0]
    for seed in range(5):
        layout = build_layout(cfg, np.random.default_rng(seed))
        chan = realize_channel(layout, cfg, np.random.default_rng(seed + 100))
        rng = np.random.default_rng(0)
        for epu in range(layout.n_epus):
            prev = {}
            for r in radii:
                view = build_epu_view(epu, r, layout, rng)
                for k in view.in_region_uts:
                    s = signal_power(view, chan, k)
                    assert s >= prev.get(k, 0.0)
                    prev[k] = s
