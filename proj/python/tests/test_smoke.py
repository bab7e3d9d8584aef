import numpy as np
import pytest

import hydrocouple as hc


def test_run_case_shapes():
    r = hc.run_case(1, "hcm", scale=0.25, end_time=0.2)
    assert r["steps"] > 0
    assert r["probe_ids"] == ["P1", "P2", "P3", "P4", "P5", "P6"]
    assert r["probes"].shape == (len(r["times"]), 6, 4)
    assert r["times"][0] == 0.0
    assert r["times"][-1] == pytest.approx(0.2)


def test_reservoir_probe_starts_at_reservoir_level():
    r = hc.run_case(1, "fbm", scale=0.25, end_time=0.0)
    assert r["probes"][0, 0, 1] == pytest.approx(0.504, abs=1e-15)


def test_closed_run_conserves_volume():
    sim = hc.Simulation(3, "hcm", scale=0.25)
    v0 = sim.total_volume()
    sim.advance_to(0.5)
    assert sim.time == 0.5
    assert sim.total_volume() > v0  # inflow hydrograph at the upstream end
    assert np.all(sim.floodplain_depths() == 0.0)
    assert np.all(sim.channel_areas() > 0.0)


def test_config_text_round_trip():
    text = hc.case_config_text(2, "full2d", 0.25)
    assert "mode = full2d" in text
    r = hc.run_config_text(text.replace("end_time = 10", "end_time = 0.1"))
    assert r["times"][-1] == pytest.approx(0.1)


def test_bad_config_raises():
    with pytest.raises(ValueError, match="unknown key"):
        hc.run_config_text("[run]\nmode = hcm\nend_time = 1\nspeed = 2\n")


def test_stoker():
    s = hc.Stoker(1.0, 0.5)
    assert 0.5 < s.h_star < 1.0
    assert s.depth(100.0, 1.0, 0.0) == 0.5
    assert s.mean_depth(-1.0, 1.0, 0.1, 0.0) == pytest.approx(0.75, abs=0.05)
