# SPDX-License-Identifier: Apache-2.0
import math

import numpy as np
import pytest

import mmwsim


def test_blockage_reference_distance():
    p_out, p_los, p_nlos = mmwsim.state_probabilities(200.0)
    assert p_out == pytest.approx(0.772362311616187, rel=1e-9)
    assert p_los == pytest.approx(0.0115623632874685, rel=1e-9)
    assert p_out + p_los + p_nlos == pytest.approx(1.0, abs=1e-15)


def test_gain_constants_and_throughput():
    assert mmwsim.max_aligned_gain_db(64, 16) == pytest.approx(30.1029995663981, rel=1e-12)
    assert mmwsim.max_aligned_gain_db(256, 64) == pytest.approx(42.1441993929574, rel=1e-12)
    assert mmwsim.throughput(250e6, 0, 15.0) == pytest.approx(1e9)


def test_matched_beam_gain():
    w_tx = mmwsim.steering_vector(64, 0.4, 0.1)
    w_rx = mmwsim.steering_vector(16, 1.3, -0.2)
    assert np.linalg.norm(w_tx) == pytest.approx(1.0, abs=1e-12)
    H = np.outer(w_rx, w_tx.conj())
    assert mmwsim.beamforming_gain(H, w_tx, w_rx.conj()) == pytest.approx(1.0, rel=1e-12)
    with pytest.raises(ValueError):
        mmwsim.beamforming_gain(H.T, w_tx, w_rx.conj())


def test_config_round_trip_and_errors():
    cfg = mmwsim.parse_config("num_operators = 3\npreset = case-ii\n")
    assert cfg.num_operators == 3
    assert mmwsim.parse_config(cfg.serialize()) == cfg
    with pytest.raises(ValueError):
        mmwsim.parse_config("p28 = 1.5\n")
    bad = mmwsim.Config()
    bad.bs_density = 0.0
    assert any("bs_density must be > 0" in e for e in bad.errors())


def test_iteration_and_campaign():
    cfg = mmwsim.Config()
    cfg.iterations = 10
    a = mmwsim.run_iteration(cfg, "hybrid", 3)
    assert a == mmwsim.run_iteration(cfg, "hybrid", 3)
    if a["bs"] is not None:
        assert a["rate"] == pytest.approx(a["bandwidth_hz"] / (1 + a["load"]) * math.log2(1 + a["sinr"]), rel=1e-12)

    rows = mmwsim.run_campaign(cfg, densities=[30.0, 60.0], regimes=["licensed", "pooled"], cases=["i"])
    assert len(rows) == 2 * 2 * 2
    assert {r["percentile"] for r in rows} == {"p5", "p50"}
    assert all(r["samples"] == 10 for r in rows)
    assert rows == mmwsim.run_campaign(cfg, densities=[30.0, 60.0], regimes=["licensed", "pooled"], cases=["i"], jobs=2)


def test_percentile():
    assert mmwsim.percentile([1.0, 2.0, 3.0, 4.0], 0.5) == 2.5
    with pytest.raises(ValueError):
        mmwsim.percentile([], 0.5)
