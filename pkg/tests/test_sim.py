import dataclasses

import numpy as np
import pytest

from conftest import mean_only
from uavsec.sim import SweepSpec, TraceRecord, handover_policy, run_scenario, run_sweep, summarize, with_strategy


def _record(x, r_sec):
    return TraceRecord(0, x, None, "primary", 0, 0, 0, 0, r_sec, 0, r_sec)


def test_handover_policy_examples():
    assert handover_policy({"BS1": 10.0, "BS2": 30.0}, "BS1", 0.0) == "BS2"
    assert handover_policy({"BS1": 20.0, "BS2": 20.0}, "BS1", 0.0) == "BS1"
    assert handover_policy({"BS1": 10.0, "BS2": 12.0}, "BS1", 5.0) == "BS1"
    assert handover_policy({"BS1": 10.0}, "BS1") == "BS1"
    assert handover_policy({"a": 1.0, "b": 5.0, "c": 9.0}, "a") == "c"


def test_zero_steps_gives_start_record(relay_cfg):
    cfg = dataclasses.replace(relay_cfg, mobility=dataclasses.replace(relay_cfg.mobility, n_steps=0))
    (rec,) = run_scenario(cfg)
    assert rec.step == 0 and rec.iot_x == 0.0 and rec.uav_x == 0.0


def test_direct_only_collapses_at_eavesdropper(handover_cfg):
    trace = run_scenario(mean_only(with_strategy(handover_cfg, "direct")))
    before = [r.r_sec for r in trace if r.iot_x <= 300]
    assert all(b <= a + 1e-9 for a, b in zip(before, before[1:]))
    assert before[0] > 50 and before[-1] < 1
    assert max(r.r_sec for r in trace if r.iot_x >= 300) < 1e-9
    assert all(r.uav_x is None and r.r_r_l == 0 for r in trace)


def test_relay_following_landmark(handover_cfg):
    trace = run_scenario(with_strategy(handover_cfg, "relay"))
    for r in trace:
        if r.r_sec < 50:
            assert abs(r.iot_x - 300) <= 50 + handover_cfg.mobility.dx
    assert all(r.r_sec > 50 for r in trace if r.iot_x >= 400)


def test_handover_switches_towards_secondary(handover_cfg):
    trace = run_scenario(mean_only(handover_cfg))
    serving = [r.serving_bs for r in trace]
    assert serving[0] == "primary" and serving[-1] == "secondary"
    first = serving.index("secondary")
    assert all(s == "secondary" for s in serving[first:])


def test_hysteresis_delays_handover(handover_cfg):
    cfg = mean_only(handover_cfg)
    greedy = [r.serving_bs for r in run_scenario(cfg)].index("secondary")
    sticky_cfg = dataclasses.replace(cfg, strategy=dataclasses.replace(cfg.strategy, hysteresis_margin_mbps=20.0))
    sticky = [r.serving_bs for r in run_scenario(sticky_cfg)].index("secondary")
    assert sticky > greedy


def test_relay_never_lowers_legitimate_rate(handover_cfg):
    cfg = mean_only(handover_cfg)
    direct = run_scenario(with_strategy(cfg, "direct"))
    relay = run_scenario(with_strategy(cfg, "relay"))
    assert all(r.r_l >= d.r_l for r, d in zip(relay, direct))


def test_traces_are_deterministic(relay_cfg):
    cfg = dataclasses.replace(relay_cfg, fading_g2g=dataclasses.replace(relay_cfg.fading_g2g, realizations=200))
    assert run_scenario(cfg) == run_scenario(cfg)


def test_monte_carlo_spread_reported(relay_cfg):
    mc = run_scenario(relay_cfg)
    mo = run_scenario(mean_only(relay_cfg))
    assert all(r.r_sec_std == 0 for r in mo)
    assert any(r.r_sec_std > 0 for r in mc)
    assert all(r.r_sec >= 0 for r in mc)


def test_clamp_after_average_is_lower_bound(relay_cfg):
    # max(E[l] - E[i], 0) <= E[max(l - i, 0)]
    cfg = dataclasses.replace(relay_cfg, fading_g2g=dataclasses.replace(relay_cfg.fading_g2g, realizations=300))
    per_real = run_scenario(cfg)
    after = run_scenario(dataclasses.replace(cfg, clamp_after_average=True))
    assert all(a.r_sec <= p.r_sec + 1e-9 for a, p in zip(after, per_real))


def test_half_duplex_flag_lowers_relay_curve(handover_cfg):
    cfg = mean_only(with_strategy(handover_cfg, "relay"))
    halved = run_scenario(with_strategy(cfg, "relay", relay_half_duplex_penalty=True))
    full = run_scenario(cfg)
    assert all(h.r_r_l == pytest.approx(f.r_r_l / 2) for h, f in zip(halved, full))


def test_sr_sweep_shapes(relay_cfg):
    sweeps = run_sweep(mean_only(relay_cfg), SweepSpec("speed_rate", (0.5, 0.75, 1.0, 2.0)))
    assert list(sweeps) == [0.5, 0.75, 1.0, 2.0]
    means = {sr: np.mean([r.r_sec for r in t]) for sr, t in sweeps.items()}
    assert max(means, key=means.get) == 1.0
    assert [r.uav_x for r in sweeps[2.0]][:3] == [0.0, 30.0, 60.0]


def test_sweep_shares_ground_fading(relay_cfg):
    cfg = dataclasses.replace(relay_cfg, fading_g2g=dataclasses.replace(relay_cfg.fading_g2g, realizations=50))
    sweeps = run_sweep(cfg, SweepSpec("speed_rate", (0.5, 2.0)))
    a, b = sweeps.values()
    assert [(r.r_t_l, r.r_t_i) for r in a] == [(r.r_t_l, r.r_t_i) for r in b]


def test_singleton_height_sweep_matches_single_run(relay_cfg):
    cfg = mean_only(relay_cfg)
    assert run_sweep(cfg, SweepSpec("uav_height", (20.0,)))[20.0] == run_scenario(cfg)


def test_height_sweep_changes_relay_rates(relay_cfg):
    sweeps = run_sweep(mean_only(relay_cfg), SweepSpec("height", (10.0, 20.0, 80.0)))
    assert sweeps[10.0][5].r_r_l > sweeps[80.0][5].r_r_l


def test_sweep_requires_relay(handover_cfg):
    with pytest.raises(ValueError, match="relay"):
        run_sweep(handover_cfg, SweepSpec("speed_rate", (1.0,)))


@pytest.mark.parametrize("values", [(), (1.0, 1.0), (2.0, 1.0), (0.0,), (-1.0, 1.0)])
def test_sweep_spec_invariants(values):
    with pytest.raises(ValueError):
        SweepSpec("speed_rate", values)


def test_sweep_spec_rejects_unknown_variable():
    with pytest.raises(ValueError):
        SweepSpec("bandwidth", (1.0,))


def test_summarize_examples():
    zeros = [_record(15.0 * k, 0.0) for k in range(5)]
    s = summarize(zeros, 50)
    assert s.fraction_above == 0 and s.min_mbps == 0
    flat = [_record(15.0 * k, 60.0) for k in range(5)]
    s = summarize(flat, 50)
    assert s.fraction_above == 1 and s.below_interval is None and s.mean_mbps == 60
    with pytest.raises(ValueError):
        summarize([], 50)


def test_summarize_interval_around_eavesdropper():
    rates = [80, 80, 40, 10, 0, 20, 45, 90, 30, 90]
    trace = [_record(100.0 * k, r) for k, r in enumerate(rates)]
    s = summarize(trace, 50, eavesdropper_x=400)
    assert s.below_interval == (200.0, 600.0)
    assert s.below_width == 400
    assert s.fraction_above == pytest.approx(0.4)


def test_records_satisfy_invariants(handover_cfg):
    ids = {bs.id for bs in handover_cfg.nodes.base_stations}
    for kind in ("direct", "handover", "relay"):
        for r in run_scenario(with_strategy(handover_cfg, kind)):
            assert r.r_sec >= 0 and r.serving_bs in ids
            assert np.isfinite([r.r_t_l, r.r_r_l, r.r_t_i, r.r_r_i, r.r_l, r.r_i, r.r_sec, r.r_sec_std]).all()
