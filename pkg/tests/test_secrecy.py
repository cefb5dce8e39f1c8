import dataclasses

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracle
from uavsec.channel import ChannelParams
from uavsec.config import table1_nodes
from uavsec.geom import Position3D
from uavsec.secrecy import LinkRateSet, link_rates, secrecy_rate, shannon_rate

P = ChannelParams()
NODES = table1_nodes()


def test_shannon_examples():
    assert shannon_rate(1e7, 0.0) == 0.0
    assert shannon_rate(1e7, 1.0) == 1e7
    # 1e7 * log2(1 + 1.975e6) via mpmath
    assert shannon_rate(1e7, 1.975e6) == pytest.approx(209134219.530922314, rel=1e-12)


def test_secrecy_examples():
    res = secrecy_rate(LinkRateSet(100.0, 80.0, 30.0, 50.0))
    assert (res.r_l, res.r_i, res.r_sec) == (100.0, 50.0, 50.0)
    assert secrecy_rate(LinkRateSet(7.0, 7.0, 7.0, 7.0)).r_sec == 0
    assert secrecy_rate(LinkRateSet(10.0, 0.0, 30.0, 0.0)).r_sec == 0


def test_colocated_eavesdropper_mirrors_ue():
    iot = Position3D(120, 0, 0)
    nodes = dataclasses.replace(NODES, eavesdropper=iot)
    g = np.array([0.3, 1.7, 2.2])
    rates = link_rates(nodes, iot, Position3D(120, 0, 20), P, (g, g), a2g_samples=(g, g))
    assert np.array_equal(rates.r_t_l, rates.r_t_i)
    assert np.array_equal(rates.r_r_l, rates.r_r_i)
    assert np.all(secrecy_rate(rates).r_sec == 0)


def test_relay_absent_zeroes_relay_rates():
    rates = link_rates(NODES, Position3D(45, 0, 0), None, P, (1.0, 1.0))
    assert rates.r_r_l == 0 and rates.r_r_i == 0
    assert rates.r_t_l > 0


def test_table1_step1_against_script_oracle():
    iot, uav = Position3D(15, 0, 0), Position3D(15, 0, 20)
    rates = link_rates(NODES, iot, uav, P, (1.0, 1.0))
    res = secrecy_rate(rates)
    expected = oracle.secrecy((0, 0, 50), 0.1, (15, 0, 20), 0.01, (15, 0, 0), (300, 0, 0))
    got = (rates.r_t_l, rates.r_r_l, rates.r_t_i, rates.r_r_i, res.r_l, res.r_i, res.r_sec)
    np.testing.assert_allclose(got, expected, rtol=1e-12)


def test_half_duplex_penalty_halves_relay_rates():
    iot, uav = Position3D(60, 0, 0), Position3D(60, 0, 20)
    full = link_rates(NODES, iot, uav, P, (1.0, 1.0))
    half = link_rates(NODES, iot, uav, P, (1.0, 1.0), half_duplex_penalty=True)
    assert half.r_r_l == pytest.approx(full.r_r_l / 2)
    assert half.r_r_i == pytest.approx(full.r_r_i / 2)
    assert half.r_t_l == full.r_t_l


rate = st.floats(0, 1e9)
rate_sets = st.builds(LinkRateSet, rate, rate, rate, rate)


@given(rate_sets)
def test_clamp_bounds(rates):
    res = secrecy_rate(rates)
    assert 0 <= res.r_sec <= res.r_l


@given(rate_sets, st.floats(0, 1e8), st.sampled_from(["r_t_l", "r_r_l", "r_t_i", "r_r_i"]))
def test_monotonicity(rates, bump, name):
    before = secrecy_rate(rates).r_sec
    bumped = LinkRateSet(**{**rates.__dict__, name: getattr(rates, name) + bump})
    after = secrecy_rate(bumped).r_sec
    if name.endswith("_l"):
        assert after >= before
    else:
        assert after <= before


@given(st.lists(st.floats(0, 1e6), min_size=4, max_size=4), st.floats(0.01, 100))
def test_bandwidth_scale_equivariance(snrs, k):
    b = 1e7
    base = LinkRateSet(*(shannon_rate(b, s) for s in snrs))
    scaled = LinkRateSet(*(shannon_rate(k * b, s) for s in snrs))
    assert secrecy_rate(scaled).r_sec == pytest.approx(k * secrecy_rate(base).r_sec, rel=1e-9, abs=1e-6)


@given(st.floats(0, 1e6), st.floats(1e-3, 1e3))
def test_shannon_increasing(s, ds):
    assert shannon_rate(1e7, s + ds) > shannon_rate(1e7, s)
