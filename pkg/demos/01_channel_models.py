"""
Channel models at a glance
==========================

How the air-to-ground and ground-to-ground links behave for the reference
radio settings: LoS probability against elevation angle, the mean A2G
pathloss seen from a 20 m UAV, and the rates the two link types deliver.
"""
import numpy as np

from uavsec import ChannelParams, Position3D, los_probability, mean_pathloss_a2g_db
from uavsec.channel import fspl_db
from uavsec.config import table1_nodes
from uavsec.secrecy import link_rates

params = ChannelParams()
print(f"carrier {params.carrier_frequency_hz / 1e9:g} GHz, C={params.los_c}, B={params.los_b}, "
      f"eta_LoS={params.eta_los_db} dB, eta_NLoS={params.eta_nlos_db} dB")

# LoS probability climbs from ~2% at grazing angles to ~1 overhead
print("\nelevation  P(LoS)")
for theta in (0, 10, 20, 30, 45, 60, 90):
    print(f"{theta:8d}  {los_probability(theta, params):.4f}")

# Mean pathloss from a UAV at 20 m: FSPL plus an excess loss that moves from
# eta_LoS towards eta_NLoS as the ground receiver slides away
uav = Position3D(0, 0, 20)
print("\nground range  FSPL[dB]  mean PL[dB]  excess[dB]")
for r in (0, 15, 50, 100, 200, 400):
    rx = Position3D(r, 0, 0)
    d = np.hypot(r, 20)
    pl = mean_pathloss_a2g_db(uav, rx, params)
    print(f"{r:11d}  {fspl_db(params.carrier_frequency_hz, d):8.2f}  {pl:11.2f}  {pl - fspl_db(params.carrier_frequency_hz, d):10.2f}")

# Direct (0.1 W, d^-4) vs relay (0.01 W, mean A2G pathloss) rates to a device
# at distance x from the primary base station with the UAV overhead
nodes = table1_nodes()
print("\n   x[m]  BS->UE[Mbps]  UAV->UE[Mbps]")
for x in (0, 60, 150, 300, 600, 1200):
    rates = link_rates(nodes, Position3D(x, 0, 0), Position3D(x, 0, 20), params, (1.0, 1.0))
    print(f"{x:7d}  {rates.r_t_l / 1e6:12.2f}  {rates.r_r_l / 1e6:13.2f}")
