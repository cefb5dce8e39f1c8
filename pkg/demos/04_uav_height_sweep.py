"""
Choosing the relay altitude
===========================

A following relay (SR = 1) at different altitudes. Flying higher lengthens
the link to the device and raises the LoS probability towards the
eavesdropper, which widens the stretch of road where secrecy drops below
50 Mbps.
"""
import dataclasses

import numpy as np

from uavsec import load_config, run_sweep, summarize
from uavsec.fading import MEAN
from uavsec.sim import SweepSpec

cfg = dataclasses.replace(load_config("table1_relay"), fading_g2g=MEAN)
heights = (10.0, 20.0, 40.0, 80.0, 160.0)
sweeps = run_sweep(cfg, SweepSpec("uav_height", heights))

print("height[m]  mean[Mbps]  min[Mbps]  below-50 width[m]")
for h, trace in sweeps.items():
    s = summarize(trace, 50.0, cfg.nodes.eavesdropper.x)
    print(f"{h:9g}  {s.mean_mbps:10.2f}  {s.min_mbps:9.2f}  {s.below_width:17g}")

best = max(sweeps, key=lambda h: np.mean([r.r_sec for r in sweeps[h]]))
print(f"\nbest trajectory-mean secrecy at {best:g} m")
