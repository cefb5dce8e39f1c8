"""
Leading, following and lagging relays
=====================================

The UAV x-position is ``speed_rate`` times the device's, so SR = 1 hovers
overhead, SR = 2 races ahead and SR < 1 falls behind. Only the primary base
station serves. The same fading draws are reused for every speed rate.
"""
import numpy as np

from uavsec import load_config, run_sweep
from uavsec.sim import SweepSpec

cfg = load_config("table1_relay")
sweeps = run_sweep(cfg, SweepSpec("speed_rate", (0.5, 0.75, 1.0, 2.0)))

print("   x[m]" + "".join(f"   SR={sr:<4g}" for sr in sweeps))
for rows in zip(*sweeps.values()):
    if rows[0].iot_x % 75 == 0:
        print(f"{rows[0].iot_x:7.0f}" + "".join(f"{r.r_sec:10.1f}" for r in rows))

x = np.array([r.iot_x for r in sweeps[1.0]])
print("\nSR     mean   mean x<300   mean x>400  [Mbps]")
for sr, trace in sweeps.items():
    r = np.array([rec.r_sec for rec in trace])
    print(f"{sr:<4g} {r.mean():7.2f} {r[x < 300].mean():12.2f} {r[x > 400].mean():12.3f}")
