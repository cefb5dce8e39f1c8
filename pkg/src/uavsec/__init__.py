"""Secrecy-rate simulation for a mobile ground IoT device, a UAV relay and a ground eavesdropper."""
from .channel import (
    ChannelDomainError,
    ChannelParams,
    LinkGain,
    db_to_linear_gain,
    fspl_db,
    g2g_gain,
    los_probability,
    mean_pathloss_a2g_db,
    snr,
)
from .config import ConfigError, ScenarioConfig, Strategy, dump_config, load_config, loads_config
from .fading import FadingMode, RngStream, sample_exponential_power, sample_nakagami_power
from .geom import BaseStation, GeometryError, NodeSet, Position3D, distance3, elevation_angle_deg, horizontal_distance
from .mobility import MobilityParams, iot_position, uav_position
from .secrecy import LinkRateSet, SecrecyResult, link_rates, secrecy_rate, shannon_rate
from .sim import SweepSpec, TraceRecord, TraceSummary, handover_policy, run_scenario, run_sweep, summarize
from .traceio import read_trace_csv, write_trace_csv

__version__ = "0.1.0"
