# SPDX-License-Identifier: Apache-2.0
"""Python bindings of the mmwsim multi-operator mmWave spectrum access simulator."""

from ._core import (
    Config,
    ConfigError,
    ValidationError,
    beamforming_gain,
    load_config,
    max_aligned_gain_db,
    parse_config,
    percentile,
    run_campaign,
    run_iteration,
    state_probabilities,
    steering_vector,
    throughput,
)

__all__ = [
    "Config",
    "ConfigError",
    "ValidationError",
    "beamforming_gain",
    "load_config",
    "max_aligned_gain_db",
    "parse_config",
    "percentile",
    "run_campaign",
    "run_iteration",
    "state_probabilities",
    "steering_vector",
    "throughput",
]
