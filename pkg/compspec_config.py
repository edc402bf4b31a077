#!/usr/bin/env python3
"""
Toolkit Configuration
Default tolerances and caps, with the COMPSPEC_MAX_N environment override
"""

import logging
import os
from typing import Dict, Optional

from compspec_errors import ConfigError

logger = logging.getLogger(__name__)

__version__ = "1.0.0"

MAX_N_ENV = "COMPSPEC_MAX_N"

DEFAULT_CONFIG = {
    'cert_tol': 1e-12,           # Collatz-Wielandt bracket width for certificates
    'dedup_tol': 1e-9,           # two radii closer than this are one spectrum value
    'verify_eps': 1e-8,          # EiCP residual tolerance
    'max_n': 20,                 # hard cap for subset enumeration
    'soft_warn_n': 15,           # warn above this many vertices
    'iteration_factor': 100,     # power iteration cap = factor * n^2
    'gap_safety_factor': 10.0,   # distinct radii must be this many dedup_tol apart
    'radius_escalation': 100.0,  # tighten cert_tol once by this factor when ambiguous
    'census_max_n': 5,
}


def load_config(overrides: Optional[Dict] = None) -> Dict:
    """Defaults, then the environment cap, then explicit non-None overrides"""
    config = dict(DEFAULT_CONFIG)

    raw = os.environ.get(MAX_N_ENV)
    if raw is not None and raw.strip():
        try:
            max_n = int(raw)
        except ValueError:
            raise ConfigError(f"{MAX_N_ENV}={raw!r} is not an integer")
        if max_n < 1:
            raise ConfigError(f"{MAX_N_ENV}={max_n} must be positive")
        logger.debug(f"enumeration cap overridden by {MAX_N_ENV}: {max_n}")
        config['max_n'] = max_n

    for key, value in (overrides or {}).items():
        if value is None:
            continue
        if key not in DEFAULT_CONFIG:
            raise ConfigError(f"unknown configuration key {key!r}")
        config[key] = value

    for key in ('cert_tol', 'dedup_tol', 'verify_eps'):
        if not config[key] > 0:
            raise ConfigError(f"{key} must be positive, got {config[key]!r}")
    return config
