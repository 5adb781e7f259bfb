"""Constants for the moyal package."""

import os

VERSION = "0.1.0"
MANIFEST_SCHEMA_VERSION = 1

ENV_DEBUG = "DEBUG"
ENV_THREADS = "MOYAL_THREADS"

# Grids
DEFAULT_GRID_N = 128
DEFAULT_GRID_L = 10.0
MIN_GRID_N = 8
TENSOR_MAX_N = 64
TAIL_THRESHOLD = 1e-8
TAIL_BAND_FRACTION = 0.125
SAMPLE_CACHE_MAX = 64

# Derivatives and series
K_CAP = 40
N_CAP = 20
PHASE_ORDER_CAP = 8

# Quadrature tables
BUMP_RADIAL_NODES = 400
BUMP_ANGULAR_NODES = 256
GHAT_TABLE_NODES = 8001
DIRECT_REFINE = 2
SLICE_HALF_WIDTH = 40.0
SLICE_NODES = 16001
ALT_FORM_CHUNK = 512
SHIFT_DROP_RELATIVE = 1e-20
ZERO_THETA_TOLERANCE = 1e-10

# Divergence lab
MOMENT_HALF_WIDTH = 60.0
MOMENT_NODES = 4801

# Multiplier bounds
CONSTANT_RADIUS = 0.5
CERTIFICATE_S_MAX = 50.0
CERTIFICATE_ENVELOPE_NODES = 20001
CERTIFICATE_SLACK = 1e-9

# Witness functions
WITNESS_NODES = 10001
OMEGA_NODES = 2001
WITNESS_MIN_S_MAX = 50.0

# CLI exit codes
EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_INVARIANT = 3


def get_threads() -> int:
    value = os.environ.get(ENV_THREADS)
    if not value:
        return 1
    try:
        return max(1, int(value))
    except ValueError:
        return 1
