"""
config.py
---------
Central configuration file for the busy-period maximum queue toolkit.

Purpose:
- Load environment variables from .env file
- Provide defaults for the CLI (tolerance, expansion order, Monte Carlo sizes)
- Keep the numeric modules free of configuration: only the CLI reads these
"""

import os

# Load environment variables from .env file
from dotenv import load_dotenv

# Load all variables from the .env file into the system environment
load_dotenv()


class Config:
    """
    The Config class defines the defaults the CLI falls back to.

    Attributes:
        DEBUG: Write truncation diagnostics to LOG_DIR/debug.log
        DEFAULT_TOL: Relative truncation tolerance for Lambert sums
        DEFAULT_ORDER: Truncation order of asymptotic expansions
        DEFAULT_SAMPLES: Monte Carlo busy periods per run
        DEFAULT_SEED: Monte Carlo seed
        STEP_CAP: Maximum events per simulated busy period
        SIM_PARTITIONS: Independent random streams per simulation
        SIM_WORKERS: Threads used to run the streams
        NEAR_ONE_U: Warn when 1 - lambda falls below this
        LOG_DIR: Directory for audit.log and error.log
    """

    # Enable/Disable debug mode (convert to boolean)
    DEBUG = os.getenv('DEBUG', 'False').lower() in ('true', '1', 't')

    # Numerics
    DEFAULT_TOL = float(os.getenv('BUSYMAX_TOL', '1e-12'))
    DEFAULT_ORDER = int(os.getenv('BUSYMAX_ORDER', '4'))

    # Monte Carlo
    DEFAULT_SAMPLES = int(os.getenv('BUSYMAX_SAMPLES', '100000'))
    DEFAULT_SEED = int(os.getenv('BUSYMAX_SEED', '0'))
    STEP_CAP = int(float(os.getenv('BUSYMAX_STEP_CAP', '1e8')))
    SIM_PARTITIONS = int(os.getenv('BUSYMAX_SIM_PARTITIONS', '8'))
    SIM_WORKERS = int(os.getenv('BUSYMAX_SIM_WORKERS', '4'))

    # Heavy-traffic warning threshold
    NEAR_ONE_U = float(os.getenv('BUSYMAX_NEAR_ONE_U', '1e-6'))

    # Audit logging
    LOG_DIR = os.getenv('LOG_DIR', 'logs')
