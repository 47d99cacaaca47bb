#!/usr/bin/env python3
"""
Configuration module for flagk.
Handles loading and validating environment variables.
"""
from utils import env_utils

# Load environment variables explicitly after imports are complete
if not env_utils.env_vars:
    env_utils.load_environment()

# Get all environment variables
env_vars = env_utils.env_vars

# Cache directory (FLAGK_CACHE overrides --cache-dir)
CACHE_DIR = env_utils.get_env('FLAGK_CACHE') or None

# Size caps
GROUP_CAP = env_utils.get_env('FLAGK_GROUP_CAP')
MAX_RANK = env_utils.get_env('FLAGK_MAX_RANK')
PATH_CAP_FACTOR = env_utils.get_env('FLAGK_PATH_CAP_FACTOR')

# Operator-identity probes
PROBE_RADIUS = env_utils.get_env('FLAGK_PROBE_RADIUS')
RANDOM_PROBES = env_utils.get_env('FLAGK_RANDOM_PROBES')

# Randomized checks
SEED = env_utils.get_env('FLAGK_SEED')

# Logging
LOG_DIR = env_utils.get_env('FLAGK_LOG_DIR')
QUIET = env_utils.get_env('FLAGK_QUIET')
TIMEZONE = env_utils.get_env('TIMEZONE')
