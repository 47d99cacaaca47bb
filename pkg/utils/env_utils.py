#!/usr/bin/env python3
"""
Environment utilities for flagk.

This module provides environment variable management:
- Loading variables from a .env file and the process environment
- Applying defaults and converting types
- Validating values before any computation starts
"""
import os
import sys

import pytz
from dotenv import load_dotenv

from utils import logging_utils
from utils.date_utils import set_timezone

# Known variables and their defaults (strings, converted in load_environment)
DEFAULTS = {
    'FLAGK_CACHE': '',
    'FLAGK_GROUP_CAP': '51840',
    'FLAGK_MAX_RANK': '8',
    'FLAGK_PATH_CAP_FACTOR': '10',
    'FLAGK_PROBE_RADIUS': '2',
    'FLAGK_RANDOM_PROBES': '8',
    'FLAGK_SEED': '20240607',
    'FLAGK_LOG_DIR': 'logs',
    'FLAGK_QUIET': 'false',
    'TIMEZONE': 'UTC',
}

INT_VARS = [
    'FLAGK_GROUP_CAP',
    'FLAGK_MAX_RANK',
    'FLAGK_PATH_CAP_FACTOR',
    'FLAGK_PROBE_RADIUS',
    'FLAGK_RANDOM_PROBES',
    'FLAGK_SEED',
]

# Storage for loaded environment variables
env_vars = {}


def load_environment():
    """Load environment variables from .env and the process environment.

    Returns:
        dict: The populated env_vars mapping
    """
    load_dotenv()

    for var, default in DEFAULTS.items():
        value = os.getenv(var, default)
        # Strip inline comments from environment variables
        if value and '#' in value:
            value = value.split('#')[0].strip()
        env_vars[var] = value.strip() if value else value

    validate_config()

    for var in INT_VARS:
        env_vars[var] = int(env_vars[var])
    env_vars['FLAGK_QUIET'] = env_vars['FLAGK_QUIET'].lower() in ('1', 'true', 'yes')

    set_timezone(env_vars['TIMEZONE'])
    logging_utils.configure(quiet=env_vars['FLAGK_QUIET'], log_dir=env_vars['FLAGK_LOG_DIR'])

    return env_vars


def validate_config():
    """Validate loaded values; exit with status 2 if any is unusable."""
    bad_vars = []
    for var in INT_VARS:
        try:
            if int(env_vars[var]) < 0:
                bad_vars.append(var)
        except (TypeError, ValueError):
            bad_vars.append(var)

    if env_vars['TIMEZONE'] not in pytz.all_timezones_set:
        bad_vars.append('TIMEZONE')

    if bad_vars:
        logging_utils.log_error('Config', f"Invalid values for environment variables: {', '.join(bad_vars)}")
        print("Please check your .env file against .env.example", file=sys.stderr)
        sys.exit(2)


def get_env(var_name, default=None):
    """Get an environment variable value.

    Args:
        var_name (str): Name of the environment variable
        default: Default value if not found

    Returns:
        The environment variable value or default
    """
    return env_vars.get(var_name, default)

# Environment variables will be loaded explicitly by the application
# Do not auto-load at import time to avoid circular dependencies
