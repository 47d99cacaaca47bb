#!/usr/bin/env python3
"""
Date and time utilities for flagk.

Only log timestamps need wall-clock time; everything else in the package
is exact arithmetic. The timezone is set once by env_utils.
"""
from datetime import datetime

import pytz

DATETIME_FORMAT = '%Y-%m-%d %H:%M:%S'
DATETIME_TZ_FORMAT = '%Y-%m-%d %H:%M:%S %Z'

# Set by env_utils during initialization
TIMEZONE = pytz.UTC


def set_timezone(timezone_str):
    """Set the global timezone object.

    Args:
        timezone_str (str): IANA timezone name, e.g. 'Europe/Berlin'

    Raises:
        pytz.UnknownTimeZoneError: If the name is not a known timezone
    """
    global TIMEZONE
    TIMEZONE = pytz.timezone(timezone_str)


def get_now():
    """Get current datetime in the configured timezone."""
    return datetime.now(TIMEZONE)


def format_datetime(dt=None, include_timezone=True):
    """Format a datetime for log lines.

    Args:
        dt (datetime, optional): Datetime to format. If None, uses current time.
        include_timezone (bool): Whether to append the timezone abbreviation.

    Returns:
        str: Formatted datetime string
    """
    if dt is None:
        dt = get_now()
    elif dt.tzinfo is None:
        dt = TIMEZONE.localize(dt)

    if include_timezone:
        return dt.strftime(DATETIME_TZ_FORMAT)
    return dt.strftime(DATETIME_FORMAT)
