"""
Utilities package for flagk.

This package contains the cross-cutting helpers used by the mathematical modules:
- date_utils: Timezone-aware timestamps for log lines
- env_utils: Environment variable management
- error_utils: The FlagKError exception hierarchy
- file_utils: Cache paths and atomic writes
- json_utils: JSON I/O and exact rationals as strings
- logging_utils: Logging to stderr and error.log
"""

from utils.date_utils import format_datetime, get_now
from utils.env_utils import get_env, load_environment
from utils.error_utils import (
    ConsistencyError, FlagKError, GroupCapError, NoLiftError,
    NotReducedError, PreconditionError, RootDataError
)
from utils.file_utils import file_exists, get_cache_path, read_file, write_file
from utils.json_utils import canonical_dumps, read_json, write_json
from utils.logging_utils import log_error, log_info, log_progress, log_success, log_warning


def ensure_environment_loaded():
    """Ensure environment variables are loaded. Safe to call multiple times."""
    from utils import env_utils
    if not env_utils.env_vars:
        env_utils.load_environment()
