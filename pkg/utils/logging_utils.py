#!/usr/bin/env python3
"""
Logging utilities for flagk.

This module provides logging functionality:
- Error logging with consistent formatting and an error.log file
- Info, success and warning lines
- Progress lines for multi-step verification suites

Every line goes to stderr so that command output on stdout stays
machine-readable.
"""
import os
import sys
import traceback

from utils.date_utils import format_datetime

# Toggled by env_utils.load_environment and by the --quiet flag
QUIET = False
LOG_DIR = 'logs'


def configure(quiet=None, log_dir=None):
    """Adjust verbosity and the error-log directory.

    Args:
        quiet (bool, optional): Suppress INFO and SUCCESS lines when True
        log_dir (str, optional): Directory for error.log; '' disables the file
    """
    global QUIET, LOG_DIR
    if quiet is not None:
        QUIET = quiet
    if log_dir is not None:
        LOG_DIR = log_dir


def _emit(level, module_name, message):
    timestamp = format_datetime()
    formatted_message = f"[{level}] {timestamp} - {module_name}: {message}"
    print(formatted_message, file=sys.stderr, flush=True)
    return formatted_message


def log_error(module_name, error_message, exception=None):
    """Log an error with consistent formatting.

    Args:
        module_name (str): Name of the component where the error occurred
        error_message (str): Human-readable error message
        exception (Exception, optional): Exception object if available
    """
    formatted_message = _emit('ERROR', module_name, error_message)

    if exception:
        print(f"Exception details: {str(exception)}", file=sys.stderr, flush=True)

    if not LOG_DIR:
        return

    try:
        os.makedirs(LOG_DIR, exist_ok=True)
        with open(os.path.join(LOG_DIR, 'error.log'), 'a', encoding='utf-8') as log_file:
            log_file.write(f"{formatted_message}\n")
            if exception:
                log_file.write(f"Exception details: {str(exception)}\n")
                log_file.write("Traceback:\n")
                traceback_text = ''.join(traceback.format_exception(type(exception), exception, exception.__traceback__))
                log_file.write(f"{traceback_text}\n")
            log_file.write("---\n")
    except OSError:
        # error.log is best-effort
        pass


def log_info(module_name, message):
    """Log an informational message.

    Args:
        module_name (str): Name of the component logging the message
        message (str): The informational message
    """
    if not QUIET:
        _emit('INFO', module_name, message)


def log_success(module_name, message):
    """Log a success message.

    Args:
        module_name (str): Name of the component logging the message
        message (str): The success message
    """
    if not QUIET:
        _emit('SUCCESS', module_name, message)


def log_warning(module_name, message):
    """Log a warning message.

    Args:
        module_name (str): Name of the component logging the message
        message (str): The warning message
    """
    _emit('WARNING', module_name, message)


def log_progress(step_number, total_steps, step_name, message=""):
    """Log a suite step with progress formatting.

    Args:
        step_number (int): Current step number (1-based)
        total_steps (int): Total number of steps
        step_name (str): Name of the step
        message (str, optional): Additional message for the step
    """
    if QUIET:
        return
    if message:
        _emit('INFO', 'Verify', f"Step {step_number}/{total_steps}: {step_name} - {message}")
    else:
        _emit('INFO', 'Verify', f"Step {step_number}/{total_steps}: {step_name}...")
