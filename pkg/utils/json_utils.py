#!/usr/bin/env python3
"""
JSON utilities for flagk.

This module provides JSON operations:
- Canonical serialization (sorted keys, compact) for hashing
- Reading JSON files with UTF-8 encoding
- Writing JSON files atomically with consistent formatting
- Exact rationals as "p/q" strings
"""
import json
from fractions import Fraction

from utils.file_utils import file_exists, write_file
from utils.logging_utils import log_error


def fraction_to_str(value):
    """Render a rational as 'p/q', or 'p' when the denominator is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def str_to_fraction(text):
    """Parse the output of fraction_to_str (also accepts plain integers)."""
    return Fraction(text)


def canonical_dumps(data):
    """Serialize data deterministically; used for content hashes."""
    return json.dumps(data, sort_keys=True, separators=(',', ':'), ensure_ascii=True)


def dumps(data, indent=2):
    """Serialize data for output files and stdout."""
    return json.dumps(data, ensure_ascii=False, indent=indent)


def read_json(file_path: str) -> dict:
    """Read and parse JSON file with UTF-8 encoding.

    Args:
        file_path (str): Path to the JSON file to read

    Returns:
        dict: Parsed JSON data

    Raises:
        FileNotFoundError: If the file doesn't exist
        json.JSONDecodeError: If the file contains invalid JSON
    """
    try:
        if not file_exists(file_path):
            raise FileNotFoundError(f"JSON file not found: {file_path}")

        with open(file_path, 'r', encoding='utf-8') as f:
            return json.load(f)

    except FileNotFoundError as e:
        log_error('JsonUtils', f"File not found: {e}")
        raise
    except json.JSONDecodeError as e:
        log_error('JsonUtils', f"Invalid JSON in file {file_path}: {e}")
        raise


def write_json(file_path: str, data, indent: int = 2) -> bool:
    """Write data to a JSON file atomically.

    Args:
        file_path (str): Path to save the JSON file
        data: Data to write as JSON
        indent (int): Number of spaces for indentation (default: 2)

    Returns:
        bool: True if successful, False otherwise
    """
    ok = write_file(file_path, dumps(data, indent=indent) + "\n")
    if not ok:
        log_error('JsonUtils', f"Error writing JSON file {file_path}")
    return ok
