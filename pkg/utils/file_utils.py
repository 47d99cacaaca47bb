#!/usr/bin/env python3
"""
File utilities for flagk.

This module provides file-related utilities:
- Cache path generation
- Atomic writes (write-then-rename)
- File reads
"""
import os
import tempfile


def get_cache_path(cache_dir, key, extension='.json'):
    """Get the path of a cache entry.

    Args:
        cache_dir (str): Cache directory
        key (str): Content hash of the job
        extension (str): File extension

    Returns:
        str: Full path to the cache file
    """
    return os.path.join(cache_dir, f"{key}{extension}")


def file_exists(file_path):
    """Check if a file exists.

    Args:
        file_path (str): Path to the file

    Returns:
        bool: True if the file exists, False otherwise
    """
    return os.path.exists(file_path) and os.path.isfile(file_path)


def read_file(file_path, encoding='utf-8'):
    """Read the contents of a file.

    Args:
        file_path (str): Path to the file
        encoding (str): File encoding

    Returns:
        str: File contents

    Raises:
        FileNotFoundError: If the file does not exist
    """
    if not file_exists(file_path):
        raise FileNotFoundError(f"File not found: {file_path}")

    with open(file_path, 'r', encoding=encoding) as f:
        return f.read()


def write_file(file_path, content, encoding='utf-8'):
    """Write content to a file atomically.

    The content goes to a temporary file in the same directory which is then
    renamed over the target, so readers never see a partial file.

    Args:
        file_path (str): Path to the file
        content (str): Content to write
        encoding (str): File encoding

    Returns:
        bool: True if successful, False otherwise
    """
    directory = os.path.dirname(file_path) or '.'
    try:
        os.makedirs(directory, exist_ok=True)
        fd, tmp_path = tempfile.mkstemp(dir=directory, prefix='.tmp-', suffix=os.path.basename(file_path))
        try:
            with os.fdopen(fd, 'w', encoding=encoding) as f:
                f.write(content)
            os.replace(tmp_path, file_path)
        except BaseException:
            if os.path.exists(tmp_path):
                os.remove(tmp_path)
            raise
        return True
    except OSError:
        return False
