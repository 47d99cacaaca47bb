#!/usr/bin/env python3
"""
Shared pytest setup for flagk.

Puts the project root on sys.path, disables the error.log file and loads the
environment before any config-dependent module is imported.
"""
import os
import sys

# Add parent directory to path to import from main project
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

os.environ.setdefault('FLAGK_LOG_DIR', '')

# Ensure environment is loaded before importing config-dependent modules
from utils import env_utils
if not env_utils.env_vars:
    env_utils.load_environment()

import pytest
from hypothesis import settings

from src.rootdata import build_root_system
from src.weyl import generate_group

GOLDEN_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'golden')

settings.register_profile('flagk', derandomize=True, deadline=None, print_blob=True)
settings.load_profile('flagk')


@pytest.fixture(scope='session')
def a1():
    return build_root_system('A', 1)


@pytest.fixture(scope='session')
def a2():
    return build_root_system('A', 2)


@pytest.fixture(scope='session')
def b2():
    return build_root_system('B', 2)


@pytest.fixture(scope='session')
def g2():
    return build_root_system('G', 2)


@pytest.fixture(scope='session')
def g2_group(g2):
    return generate_group(g2)


@pytest.fixture(scope='session')
def golden_dir():
    return GOLDEN_DIR
