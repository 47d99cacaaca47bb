#!/usr/bin/env python3
"""
Tests for configuration loading and the shared utilities.

Covers env_utils defaults and validation, the config module, JSON helpers,
atomic file writes and the quiet switch of logging_utils.
"""
from fractions import Fraction

import pytest

import config
from utils import env_utils, logging_utils
from utils.error_utils import ConsistencyError, FlagKError, GroupCapError, RootDataError
from utils.file_utils import file_exists, get_cache_path, read_file, write_file
from utils.json_utils import canonical_dumps, fraction_to_str, read_json, str_to_fraction, write_json


def test_defaults_are_converted():
    assert isinstance(config.GROUP_CAP, int)
    assert isinstance(config.SEED, int)
    assert isinstance(config.QUIET, bool)
    assert env_utils.get_env('FLAGK_MAX_RANK') == config.MAX_RANK
    assert env_utils.get_env('NOT_A_FLAGK_VARIABLE', 'fallback') == 'fallback'


def test_invalid_values_exit_with_two(monkeypatch):
    monkeypatch.setitem(env_utils.env_vars, 'FLAGK_SEED', 'not-a-number')
    with pytest.raises(SystemExit) as excinfo:
        env_utils.validate_config()
    assert excinfo.value.code == 2


def test_invalid_timezone_exits(monkeypatch):
    monkeypatch.setitem(env_utils.env_vars, 'TIMEZONE', 'Mars/Olympus_Mons')
    with pytest.raises(SystemExit):
        env_utils.validate_config()


def test_error_hierarchy():
    assert issubclass(RootDataError, ValueError)
    assert issubclass(RootDataError, FlagKError)
    assert issubclass(ConsistencyError, RuntimeError)
    assert not issubclass(ConsistencyError, ValueError)
    assert '12' in str(GroupCapError(12))


def test_fractions_as_strings():
    assert fraction_to_str(Fraction(3, 6)) == '1/2'
    assert fraction_to_str(4) == '4'
    assert fraction_to_str(Fraction(-8, 4)) == '-2'
    assert str_to_fraction('-3/4') == Fraction(-3, 4)


def test_canonical_dumps_is_order_independent():
    assert canonical_dumps({'b': 1, 'a': [1, 2]}) == canonical_dumps({'a': [1, 2], 'b': 1})
    assert canonical_dumps({'a': 1}) == '{"a":1}'


def test_atomic_write_and_json(tmp_path):
    path = get_cache_path(str(tmp_path / 'cache'), 'abc')
    assert path.endswith('abc.json')
    assert write_json(path, {'output': 'x\n'})
    assert read_json(path) == {'output': 'x\n'}
    assert [p.name for p in (tmp_path / 'cache').iterdir()] == ['abc.json']

    text_path = str(tmp_path / 'note.txt')
    assert write_file(text_path, 'hello')
    assert file_exists(text_path)
    assert read_file(text_path) == 'hello'
    with pytest.raises(FileNotFoundError):
        read_file(str(tmp_path / 'missing.txt'))


def test_quiet_suppresses_info(capsys, monkeypatch):
    monkeypatch.setattr(logging_utils, 'QUIET', True)
    logging_utils.log_info('Test', 'hidden')
    logging_utils.log_warning('Test', 'shown')
    captured = capsys.readouterr()
    assert 'hidden' not in captured.err
    assert '[WARNING]' in captured.err
    assert captured.out == ''


def test_log_lines_go_to_stderr(capsys, monkeypatch):
    monkeypatch.setattr(logging_utils, 'QUIET', False)
    monkeypatch.setattr(logging_utils, 'LOG_DIR', '')
    logging_utils.log_info('Test', 'visible')
    logging_utils.log_progress(1, 2, 'Step', 'half')
    captured = capsys.readouterr()
    assert '[INFO]' in captured.err and 'Test: visible' in captured.err
    assert 'Step 1/2: Step - half' in captured.err
    assert captured.out == ''
