#!/usr/bin/env python3
"""
Golden-file tests.

Each file in test/golden holds an expansion (as written by
`flagk expand --format json`) and its per-path table. Regenerate with
scripts/golden_generator.py.
"""
import glob
import io
import json
import os

import pytest

from src.cli import run
from src.pieri import Expansion, expand, path_table
from src.rootdata import build_root_system
from utils.json_utils import canonical_dumps, read_json

GOLDEN_FILES = sorted(glob.glob(os.path.join(os.path.dirname(os.path.abspath(__file__)), 'golden', '*.json')))


def _case(data):
    expansion = data['expansion']
    rs = build_root_system(expansion['type'], expansion['rank'])
    return rs, tuple(expansion['lambda']), tuple(expansion['word'])


def test_golden_files_exist():
    assert GOLDEN_FILES


@pytest.mark.parametrize('path', GOLDEN_FILES, ids=os.path.basename)
def test_golden_expansion(path):
    data = read_json(path)
    rs, lam, word = _case(data)
    computed = expand(rs, lam, word)
    assert computed == Expansion.from_json(data['expansion'])
    assert computed.to_json() == data['expansion']


@pytest.mark.parametrize('path', GOLDEN_FILES, ids=os.path.basename)
def test_golden_table(path):
    data = read_json(path)
    rs, lam, word = _case(data)
    rows = sorted(canonical_dumps(row.to_json()) for row in path_table(rs, lam, word))
    assert rows == sorted(canonical_dumps(row) for row in data['table'])


@pytest.mark.parametrize('path', GOLDEN_FILES, ids=os.path.basename)
def test_golden_through_cli(path):
    data = read_json(path)
    expansion = data['expansion']
    out = io.StringIO()
    status = run([
        'expand', '--type', expansion['type'], '--rank', str(expansion['rank']),
        '--lambda', ','.join(str(a) for a in expansion['lambda']),
        '--word', ','.join(str(i) for i in expansion['word']),
        '--format', 'json', '--table',
    ], out=out)
    assert status == 0
    printed = json.loads(out.getvalue())
    assert {k: v for k, v in printed.items() if k != 'table'} == expansion
    assert sorted(canonical_dumps(row) for row in printed['table']) == sorted(
        canonical_dumps(row) for row in data['table']
    )
