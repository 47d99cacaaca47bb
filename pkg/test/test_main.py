#!/usr/bin/env python3
"""
Tests for the flagk command line.

Commands are driven through src.cli.run with an in-memory stdout, so the
exit status and the printed output can be checked together.
"""
import io
import json

import pytest

from src.cli import JobSpec, build_parser, run


def invoke(*argv):
    out = io.StringIO()
    status = run(list(argv), out=out)
    return status, out.getvalue()


def test_roots_json():
    status, output = invoke('roots', '--type', 'G2', '--format', 'json', '--quiet')
    assert status == 0
    data = json.loads(output)
    assert data['cartan_matrix'] == [[2, -3], [-1, 2]]
    assert data['rho'] == [1, 1]
    assert len(data['positive_roots']) == 6


def test_roots_text_with_separate_rank():
    status, output = invoke('roots', '--type', 'B', '--rank', '2')
    assert status == 0
    assert output.startswith('Root system B2')


def test_weyl_element():
    status, output = invoke('weyl', '--type', 'A2', '--word', '1,2,1,2', '--format', 'json')
    assert status == 0
    data = json.loads(output)
    assert data['order'] == 6
    assert data['element']['length'] == 2


def test_paths_and_dot():
    status, output = invoke('paths', '--type', 'G2', '--lambda', '0,1', '--format', 'json')
    assert status == 0
    assert json.loads(output)['count'] == 14
    status, output = invoke('paths', '--type', 'G2', '--lambda', '0,1', '--dot')
    assert status == 0
    assert 'digraph' in output.split('{')[0]
    assert 'n13' in output


def test_character():
    status, output = invoke('character', '--type', 'A1', '--lambda', '2', '--format', 'json')
    assert status == 0
    data = json.loads(output)
    assert data['dimension'] == 3
    assert data['character'] == [
        {'weight': [2], 'coeff': '1'},
        {'weight': [0], 'coeff': '1'},
        {'weight': [-2], 'coeff': '1'},
    ]


def test_json_weights_are_integers():
    status, output = invoke('character', '--type', 'B2', '--lambda', '1,1', '--format', 'json')
    assert status == 0
    for term in json.loads(output)['character']:
        assert all(isinstance(c, int) for c in term['weight'])
    status, output = invoke('roots', '--type', 'G2', '--format', 'json')
    data = json.loads(output)
    assert all(isinstance(c, int) for root in data['positive_roots'] for c in root)
    status, output = invoke('paths', '--type', 'G2', '--lambda', '0,1', '--format', 'json')
    assert all(isinstance(c, int) for path in json.loads(output)['paths'] for c in path['endpoint'])


def test_expand_g2():
    status, output = invoke(
        'expand', '--type', 'G2', '--lambda', '0,1', '--word', '1,2,1,2', '--format', 'json', '--table',
    )
    assert status == 0
    data = json.loads(output)
    assert data['paths'] == 13
    assert {tuple(c['v_word']): c['mult'] for c in data['coeffs']} == {
        (1, 2, 1, 2): 1, (1, 2, 1): 1, (2, 1, 2): 3, (2, 1): 3, (1, 2): 2, (2,): 2, (1,): 1,
    }
    assert len(data['table']) == 13


def test_expand_accepts_formatted_word():
    status, output = invoke('expand', '--type', 'A2', '--lambda', '1,0', '--word', 's1s2')
    assert status == 0
    assert '[O_X_s2]' in output


@pytest.mark.parametrize('argv', [
    ('roots', '--type', 'G5'),
    ('roots', '--type', 'Q2'),
    ('character', '--type', 'A2', '--lambda', '1,-1'),
    ('character', '--type', 'A2', '--lambda', 'a,b'),
    ('character', '--type', 'A2', '--lambda', '1,0,0'),
    ('expand', '--type', 'A2', '--lambda', '1,0', '--word', '1,1'),
    ('weyl', '--type', 'A2', '--word', '1,3'),
])
def test_invalid_input_exits_with_two(argv):
    status, output = invoke(*argv)
    assert status == 2
    assert output == ''


def test_missing_required_argument():
    with pytest.raises(SystemExit) as excinfo:
        build_parser().parse_args(['roots'])
    assert excinfo.value.code == 2


def test_verify_g2golden():
    status, output = invoke('verify', '--suite', 'g2golden')
    assert status == 0
    assert 'passed' in output


def test_cache_returns_identical_output(tmp_path):
    argv = ('expand', '--type', 'G2', '--lambda', '0,1', '--word', '1,2,1,2', '--cache-dir', str(tmp_path))
    first = invoke(*argv)
    assert len(list(tmp_path.glob('*.json'))) == 1
    second = invoke(*argv)
    assert first == second
    entry = json.loads(next(tmp_path.glob('*.json')).read_text(encoding='utf-8'))
    assert entry['output'] == first[1]
    assert entry['spec']['command'] == 'expand'


def test_cache_key_ignores_cache_dir():
    a = JobSpec(command='roots', cartan_type='G', rank=2, cache_dir='/tmp/a')
    b = JobSpec(command='roots', cartan_type='G', rank=2, cache_dir='/tmp/b')
    c = JobSpec(command='roots', cartan_type='G', rank=2, format='json')
    assert a.cache_key() == b.cache_key()
    assert a.cache_key() != c.cache_key()
