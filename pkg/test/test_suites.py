#!/usr/bin/env python3
"""Tests for src.suites: every named suite run end to end, plus the
alpha-string rules on hand-checked strings."""
from fractions import Fraction

import pytest

from config import PROBE_RADIUS, RANDOM_PROBES
from src import lspath, pieri
from src.rootdata import build_root_system
from src.suites import SUITES, SuiteResult, check_alpha_string, run_suite, suite_weights
from src.weyl import generate_group


def _find_path(model, words, breaks):
    for path in model.generate_paths():
        if tuple(c.word for c in path.cosets) == words and path.breaks == tuple(Fraction(a) for a in breaks):
            return path
    raise AssertionError(f"no LS path {words} {breaks}")


def test_suite_registry():
    assert set(SUITES) == {'identities31', 'thm42', 'character', 'chevalley', 'paths', 'cohomology', 'g2golden'}


def test_suite_weights(g2):
    assert suite_weights(g2) == [(1, 0), (0, 1), (1, 1)]


def test_rank_three_uses_the_full_monomial_box():
    a3 = build_root_system('A', 3)
    probes = pieri.default_probes(a3.rank, PROBE_RADIUS, RANDOM_PROBES, 11)
    assert len(probes) == (2 * PROBE_RADIUS + 1) ** 3 + RANDOM_PROBES
    assert (PROBE_RADIUS, -PROBE_RADIUS, PROBE_RADIUS) in probes
    w0 = generate_group(a3).longest
    assert pieri.verify_operator_identity(a3, tuple(a3.rho), w0, probes).ok


def test_suite_result_collects_failures():
    result = SuiteResult('demo')
    result.check(True, 'fine')
    result.check(False, 'broken')
    assert result.checks == 2
    assert not result.ok
    assert result.failures == ['broken']
    assert 'FAILED (1 failures)' in result.summary()


def test_initial_direction_stays_when_h_returns_to_zero(b2):
    model = lspath.get_path_model(b2, (1, 1))
    path = _find_path(model, ((2, 1, 2), (1, 2), (2,)), (0, Fraction(1, 3), Fraction(1, 2), 1))
    assert model.e_op(1, path) is None
    assert not lspath.minimum_only_at_start(path, 1)
    string = model.alpha_string(1, path)
    assert len(string) == 2
    assert all(member.cosets[0] == path.cosets[0] for member in string)
    result = SuiteResult('string')
    check_alpha_string(result, model, path, 1)
    assert result.ok, result.failures


def test_initial_direction_moves_when_h_is_positive(b2):
    model = lspath.get_path_model(b2, (1, 0))
    group = model.group
    path = model.make_path((group.from_word((1,)),), (0, 1))
    assert lspath.minimum_only_at_start(path, 2)
    string = model.alpha_string(2, path)
    assert [tuple(c.word for c in p.cosets) for p in string] == [((1,),), ((2, 1), (1,)), ((2, 1),)]
    result = SuiteResult('string')
    check_alpha_string(result, model, path, 2)
    assert result.ok, result.failures


def test_final_direction_uses_the_zero_hecke_product(b2):
    # v(f pi, w) = v(pi, w) = s2 here, and s2 * s2 = s2
    model = lspath.get_path_model(b2, (1, 1))
    group = model.group
    path = _find_path(model, ((1, 2), (2,)), (0, Fraction(1, 2), 1))
    string = model.alpha_string(2, path)
    assert len(string) == 2
    w = group.from_word((2, 1, 2))
    s2 = group.from_word((2,))
    finals = [group.final_direction(p.cosets, w, model.J) for p in string]
    assert finals == [s2, s2]
    assert group.left_mult(2, s2) != finals[1]
    assert group.demazure_left_mult(2, finals[0]) == finals[1]


@pytest.mark.parametrize('name', sorted(SUITES))
def test_suite_passes(name):
    result = run_suite(name, seed=11)
    assert result.ok, result.failures[:5]
    assert result.checks > 0
