#!/usr/bin/env python3
"""Tests for src.rootdata."""
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.rootdata import (
    build_root_system, cartan_matrix, check_dominant_integral, coroot_pairing,
    fundamental_weight, is_reduced_word, parse_cartan_type, reflect, weight_to_json, weyl_dimension,
)
from utils.error_utils import RootDataError


def test_cartan_matrices_follow_bourbaki():
    assert cartan_matrix('G', 2) == ((2, -3), (-1, 2))
    assert cartan_matrix('B', 2) == ((2, -1), (-2, 2))
    assert cartan_matrix('C', 2) == ((2, -2), (-1, 2))
    assert cartan_matrix('A', 3) == ((2, -1, 0), (-1, 2, -1), (0, -1, 2))


@pytest.mark.parametrize('cartan_type,rank,count', [
    ('A', 1, 1), ('A', 3, 6), ('B', 3, 9), ('C', 3, 9), ('D', 4, 12),
    ('E', 6, 36), ('E', 8, 120), ('F', 4, 24), ('G', 2, 6),
])
def test_positive_root_counts(cartan_type, rank, count):
    rs = build_root_system(cartan_type, rank)
    assert rs.num_positive_roots == count
    assert rs.rho == (1,) * rank


def test_g2_positive_roots(g2):
    assert g2.simple_roots == ((2, -1), (-3, 2))
    assert set(g2.positive_roots) == {(2, -1), (-3, 2), (-1, 1), (1, 0), (3, -1), (0, 1)}


@pytest.mark.parametrize('cartan_type,rank', [('D', 3), ('E', 5), ('G', 3), ('A', 0), ('X', 2), ('F', 2)])
def test_invalid_types_rejected(cartan_type, rank):
    with pytest.raises(RootDataError):
        build_root_system(cartan_type, rank)


def test_rank_cap():
    with pytest.raises(RootDataError):
        build_root_system('A', 9)
    assert build_root_system('A', 9, max_rank=10).num_positive_roots == 45


def test_lowercase_type_is_accepted():
    assert build_root_system('g', 2).name == 'G2'


def test_parse_cartan_type():
    assert parse_cartan_type('g2') == ('G', 2)
    assert parse_cartan_type('B', 3) == ('B', 3)
    for bad in [('A3', 4), ('Q2', None), ('A', None), ('A2x', None)]:
        with pytest.raises(RootDataError):
            parse_cartan_type(*bad)


def test_weyl_dimension(a1, a2, b2, g2):
    assert weyl_dimension(a1, (1,)) == 2
    assert weyl_dimension(a2, (1, 1)) == 8
    assert weyl_dimension(b2, (1, 0)) == 5
    assert weyl_dimension(b2, (0, 1)) == 4
    assert weyl_dimension(g2, (1, 0)) == 7
    assert weyl_dimension(g2, (0, 1)) == 14


def test_coroot_pairing_of_highest_root(g2):
    # omega_2 is the highest root of G2; its coroot is alpha_1^vee + 2 alpha_2^vee
    assert coroot_pairing(g2, g2.rho, (0, 1)) == 3
    assert coroot_pairing(g2, (1, 0), (0, 1)) == 1


def test_reflect_simple(g2):
    assert reflect(g2, 1, (1, 0)) == (-1, 1)
    assert reflect(g2, 2, (1, 0)) == (1, 0)


def test_is_reduced_word(a2, g2):
    assert is_reduced_word(a2, (1, 2, 1))
    assert not is_reduced_word(a2, (1, 1))
    assert is_reduced_word(g2, (1, 2, 1, 2, 1, 2))
    assert not is_reduced_word(g2, (1, 2, 1, 2, 1, 2, 1))


def test_check_dominant_integral(a2):
    assert check_dominant_integral(a2, (Fraction(2), 0)) == (2, 0)
    assert type(check_dominant_integral(a2, (Fraction(2), 0))[0]) is int
    for bad in [(1, -1), (Fraction(1, 2), 0), (1, 0, 0)]:
        with pytest.raises(RootDataError):
            check_dominant_integral(a2, bad)


def test_index_checks(a2):
    with pytest.raises(RootDataError):
        fundamental_weight(a2, 3)
    with pytest.raises(RootDataError):
        reflect(a2, 0, (1, 0))


@settings(max_examples=50, deadline=None)
@given(
    st.sampled_from([('A', 3), ('B', 3), ('C', 3), ('G', 2)]),
    st.lists(st.integers(-5, 5), min_size=3, max_size=3),
    st.integers(1, 3),
)
def test_reflection_is_an_involution(kind, coords, j):
    rs = build_root_system(*kind)
    lam = tuple(coords[:rs.rank])
    j = min(j, rs.rank)
    assert reflect(rs, j, reflect(rs, j, lam)) == lam
    assert coroot_pairing(rs, rs.simple_roots[j - 1], rs.simple_roots[j - 1]) == 2


def test_weight_to_json():
    assert weight_to_json((Fraction(2), -1)) == [2, -1]
    assert all(isinstance(a, int) for a in weight_to_json((Fraction(4, 2), 0)))
    with pytest.raises(RootDataError):
        weight_to_json((Fraction(1, 2), 0))
