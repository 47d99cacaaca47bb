#!/usr/bin/env python3
"""Tests for src.lspath."""
from fractions import Fraction

import networkx as nx
import pydot
import pytest

from src.laurent import demazure_character
from src.lspath import (
    alpha_string, crystal_graph, e_op, f_op, generate_paths, get_path_model,
    initial_direction, path_character, path_from_json, path_to_json, straight_path, to_dot,
)
from src.rootdata import build_root_system, fundamental_weight, weyl_dimension
from utils.error_utils import PreconditionError, RootDataError

CASES = [('A', 2), ('B', 2), ('G', 2), ('C', 3)]


def test_root_operator_on_a_straight_line(a1):
    path = straight_path(a1, (2,))
    down = f_op(a1, 1, path)
    assert [c.word for c in down.cosets] == [(1,), ()]
    assert down.breaks == (0, Fraction(1, 2), 1)
    assert down.endpoint() == (0,)
    assert e_op(a1, 1, down) == path
    assert e_op(a1, 1, path) is None


def test_rank_one_paths(a1):
    paths = generate_paths(a1, (2,))
    assert len(paths) == 3
    assert sorted(p.endpoint() for p in paths) == [(-2,), (0,), (2,)]
    assert [len(alpha_string(a1, 1, paths[0]))] == [3]


@pytest.mark.parametrize('cartan_type,rank', CASES)
def test_path_count_is_dimension(cartan_type, rank):
    rs = build_root_system(cartan_type, rank)
    for lam in [fundamental_weight(rs, i) for i in range(1, rank + 1)] + [rs.rho]:
        assert len(generate_paths(rs, lam)) == weyl_dimension(rs, lam)


@pytest.mark.parametrize('cartan_type,rank', CASES[:3])
def test_path_character_is_demazure_character(cartan_type, rank):
    rs = build_root_system(cartan_type, rank)
    assert path_character(rs, rs.rho) == demazure_character(rs, rs.rho)


def test_root_operators_are_inverse(g2):
    for path in generate_paths(g2, (1, 0)):
        for j in (1, 2):
            down = f_op(g2, j, path)
            if down is not None:
                assert e_op(g2, j, down) == path
                assert down.endpoint() == tuple(a - b for a, b in zip(path.endpoint(), g2.simple_roots[j - 1]))


def test_paths_are_decreasing_chains(g2):
    model = get_path_model(g2, (1, 1))
    for path in model.generate_paths():
        assert path.breaks[0] == 0 and path.breaks[-1] == 1
        assert all(a < b for a, b in zip(path.breaks, path.breaks[1:]))
        for tau, sigma in zip(path.cosets, path.cosets[1:]):
            assert tau != sigma
            assert model.group.coset_bruhat_leq(sigma, tau, model.J)


def test_alpha_string_needs_a_top(a1):
    down = f_op(a1, 1, straight_path(a1, (2,)))
    with pytest.raises(PreconditionError):
        alpha_string(a1, 1, down)


def test_initial_direction(g2):
    path = straight_path(g2, (0, 1))
    assert initial_direction(path).length == 0


def test_shape_must_be_dominant(a2):
    with pytest.raises(RootDataError):
        generate_paths(a2, (-1, 0))


def test_crystal_graph(g2):
    graph = crystal_graph(g2, (0, 1))
    assert graph.number_of_nodes() == 14
    assert nx.is_weakly_connected(graph)
    assert {data['color'] for _, _, data in graph.edges(data=True)} == {1, 2}
    for source, target, data in graph.edges(data=True):
        assert f_op(g2, data['color'], source) == target
    dot = to_dot(graph)
    assert 'digraph' in dot.split('{')[0]
    parsed = nx.nx_pydot.from_pydot(pydot.graph_from_dot_data(dot)[0])
    assert parsed.number_of_nodes() == graph.number_of_nodes()
    assert parsed.number_of_edges() == graph.number_of_edges()


def test_path_json(g2):
    path = generate_paths(g2, (0, 1))[5]
    data = path_to_json(path)
    assert data['shape'] == [0, 1]
    assert path_from_json(g2, (0, 1), data) == path
