#!/usr/bin/env python3
"""
Lakshmibai-Seshadri paths of shape lambda and the root operators.

An LS path is stored as a strictly decreasing chain of cosets in W/W_lambda,
each given by its minimal representative, together with rational breakpoints
0 = a_0 < a_1 < ... < a_r = 1. On [a_(i-1), a_i] the path moves in direction
tau_i(lambda).

The root operators act on the piecewise-linear path itself. Every
breakpoint of the result is found exactly, so no floating point is involved.
"""
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from config import PATH_CAP_FACTOR
from src.laurent import LaurentPoly
from src.rootdata import (
    RootSystem, Weight, check_dominant_integral, normalize_weight, weight_to_json, weyl_dimension,
)
from src.weyl import WeylElt, format_word, generate_group
from utils.error_utils import ConsistencyError, PreconditionError
from utils.json_utils import fraction_to_str, str_to_fraction
from utils.logging_utils import log_info


@dataclass(frozen=True)
class LSPath:
    """An LS path of shape `shape`."""
    shape: Weight
    cosets: Tuple[WeylElt, ...]
    breaks: Tuple[Fraction, ...]
    directions: Tuple[Weight, ...] = field(compare=False, repr=False)

    @property
    def length(self):
        return len(self.cosets)

    def values(self) -> List[Weight]:
        """pi(a_0), ..., pi(a_r)."""
        point = tuple(Fraction(0) for _ in self.shape)
        out = [point]
        for k, direction in enumerate(self.directions):
            dt = self.breaks[k + 1] - self.breaks[k]
            point = tuple(p + dt * d for p, d in zip(point, direction))
            out.append(point)
        return out

    def endpoint(self) -> Weight:
        return normalize_weight(self.values()[-1])

    def segments(self):
        """[(direction, duration), ...]."""
        return [
            (direction, self.breaks[k + 1] - self.breaks[k])
            for k, direction in enumerate(self.directions)
        ]

    def describe(self) -> str:
        chain = ' > '.join(format_word(c.word) for c in self.cosets)
        breaks = ', '.join(fraction_to_str(a) for a in self.breaks)
        return f"({chain} ; {breaks})"


class PathProfile:
    """h(t) = <pi(t), alpha_j^vee>, sampled at every point where the root
    operators can change slope.

    Besides the breakpoints of pi, the sample includes every time at which h
    crosses one of its breakpoint values or the level m + 1. Between two
    consecutive samples the functions l and r below are linear.
    """

    def __init__(self, path: LSPath, j: int):
        self.j = j
        values = path.values()
        h = [v[j - 1] for v in values]
        self.m = min(h)
        levels = set(h) | {self.m + 1}

        self.points = [path.breaks[0]]
        self.values = [values[0]]
        self.h = [h[0]]
        for k, direction in enumerate(path.directions):
            t0, t1 = path.breaks[k], path.breaks[k + 1]
            h0, h1 = h[k], h[k + 1]
            if h0 != h1:
                lo, hi = min(h0, h1), max(h0, h1)
                crossings = sorted(
                    (t0 + (c - h0) / (h1 - h0) * (t1 - t0), c) for c in levels if lo < c < hi
                )
                for t, c in crossings:
                    self.points.append(t)
                    self.values.append(tuple(v + (t - t0) * d for v, d in zip(values[k], direction)))
                    self.h.append(c)
            self.points.append(t1)
            self.values.append(values[k + 1])
            self.h.append(h1)

    def l_values(self) -> List[Fraction]:
        """l(t) = min(1, min_{s >= t} h(s) - m) at each sample."""
        out = []
        running = None
        for value in reversed(self.h):
            running = value if running is None else min(running, value)
            out.append(min(Fraction(1), running - self.m))
        return out[::-1]

    def r_values(self) -> List[Fraction]:
        """r(t) = 1 - min(1, min_{s <= t} h(s) - m) at each sample."""
        out = []
        running = None
        for value in self.h:
            running = value if running is None else min(running, value)
            out.append(1 - min(Fraction(1), running - self.m))
        return out


class PathModel:
    """All LS paths of one shape, with their root operators."""

    def __init__(self, rs: RootSystem, lam: Weight):
        self.rs = rs
        self.shape = check_dominant_integral(rs, lam)
        self.group = generate_group(rs)
        self.J = self.group.stabilizer(self.shape)
        self.cosets = self.group.quotient(self.J)
        # direction sigma(lambda) -> minimal representative of sigma W_J
        self.coset_of_direction: Dict[Weight, WeylElt] = {}
        for sigma in self.cosets:
            self.coset_of_direction[self.group.act(sigma, self.shape)] = sigma
        self.dimension = weyl_dimension(rs, self.shape)
        self._paths: Optional[Tuple[LSPath, ...]] = None

    def make_path(self, cosets: Sequence[WeylElt], breaks: Sequence) -> LSPath:
        cosets = tuple(self.group.coset_min_rep(c, self.J) for c in cosets)
        breaks = tuple(Fraction(a) for a in breaks)
        directions = tuple(self.group.act(c, self.shape) for c in cosets)
        return LSPath(shape=self.shape, cosets=cosets, breaks=breaks, directions=directions)

    def straight_path(self) -> LSPath:
        return self.make_path((self.group.identity,), (0, 1))

    def _from_samples(self, points, values) -> LSPath:
        """Rebuild a path from its values at increasing times."""
        segments = []
        for k in range(len(points) - 1):
            dt = points[k + 1] - points[k]
            if dt == 0:
                continue
            direction = tuple((b - a) / dt for a, b in zip(values[k], values[k + 1]))
            if segments and segments[-1][0] == direction:
                segments[-1][1] += dt
            else:
                segments.append([direction, dt])

        cosets, breaks = [], [Fraction(0)]
        for direction, dt in segments:
            key = normalize_weight(direction)
            if key not in self.coset_of_direction:
                raise ConsistencyError(f"Root operator produced direction {key}, not in W.lambda")
            cosets.append(self.coset_of_direction[key])
            breaks.append(breaks[-1] + dt)
        if breaks[-1] != 1:
            raise ConsistencyError(f"Root operator produced a path ending at time {breaks[-1]}")
        return LSPath(
            shape=self.shape,
            cosets=tuple(cosets),
            breaks=tuple(breaks),
            directions=tuple(normalize_weight(d) for d, _ in segments),
        )

    def f_op(self, j: int, path: LSPath) -> Optional[LSPath]:
        """f_j(path), or None when h(1) - m < 1."""
        self.rs.check_index(j)
        profile = PathProfile(path, j)
        if profile.h[-1] - profile.m < 1:
            return None
        alpha = self.rs.simple_roots[j - 1]
        values = [
            tuple(v - l * a for v, a in zip(value, alpha))
            for value, l in zip(profile.values, profile.l_values())
        ]
        return self._from_samples(profile.points, values)

    def e_op(self, j: int, path: LSPath) -> Optional[LSPath]:
        """e_j(path), or None when m > -1."""
        self.rs.check_index(j)
        profile = PathProfile(path, j)
        if profile.m > -1:
            return None
        alpha = self.rs.simple_roots[j - 1]
        values = [
            tuple(v + r * a for v, a in zip(value, alpha))
            for value, r in zip(profile.values, profile.r_values())
        ]
        return self._from_samples(profile.points, values)

    def generate_paths(self) -> Tuple[LSPath, ...]:
        """Closure of the straight path under all f_j, in breadth-first order.

        Raises:
            ConsistencyError: If the search exceeds PATH_CAP_FACTOR * dim V_lambda
                expansions or the closure does not have dim V_lambda elements
        """
        if self._paths is not None:
            return self._paths
        cap = PATH_CAP_FACTOR * self.dimension
        start = self.straight_path()
        seen = {start}
        order = [start]
        queue = deque([start])
        expansions = 0
        while queue:
            path = queue.popleft()
            expansions += 1
            if expansions > cap:
                raise ConsistencyError(f"LS path search exceeded {cap} expansions")
            for j in range(1, self.rs.rank + 1):
                nxt = self.f_op(j, path)
                if nxt is not None and nxt not in seen:
                    seen.add(nxt)
                    order.append(nxt)
                    queue.append(nxt)
        if len(order) != self.dimension:
            raise ConsistencyError(
                f"Found {len(order)} LS paths of shape {self.shape}, expected dim V = {self.dimension}"
            )
        log_info('LSPath', f"{self.rs.name} shape {list(self.shape)}: {len(order)} paths")
        self._paths = tuple(order)
        return self._paths

    def alpha_string(self, j: int, path: LSPath) -> List[LSPath]:
        """[path, f_j path, ..., f_j^m path] for a path with e_j(path) = 0.

        Raises:
            PreconditionError: If e_j(path) is defined
        """
        if self.e_op(j, path) is not None:
            raise PreconditionError(f"e_{j} is defined on {path.describe()}; not the top of an alpha_{j}-string")
        string = [path]
        while True:
            nxt = self.f_op(j, string[-1])
            if nxt is None:
                return string
            string.append(nxt)

    def crystal_graph(self) -> nx.DiGraph:
        """Nodes are LS paths; an edge p -> f_j p carries color j."""
        graph = nx.DiGraph()
        paths = self.generate_paths()
        for index, path in enumerate(paths):
            graph.add_node(path, index=index, endpoint=path.endpoint(), label=path.describe())
        for path in paths:
            for j in range(1, self.rs.rank + 1):
                nxt = self.f_op(j, path)
                if nxt is not None:
                    graph.add_edge(path, nxt, color=j)
        return graph

    def path_from_json(self, data) -> LSPath:
        cosets = [self.group.from_word(word) for word in data['cosets']]
        breaks = [str_to_fraction(str(a)) for a in data['breaks']]
        return self.make_path(cosets, breaks)


@lru_cache(maxsize=None)
def get_path_model(rs: RootSystem, lam: Weight) -> PathModel:
    return PathModel(rs, tuple(lam))


def straight_path(rs: RootSystem, lam: Weight) -> LSPath:
    return get_path_model(rs, tuple(lam)).straight_path()


def f_op(rs: RootSystem, j: int, path: LSPath) -> Optional[LSPath]:
    return get_path_model(rs, path.shape).f_op(j, path)


def e_op(rs: RootSystem, j: int, path: LSPath) -> Optional[LSPath]:
    return get_path_model(rs, path.shape).e_op(j, path)


def generate_paths(rs: RootSystem, lam: Weight) -> Tuple[LSPath, ...]:
    return get_path_model(rs, tuple(lam)).generate_paths()


def path_character(rs: RootSystem, lam: Weight) -> LaurentPoly:
    """sum over LS paths of e^{pi(1)}."""
    return LaurentPoly((path.endpoint(), 1) for path in generate_paths(rs, lam))


def initial_direction(path: LSPath) -> WeylElt:
    """iota(pi), the first coset of the chain."""
    return path.cosets[0]


def minimum_only_at_start(path: LSPath, j: int) -> bool:
    """True if h(t) = <pi(t), alpha_j^vee> > 0 for every t > 0.

    h is linear between breakpoints and h(0) = 0, so positivity at the
    breakpoints after 0 suffices. Exactly these heads of alpha_j-strings
    have f_j moving the initial direction.
    """
    return all(value[j - 1] > 0 for value in path.values()[1:])


def alpha_string(rs: RootSystem, j: int, path: LSPath) -> List[LSPath]:
    return get_path_model(rs, path.shape).alpha_string(j, path)


def crystal_graph(rs: RootSystem, lam: Weight) -> nx.DiGraph:
    return get_path_model(rs, tuple(lam)).crystal_graph()


def to_dot(graph: nx.DiGraph, name: str = 'crystal') -> str:
    """Render a crystal graph in Graphviz DOT through networkx's pydot writer."""
    dot = nx.DiGraph(name=name)
    for _, data in sorted(graph.nodes(data=True), key=lambda item: item[1]['index']):
        endpoint = ','.join(fraction_to_str(a) for a in data['endpoint'])
        dot.add_node(f"n{data['index']}", label=f"{data['label']} ({endpoint})")
    for source, target, data in graph.edges(data=True):
        dot.add_edge(f"n{graph.nodes[source]['index']}", f"n{graph.nodes[target]['index']}", label=str(data['color']))
    return nx.nx_pydot.to_pydot(dot).to_string()


def path_to_json(path: LSPath):
    return {
        'shape': [int(a) for a in path.shape],
        'cosets': [list(c.word) for c in path.cosets],
        'breaks': [fraction_to_str(a) for a in path.breaks],
        'endpoint': weight_to_json(path.endpoint()),
    }


def path_from_json(rs: RootSystem, lam: Weight, data) -> LSPath:
    return get_path_model(rs, tuple(lam)).path_from_json(data)
