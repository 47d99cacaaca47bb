#!/usr/bin/env python3
"""
Weyl groups, Bruhat order and parabolic cosets.

This module provides:
- WeylElt, keyed canonically by the images of the fundamental weights
- WeylGroup: generation by breadth-first search, products, inverses, action
- Bruhat order on W and on W/W_J
- Minimal/maximal coset representatives
- Maximal lifts of coset chains below a fixed element
- The Bruhat graph as a networkx DiGraph
"""
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

import networkx as nx

from config import GROUP_CAP
from src.rootdata import (
    RootSystem, Weight, apply_word, is_reduced_word, reflect, reflect_root,
)
from utils.error_utils import (
    ConsistencyError, GroupCapError, NoLiftError, NotReducedError,
)
from utils.logging_utils import log_info

DEFAULT_GROUP_CAP = 51840


@dataclass(frozen=True, eq=False)
class WeylElt:
    """An element of W.

    key is the tuple (w(omega_1), ..., w(omega_n)); two elements are equal iff
    their keys are. word is a reduced word in 1-based simple indices.
    """
    key: Tuple[Weight, ...]
    word: Tuple[int, ...] = field(compare=False)
    _hash: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, '_hash', hash(self.key))

    @property
    def length(self):
        return len(self.word)

    def __eq__(self, other):
        return isinstance(other, WeylElt) and self.key == other.key

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        # Deterministic display order, unrelated to Bruhat order
        return (self.length, self.word) < (other.length, other.word)

    def __repr__(self):
        return f"WeylElt({format_word(self.word)})"


def format_word(word: Sequence[int]) -> str:
    """'s1s2s1' for (1, 2, 1) and 'e' for the identity."""
    if not word:
        return 'e'
    return ''.join(f"s{i}" for i in word)


def parse_word(text: str) -> Tuple[int, ...]:
    """Inverse of format_word; also accepts '1,2,1' and '121' (ranks below 10)."""
    text = (text or '').strip().lower().replace(' ', '')
    if text in ('', 'e', 'id'):
        return ()
    if 's' in text:
        parts = [p for p in text.split('s') if p]
        return tuple(int(p) for p in parts)
    if ',' in text:
        return tuple(int(p) for p in text.split(',') if p)
    return tuple(int(c) for c in text)


class WeylGroup:
    """The finite Weyl group of a root system, fully enumerated."""

    def __init__(self, rs: RootSystem, cap: int = DEFAULT_GROUP_CAP):
        self.rs = rs
        self.cap = cap
        self.rank = rs.rank
        self.identity = WeylElt(
            key=tuple(tuple(1 if k == j else 0 for k in range(rs.rank)) for j in range(rs.rank)),
            word=(),
        )
        self.elements: Dict[Tuple[Weight, ...], WeylElt] = {}
        self._generate()
        self._sorted = sorted(self.elements.values())
        self.longest = self._sorted[-1]
        self._inverse: Dict[WeylElt, WeylElt] = {}
        self._bruhat: Dict[Tuple[WeylElt, WeylElt], bool] = {}
        self._subgroups: Dict[FrozenSet[int], Tuple[WeylElt, ...]] = {}
        log_info('WeylGroup', f"{rs.name}: |W| = {len(self.elements)}, l(w0) = {self.longest.length}")

    def _generate(self):
        """Breadth-first search on right multiplication w -> w s_i."""
        self.elements[self.identity.key] = self.identity
        queue = deque([self.identity])
        while queue:
            w = queue.popleft()
            for i in range(1, self.rank + 1):
                key = self._right_key(w, i)
                if key in self.elements:
                    continue
                if len(self.elements) >= self.cap:
                    raise GroupCapError(self.cap)
                # BFS depth equals length, so w.word + (i,) is reduced
                elt = WeylElt(key=key, word=w.word + (i,))
                self.elements[key] = elt
                queue.append(elt)

    def _right_key(self, w: WeylElt, i: int):
        # (w s_i)(omega_j) = w(omega_j) - delta_ij w(alpha_i)
        w_alpha = self.act(w, self.rs.simple_roots[i - 1])
        return tuple(
            tuple(a - b for a, b in zip(image, w_alpha)) if j == i - 1 else image
            for j, image in enumerate(w.key)
        )

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self._sorted)

    def __contains__(self, w):
        return isinstance(w, WeylElt) and w.key in self.elements

    def lookup(self, key) -> WeylElt:
        try:
            return self.elements[tuple(key)]
        except KeyError:
            raise ConsistencyError(f"No element of W({self.rs.name}) has key {key}") from None

    # Action and products

    def act(self, w: WeylElt, lam: Weight) -> Weight:
        """w(lam) = sum_k lam_k w(omega_k)."""
        out = [0] * self.rank
        for coeff, image in zip(lam, w.key):
            if coeff == 0:
                continue
            for j, x in enumerate(image):
                out[j] += coeff * x
        return tuple(out)

    def from_word(self, word: Iterable[int]) -> WeylElt:
        """The product s_{i1} ... s_{ip}; the word need not be reduced."""
        word = tuple(word)
        for i in word:
            self.rs.check_index(i)
        images = tuple(apply_word(self.rs, word, omega) for omega in self.identity.key)
        return self.lookup(images)

    def from_reduced_word(self, word: Iterable[int]) -> WeylElt:
        """Like from_word but rejects non-reduced input.

        Raises:
            NotReducedError: If the word is not reduced
        """
        word = tuple(word)
        w = self.from_word(word)
        if w.length != len(word):
            raise NotReducedError(f"{format_word(word)} is not reduced (length {w.length})")
        return w

    def is_reduced(self, word: Sequence[int]) -> bool:
        return is_reduced_word(self.rs, tuple(word))

    def multiply(self, u: WeylElt, v: WeylElt) -> WeylElt:
        return self.lookup(tuple(self.act(u, image) for image in v.key))

    def left_mult(self, i: int, w: WeylElt) -> WeylElt:
        """s_i w."""
        return self.lookup(tuple(reflect(self.rs, i, image) for image in w.key))

    def right_mult(self, w: WeylElt, i: int) -> WeylElt:
        """w s_i."""
        return self.lookup(self._right_key(w, i))

    def demazure_left_mult(self, i: int, w: WeylElt) -> WeylElt:
        """s_i * w in the 0-Hecke monoid: s_i w if that is longer, else w.

        T_{(s_i * w)^{-1}} = T_{w^{-1}} T_i as Demazure operators.
        """
        sw = self.left_mult(i, w)
        return sw if sw.length > w.length else w

    def inverse(self, w: WeylElt) -> WeylElt:
        if w not in self._inverse:
            # w^{-1} = s_{ip} ... s_{i1}: the first letter of w acts first
            images = []
            for omega in self.identity.key:
                for i in w.word:
                    omega = reflect(self.rs, i, omega)
                images.append(omega)
            inv = self.lookup(tuple(images))
            self._inverse[w] = inv
            self._inverse[inv] = w
        return self._inverse[w]

    def reflection(self, beta: Weight) -> WeylElt:
        """The reflection s_beta for a positive root beta."""
        return self.lookup(tuple(reflect_root(self.rs, beta, omega) for omega in self.identity.key))

    def sign(self, w: WeylElt) -> int:
        return -1 if w.length % 2 else 1

    def reduced_words(self, w: WeylElt) -> List[Tuple[int, ...]]:
        """Every reduced word of w, built from its left descents."""
        if w.length == 0:
            return [()]
        words = []
        for i in range(1, self.rank + 1):
            shorter = self.left_mult(i, w)
            if shorter.length < w.length:
                words.extend((i,) + rest for rest in self.reduced_words(shorter))
        return sorted(words)

    # Bruhat order

    def bruhat_leq(self, v: WeylElt, w: WeylElt) -> bool:
        """v <= w in Bruhat order.

        Walk w's reduced word from the left; whenever s_i is a left descent of
        the current v, strip it. v <= w iff v reaches the identity.
        """
        if v.length > w.length:
            return False
        if v.length == w.length:
            return v == w
        cache_key = (v, w)
        if cache_key in self._bruhat:
            return self._bruhat[cache_key]
        cur = v
        for i in w.word:
            if cur.length == 0:
                break
            stripped = self.left_mult(i, cur)
            if stripped.length < cur.length:
                cur = stripped
        result = cur.length == 0
        self._bruhat[cache_key] = result
        return result

    def bruhat_lt(self, v: WeylElt, w: WeylElt) -> bool:
        return v != w and self.bruhat_leq(v, w)

    def lower_interval(self, w: WeylElt) -> List[WeylElt]:
        """[1, w] sorted by length."""
        return [v for v in self if self.bruhat_leq(v, w)]

    def bruhat_graph(self) -> nx.DiGraph:
        """Bruhat graph: u -> s_beta u for every positive root with l(s_beta u) > l(u).

        Reachability in this graph is the Bruhat order.
        """
        graph = nx.DiGraph()
        reflections = [self.reflection(beta) for beta in self.rs.positive_roots]
        for u in self:
            graph.add_node(u, word=format_word(u.word), length=u.length)
        for u in self:
            for t in reflections:
                target = self.multiply(t, u)
                if target.length > u.length:
                    graph.add_edge(u, target)
        return graph

    # Parabolic subgroups and cosets

    def stabilizer(self, lam: Weight) -> FrozenSet[int]:
        """J = {i : <lam, alpha_i^vee> = 0} for a dominant weight."""
        return frozenset(i + 1 for i, c in enumerate(lam) if c == 0)

    def parabolic_subgroup(self, J: Iterable[int]) -> Tuple[WeylElt, ...]:
        """W_J, generated by {s_j : j in J}."""
        J = frozenset(J)
        if J not in self._subgroups:
            seen = {self.identity}
            queue = deque([self.identity])
            while queue:
                w = queue.popleft()
                for j in sorted(J):
                    x = self.right_mult(w, j)
                    if x not in seen:
                        seen.add(x)
                        queue.append(x)
            self._subgroups[J] = tuple(sorted(seen))
        return self._subgroups[J]

    def longest_in(self, J: Iterable[int]) -> WeylElt:
        """w_0(J), the longest element of W_J."""
        return max(self.parabolic_subgroup(J), key=lambda w: w.length)

    def coset_min_rep(self, w: WeylElt, J: Iterable[int]) -> WeylElt:
        """The unique minimal-length element of w W_J."""
        J = sorted(frozenset(J))
        changed = True
        while changed:
            changed = False
            for j in J:
                x = self.right_mult(w, j)
                if x.length < w.length:
                    w = x
                    changed = True
        return w

    def coset_max_rep(self, w: WeylElt, J: Iterable[int]) -> WeylElt:
        """The unique maximal-length element of w W_J."""
        return self.multiply(self.coset_min_rep(w, J), self.longest_in(J))

    def coset(self, w: WeylElt, J: Iterable[int]) -> List[WeylElt]:
        return [self.multiply(w, u) for u in self.parabolic_subgroup(J)]

    def quotient(self, J: Iterable[int]) -> List[WeylElt]:
        """Minimal representatives of W/W_J, sorted by length."""
        J = frozenset(J)
        return sorted({self.coset_min_rep(w, J) for w in self.elements.values()})

    def coset_bruhat_leq(self, tau: WeylElt, sigma: WeylElt, J: Iterable[int]) -> bool:
        """Bruhat order on W/W_J via minimal representatives."""
        return self.bruhat_leq(self.coset_min_rep(tau, J), self.coset_min_rep(sigma, J))

    # Lifts

    def maximal_lift(self, chain: Sequence[WeylElt], w: WeylElt, J: Iterable[int]) -> List[WeylElt]:
        """Maximal lift of a decreasing coset chain tau_1 > ... > tau_r below w.

        t_1 = max{t in tau_1 W_J : t <= w} and t_i = max{t in tau_i W_J : t < t_(i-1)}.

        Args:
            chain (list): Coset representatives tau_1, ..., tau_r
            w (WeylElt): Upper bound
            J (iterable): Parabolic index set

        Returns:
            list: The lift t_1 > ... > t_r

        Raises:
            NoLiftError: If some step has no candidate
            ConsistencyError: If the candidates have no unique maximum
        """
        J = frozenset(J)
        lifts = []
        bound = w
        for k, tau in enumerate(chain):
            if k == 0:
                candidates = [t for t in self.coset(tau, J) if self.bruhat_leq(t, bound)]
            else:
                candidates = [t for t in self.coset(tau, J) if self.bruhat_lt(t, bound)]
            if not candidates:
                raise NoLiftError(
                    f"No element of {format_word(tau.word)}W_J lies below {format_word(bound.word)}"
                )
            maxima = [t for t in candidates if all(self.bruhat_leq(c, t) for c in candidates)]
            if len(maxima) != 1:
                raise ConsistencyError(
                    f"Lift candidates in {format_word(tau.word)}W_J have {len(maxima)} maxima"
                )
            lifts.append(maxima[0])
            bound = maxima[0]
        return lifts

    def final_direction(self, chain: Sequence[WeylElt], w: WeylElt, J: Iterable[int]) -> WeylElt:
        """v(pi, w): the last element of the maximal lift."""
        return self.maximal_lift(chain, w, J)[-1]


def generate_group(rs: RootSystem, cap: int = None) -> WeylGroup:
    """Enumerate W, memoized per root system.

    Args:
        rs (RootSystem): Root data
        cap (int, optional): Largest accepted |W|; defaults to FLAGK_GROUP_CAP

    Raises:
        GroupCapError: If |W| exceeds cap
    """
    if cap is None:
        cap = GROUP_CAP
    return _cached_group(rs, cap)


@lru_cache(maxsize=None)
def _cached_group(rs: RootSystem, cap: int) -> WeylGroup:
    return WeylGroup(rs, cap=cap)


def check_bruhat_against_graph(group: WeylGroup) -> bool:
    """Compare bruhat_leq with reachability in the Bruhat graph."""
    graph = group.bruhat_graph()
    for u in group:
        reachable = nx.descendants(graph, u) | {u}
        for w in group:
            if (w in reachable) != group.bruhat_leq(u, w):
                return False
    return True
