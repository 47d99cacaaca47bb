#!/usr/bin/env python3
"""
Pieri-Chevalley expansions in K(G/B).

This module provides:
- restricted_paths: the LS paths whose initial direction lies below w
- expand: e^lambda [O_{X_w}] = sum over those paths of [O_{X_v(path, w)}]
- path_table: endpoint, maximal lift, initial direction and v^{-1} per path
- verify_operator_identity: the exact operator identity
      e^lambda T_{w^-1} = sum over paths of T_{v^-1} e^{path(1)}
  on R(T), checked on probe monomials
- chevalley_cross_check: the length l(w) - 1 layer against <lambda, beta^vee>
- parabolic_pullback / expand_parabolic for G/P
"""
import itertools
import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

from config import PROBE_RADIUS, RANDOM_PROBES, SEED
from src.laurent import LaurentPoly, demazure_T_word
from src.lspath import LSPath, get_path_model
from src.rootdata import RootSystem, Weight, build_root_system, coroot_pairing
from src.weyl import WeylElt, WeylGroup, format_word, generate_group
from utils.error_utils import ConsistencyError, NoLiftError, PreconditionError
from utils.logging_utils import log_info


@dataclass
class Expansion:
    """c_v for e^lambda [O_{X_w}] = sum_v c_v [O_{X_v}]."""
    rs: RootSystem = field(repr=False)
    shape: Weight
    w: WeylElt
    path_count: int
    coeffs: Dict[WeylElt, int]

    def items(self) -> List[Tuple[WeylElt, int]]:
        """Coefficients ordered by length, then reduced word, shortest first."""
        return sorted(self.coeffs.items(), key=lambda item: (item[0].length, item[0].word))

    def by_word(self) -> Dict[Tuple[int, ...], int]:
        return {v.word: c for v, c in self.coeffs.items()}

    def layer(self, length: int) -> Dict[WeylElt, int]:
        return {v: c for v, c in self.coeffs.items() if v.length == length}

    def to_json(self):
        group = generate_group(self.rs)
        return {
            'type': self.rs.cartan_type,
            'rank': self.rs.rank,
            'lambda': [int(a) for a in self.shape],
            'word': list(self.w.word),
            'paths': self.path_count,
            'coeffs': [
                {
                    'v_word': list(v.word),
                    'v_inverse_word': list(group.inverse(v).word),
                    'mult': c,
                }
                for v, c in self.items()
            ],
        }

    @classmethod
    def from_json(cls, data) -> 'Expansion':
        rs = build_root_system(data['type'], int(data['rank']))
        group = generate_group(rs)
        return cls(
            rs=rs,
            shape=tuple(int(a) for a in data['lambda']),
            w=group.from_word(data['word']),
            path_count=int(data['paths']),
            coeffs={group.from_word(entry['v_word']): int(entry['mult']) for entry in data['coeffs']},
        )

    def __eq__(self, other):
        if not isinstance(other, Expansion):
            return NotImplemented
        return (
            self.rs == other.rs and tuple(self.shape) == tuple(other.shape) and self.w == other.w
            and self.path_count == other.path_count and self.coeffs == other.coeffs
        )


@dataclass
class PathRow:
    """One row of the per-path table."""
    path: LSPath
    endpoint: Weight
    lift: List[WeylElt]
    initial: WeylElt
    final: WeylElt
    final_inverse: WeylElt

    def to_json(self):
        return {
            'endpoint': [int(a) for a in self.endpoint],
            'lift': [list(t.word) for t in self.lift],
            'initial': list(self.initial.word),
            'v_word': list(self.final.word),
            'v_inverse_word': list(self.final_inverse.word),
        }


@dataclass
class IdentityReport:
    ok: bool
    probes_checked: int
    probe: Optional[Weight] = None
    lhs: Optional[LaurentPoly] = None
    rhs: Optional[LaurentPoly] = None

    def describe(self):
        if self.ok:
            return f"identity holds on {self.probes_checked} probes"
        return f"mismatch at probe e^{list(self.probe)}: lhs={self.lhs!r} rhs={self.rhs!r}"


@dataclass
class ChevalleyReport:
    ok: bool
    expected: Dict[WeylElt, int]
    observed: Dict[WeylElt, int]

    def describe(self):
        def fmt(d):
            return '{' + ', '.join(f"{format_word(v.word)}: {c}" for v, c in sorted(d.items())) + '}'
        status = 'agree' if self.ok else 'disagree'
        return f"covers {status}: expected {fmt(self.expected)}, observed {fmt(self.observed)}"


def _resolve_element(group: WeylGroup, w) -> WeylElt:
    if isinstance(w, WeylElt):
        return w
    return group.from_word(tuple(w))


def restricted_paths(rs: RootSystem, lam: Weight, w) -> List[LSPath]:
    """T^lambda_w = {pi in T^lambda : iota(pi) <= w W_lambda}."""
    model = get_path_model(rs, tuple(lam))
    w = _resolve_element(model.group, w)
    return [
        path for path in model.generate_paths()
        if model.group.coset_bruhat_leq(path.cosets[0], w, model.J)
    ]


def path_table(rs: RootSystem, lam: Weight, w) -> List[PathRow]:
    """Per-path data of T^lambda_w.

    Raises:
        ConsistencyError: If a restricted path has no lift below w
    """
    model = get_path_model(rs, tuple(lam))
    group = model.group
    w = _resolve_element(group, w)
    rows = []
    for path in restricted_paths(rs, lam, w):
        try:
            lift = group.maximal_lift(path.cosets, w, model.J)
        except NoLiftError as e:
            raise ConsistencyError(f"Path {path.describe()} in T^lambda_w has no lift: {e}") from e
        final = lift[-1]
        rows.append(PathRow(
            path=path,
            endpoint=path.endpoint(),
            lift=lift,
            initial=path.cosets[0],
            final=final,
            final_inverse=group.inverse(final),
        ))
    return rows


def expand(rs: RootSystem, lam: Weight, w) -> Expansion:
    """Coefficients of e^lambda [O_{X_w}] in the Schubert basis.

    Args:
        rs (RootSystem): Root data
        lam (tuple): Dominant integral weight
        w (WeylElt or word): Schubert index

    Returns:
        Expansion: c_v = number of paths with final direction v

    Raises:
        ConsistencyError: If the coefficient sum, the Bruhat bound or c_w >= 1 fails
    """
    model = get_path_model(rs, tuple(lam))
    group = model.group
    w = _resolve_element(group, w)
    rows = path_table(rs, lam, w)
    coeffs = Counter(row.final for row in rows)

    if sum(coeffs.values()) != len(rows):
        raise ConsistencyError("Coefficient sum differs from the number of paths")
    for v in coeffs:
        if not group.bruhat_leq(v, w):
            raise ConsistencyError(f"{format_word(v.word)} is not below {format_word(w.word)}")
    if coeffs.get(w, 0) < 1:
        raise ConsistencyError(f"Top coefficient of {format_word(w.word)} is {coeffs.get(w, 0)}")
    log_info('Pieri', f"{rs.name} lambda={list(model.shape)} w={format_word(w.word)}: "
                      f"{len(rows)} paths, {len(coeffs)} classes, c_w={coeffs[w]}")

    return Expansion(rs=rs, shape=model.shape, w=w, path_count=len(rows), coeffs=dict(coeffs))


def default_probes(rank: int, radius: int = None, random_count: int = None, seed: int = None) -> List[Weight]:
    """Monomial exponents in the box [-radius, radius]^rank plus random ones."""
    radius = PROBE_RADIUS if radius is None else radius
    random_count = RANDOM_PROBES if random_count is None else random_count
    seed = SEED if seed is None else seed
    probes = [tuple(mu) for mu in itertools.product(range(-radius, radius + 1), repeat=rank)]
    rng = random.Random(seed)
    spread = radius + 3
    for _ in range(random_count):
        probes.append(tuple(rng.randint(-spread, spread) for _ in range(rank)))
    return probes


def verify_operator_identity(rs: RootSystem, lam: Weight, w, probes: Iterable = None) -> IdentityReport:
    """Check e^lambda T_{w^-1}(x) = sum_eta T_{v(eta,w)^-1}(e^{eta(1)} x) exactly.

    Args:
        rs (RootSystem): Root data
        lam (tuple): Dominant integral weight
        w (WeylElt or word): Schubert index
        probes (iterable, optional): Weights mu (probe e^mu) or LaurentPoly probes

    Returns:
        IdentityReport: ok plus the first mismatch, if any
    """
    model = get_path_model(rs, tuple(lam))
    group = model.group
    w = _resolve_element(group, w)
    if probes is None:
        probes = default_probes(rs.rank)
    probes = list(probes)
    if not probes:
        raise PreconditionError("verify_operator_identity needs at least one probe")

    # Paths with the same final direction share one Demazure operator
    inner: Dict[WeylElt, LaurentPoly] = {}
    for row in path_table(rs, lam, w):
        inner[row.final] = inner.get(row.final, LaurentPoly()) + LaurentPoly.monomial(row.endpoint)
    w_inverse_word = tuple(reversed(w.word))

    checked = 0
    for probe in probes:
        x = probe if isinstance(probe, LaurentPoly) else LaurentPoly.monomial(tuple(probe))
        lhs = demazure_T_word(rs, w_inverse_word, x).shift(model.shape)
        rhs = LaurentPoly()
        for v, weights in inner.items():
            rhs = rhs + demazure_T_word(rs, tuple(reversed(v.word)), weights * x)
        checked += 1
        if lhs != rhs:
            key = tuple(probe) if not isinstance(probe, LaurentPoly) else None
            return IdentityReport(ok=False, probes_checked=checked, probe=key, lhs=lhs, rhs=rhs)
    return IdentityReport(ok=True, probes_checked=checked)


def recover_reflection(group: WeylGroup, w: WeylElt, v: WeylElt) -> Weight:
    """The positive root beta with v = w s_beta.

    Raises:
        PreconditionError: Unless exactly one positive root matches
    """
    matches = [beta for beta in group.rs.positive_roots if group.multiply(w, group.reflection(beta)) == v]
    if len(matches) != 1:
        raise PreconditionError(
            f"{format_word(v.word)} = {format_word(w.word)} s_beta has {len(matches)} solutions"
        )
    return matches[0]


def chevalley_covers(rs: RootSystem, lam: Weight, w) -> Dict[WeylElt, int]:
    """{v = w s_beta : l(v) = l(w) - 1} with coefficient <lambda, beta^vee>, zeros dropped."""
    group = generate_group(rs)
    w = _resolve_element(group, w)
    covers = {}
    for beta in rs.positive_roots:
        v = group.multiply(w, group.reflection(beta))
        if v.length == w.length - 1:
            c = coroot_pairing(rs, tuple(lam), beta)
            if c:
                covers[v] = int(c)
    return covers


def chevalley_cross_check(rs: RootSystem, lam: Weight, w) -> ChevalleyReport:
    """Compare the length l(w) - 1 layer of expand(lam, w) with <lambda, beta^vee>."""
    group = generate_group(rs)
    w = _resolve_element(group, w)
    expected = chevalley_covers(rs, lam, w)
    observed = expand(rs, lam, w).layer(w.length - 1)
    ok = expected == observed
    if ok:
        for v in observed:
            recover_reflection(group, w, v)
    return ChevalleyReport(ok=ok, expected=expected, observed=observed)


def parabolic_pullback(rs: RootSystem, coset: WeylElt, J: Iterable[int]) -> WeylElt:
    """The Schubert class of G/P pulled back to G/B is indexed by the longest
    element of the coset."""
    group = generate_group(rs)
    return group.coset_max_rep(_resolve_element(group, coset), frozenset(J))


def expand_parabolic(rs: RootSystem, lam: Weight, coset, J: Iterable[int]) -> Expansion:
    """e^lambda times the pullback of [O_{X_coset}] from G/P_J."""
    return expand(rs, lam, parabolic_pullback(rs, coset, J))
