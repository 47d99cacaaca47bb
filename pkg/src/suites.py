#!/usr/bin/env python3
"""
Named verification suites run by `flagk verify --suite NAME`.

Suites:
- identities31: Demazure operator identities on random monomials, reduced-word
  independence, parabolic point classes, Schubert class recursion
- thm42: the operator identity e^lambda T_{w^-1} = sum T_{v^-1} e^{eta(1)}
- character: path character = Demazure character = Weyl character formula
- chevalley: cover layer of each expansion against Chevalley's formula
- paths: LS path invariants and alpha-string properties
- cohomology: BGG operators and Schubert basis extraction
- g2golden: the G2 expansion of e^{omega_2} [O_{X_{s1s2s1s2}}]

Each suite covers types A2, B2, G2 and A3 with lambda in {omega_i} and rho
unless stated otherwise.
"""
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List

from config import PROBE_RADIUS, RANDOM_PROBES, SEED
from src import cohomology, laurent, lspath, pieri
from src.laurent import LaurentPoly
from src.rootdata import (
    RootSystem, build_root_system, fundamental_weight, reflect, weyl_dimension,
)
from src.weyl import format_word, generate_group
from utils.error_utils import ConsistencyError
from utils.logging_utils import log_info, log_progress, log_warning

SUITE_TYPES = (('A', 2), ('B', 2), ('G', 2), ('A', 3))
RANK_TWO_TYPES = (('A', 2), ('B', 2), ('G', 2))
RANDOM_SAMPLES = 1000

# (endpoint, maximal lift, initial direction, v^-1) for G2, lambda = omega_2, w = s1s2s1s2
G2_GOLDEN_WORD = (1, 2, 1, 2)
G2_GOLDEN_SHAPE = (0, 1)
G2_GOLDEN_EXPANSION = {
    (1, 2, 1, 2): 1, (1, 2, 1): 1, (2, 1, 2): 3, (2, 1): 3, (1, 2): 2, (2,): 2, (1,): 1,
}
G2_GOLDEN_TABLE = (
    ((0, 1), ((1,),), (), (1,)),
    ((3, -1), ((2, 1),), (2,), (1, 2)),
    ((1, 0), ((1, 2, 1), (2, 1)), (1, 2), (1, 2)),
    ((-1, 1), ((1, 2, 1), (2, 1)), (1, 2), (1, 2)),
    ((-3, 2), ((1, 2, 1),), (1, 2), (1, 2, 1)),
    ((3, -2), ((2, 1, 2),), (2, 1, 2), (2, 1, 2)),
    ((1, -1), ((1, 2, 1, 2), (2, 1, 2)), (1, 2, 1, 2), (2, 1, 2)),
    ((-1, 0), ((1, 2, 1, 2), (2, 1, 2)), (1, 2, 1, 2), (2, 1, 2)),
    ((-3, 1), ((1, 2, 1, 2),), (1, 2, 1, 2), (2, 1, 2, 1)),
    ((2, -1), ((2, 1, 2), (1, 2), (2,)), (2, 1, 2), (2,)),
    ((-2, 1), ((1, 2, 1, 2), (2, 1, 2), (1, 2)), (1, 2, 1, 2), (2, 1)),
    ((0, 0), ((2, 1, 2), (1, 2)), (2, 1, 2), (2, 1)),
    ((0, 0), ((1, 2, 1, 2), (2, 1, 2), (1, 2), (2,)), (1, 2, 1, 2), (2,)),
)


@dataclass
class SuiteResult:
    """Outcome of one suite."""
    name: str
    checks: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def check(self, condition, message):
        self.checks += 1
        if not condition:
            self.failures.append(message)
            log_warning('Suites', f"{self.name}: {message}")

    def summary(self):
        status = 'passed' if self.ok else f"FAILED ({len(self.failures)} failures)"
        return f"suite {self.name}: {self.checks} checks, {status}"


def suite_weights(rs: RootSystem):
    """omega_1, ..., omega_n and rho."""
    return [fundamental_weight(rs, i) for i in range(1, rs.rank + 1)] + [tuple(rs.rho)]


def suite_cases(types=SUITE_TYPES):
    for cartan_type, rank in types:
        rs = build_root_system(cartan_type, rank)
        for lam in suite_weights(rs):
            yield rs, lam


def _random_weight(rng, rank, spread):
    return tuple(rng.randint(-spread, spread) for _ in range(rank))


def run_identities31(seed: int) -> SuiteResult:
    result = SuiteResult('identities31')
    rng = random.Random(seed)
    for cartan_type, rank in RANK_TWO_TYPES:
        rs = build_root_system(cartan_type, rank)
        group = generate_group(rs)
        rho = tuple(rs.rho)
        log_info('Suites', f"identities31: {RANDOM_SAMPLES} samples on {rs.name}")
        for _ in range(RANDOM_SAMPLES):
            j = rng.randint(1, rank)
            lam = _random_weight(rng, rank, 3)
            x = LaurentPoly.monomial(_random_weight(rng, rank, 4))
            tx = laurent.demazure_T(rs, j, x)
            s_j = group.from_word((j,))
            label = f"{rs.name} j={j} lambda={lam} x={x!r}"

            result.check(laurent.weyl_act(rs, s_j, tx) == tx, f"s_j T_j x != T_j x for {label}")
            result.check(laurent.demazure_T(rs, j, tx) == tx, f"T_j T_j x != T_j x for {label}")

            invariant = LaurentPoly.monomial(lam) + LaurentPoly.monomial(reflect(rs, j, lam))
            result.check(
                laurent.demazure_T(rs, j, invariant * x) == invariant * tx,
                f"T_j is not linear over s_j-invariants for {label}",
            )

            lhs = tx.shift(lam)
            rhs = (laurent.demazure_T(rs, j, x.shift(reflect(rs, j, lam)))
                   + laurent.demazure_L(rs, j, LaurentPoly.monomial(lam)) * x)
            result.check(lhs == rhs, f"e^lambda T_j(x) expansion fails for {label}")

            via_l = laurent.demazure_L(rs, j, x.shift(rho)).shift(tuple(-a for a in rho))
            result.check(via_l == tx, f"T_j != e^-rho L_j e^rho for {label}")

        words = group.reduced_words(group.longest)
        for _ in range(10):
            x = LaurentPoly.monomial(_random_weight(rng, rank, 3))
            images = [laurent.demazure_T_word(rs, word, x) for word in words]
            result.check(
                all(image == images[0] for image in images),
                f"T_w0 depends on the reduced word in {rs.name} for x={x!r}",
            )

    for cartan_type, rank in SUITE_TYPES:
        rs = build_root_system(cartan_type, rank)
        group = generate_group(rs)
        base = laurent.point_class(rs)
        for mask in range(2 ** rank):
            J = frozenset(i + 1 for i in range(rank) if mask >> i & 1)
            word = tuple(reversed(group.longest_in(J).word))
            result.check(
                laurent.demazure_T_word(rs, word, base) == laurent.point_class(rs, J),
                f"point class of {rs.name} J={sorted(J)} does not match",
            )
        for w in group:
            for j in range(1, rank + 1):
                ws = group.right_mult(w, j)
                target = ws if ws.length > w.length else w
                result.check(
                    laurent.demazure_T(rs, j, laurent.schubert_class(rs, w)) == laurent.schubert_class(rs, target),
                    f"T_{j} [O_X_{format_word(w.word)}] is wrong in {rs.name}",
                )
        result.check(
            laurent.schubert_class(rs, group.longest) == LaurentPoly.one(rank),
            f"[O_X_w0] != 1 in {rs.name}",
        )
    return result


def run_thm42(seed: int) -> SuiteResult:
    result = SuiteResult('thm42')
    cases = list(suite_cases())
    for step, (rs, lam) in enumerate(cases, start=1):
        group = generate_group(rs)
        probes = pieri.default_probes(rs.rank, PROBE_RADIUS, RANDOM_PROBES, seed)
        log_progress(step, len(cases), 'Suites', f"thm42 {rs.name} lambda={list(lam)}, {len(probes)} probes")
        for w in group:
            report = pieri.verify_operator_identity(rs, lam, w, probes)
            result.check(report.ok, f"{rs.name} lambda={list(lam)} w={format_word(w.word)}: {report.describe()}")
    return result


def run_character(seed: int) -> SuiteResult:
    result = SuiteResult('character')
    for rs, lam in suite_cases():
        label = f"{rs.name} lambda={list(lam)}"
        from_paths = lspath.path_character(rs, lam)
        from_demazure = laurent.demazure_character(rs, lam)
        dimension = weyl_dimension(rs, lam)
        result.check(from_paths == from_demazure, f"path character != Demazure character for {label}")
        result.check(from_demazure == laurent.weyl_character(rs, lam), f"Demazure character != Weyl formula for {label}")
        result.check(laurent.epsilon(from_paths) == dimension, f"epsilon != {dimension} for {label}")
    g2 = build_root_system('G', 2)
    result.check(weyl_dimension(g2, (0, 1)) == 14, "dim V_omega2(G2) != 14")
    return result


def run_chevalley(seed: int) -> SuiteResult:
    result = SuiteResult('chevalley')
    for rs, lam in suite_cases():
        group = generate_group(rs)
        for w in group:
            label = f"{rs.name} lambda={list(lam)} w={format_word(w.word)}"
            report = pieri.chevalley_cross_check(rs, lam, w)
            result.check(report.ok, f"{label}: {report.describe()}")
            classical = cohomology.classical_chevalley(rs, lam, w)
            result.check(
                classical == {v: Fraction(c) for v, c in report.observed.items()},
                f"{label}: cohomology gives {classical}",
            )
    return result


def run_paths(seed: int) -> SuiteResult:
    result = SuiteResult('paths')
    for rs, lam in suite_cases():
        model = lspath.get_path_model(rs, lam)
        paths = model.generate_paths()
        label = f"{rs.name} lambda={list(lam)}"
        for path in paths:
            result.check(_is_valid_path(model, path), f"invalid LS path {path.describe()} for {label}")
            for j in range(1, rs.rank + 1):
                down = model.f_op(j, path)
                if down is not None:
                    result.check(model.e_op(j, down) == path, f"e_{j} f_{j} != id on {path.describe()}")
                up = model.e_op(j, path)
                if up is not None:
                    result.check(model.f_op(j, up) == path, f"f_{j} e_{j} != id on {path.describe()}")

        for path in paths:
            for j in range(1, rs.rank + 1):
                if model.e_op(j, path) is None:
                    check_alpha_string(result, model, path, j)
    return result


def _is_valid_path(model, path) -> bool:
    group = model.group
    if path.breaks[0] != 0 or path.breaks[-1] != 1:
        return False
    if any(a >= b for a, b in zip(path.breaks, path.breaks[1:])):
        return False
    for tau, sigma in zip(path.cosets, path.cosets[1:]):
        if tau == sigma or not group.coset_bruhat_leq(sigma, tau, model.J):
            return False
    return all(Fraction(a).denominator == 1 for a in path.endpoint())


def check_alpha_string(result, model, path, j):
    """Endpoint, initial direction and final direction rules along the
    alpha_j-string headed by `path`.

    - (f^k pi)(1) = pi(1) - k alpha_j.
    - iota(f^k pi) = s_j iota(pi) for every k >= 1 when h_j > 0 on (0, 1];
      otherwise f_j acts after the last zero of h_j and iota never moves.
    - For w with s_j w < w and the whole string below w:
      v(f^k pi, w) = v(pi, w) for 0 < k < m and v(f^m pi, w) = s_j * v(pi, w),
      the 0-Hecke product.
    """
    group = model.group
    string = model.alpha_string(j, path)
    alpha = model.rs.simple_roots[j - 1]
    start = path.endpoint()
    moves = lspath.minimum_only_at_start(path, j)
    s_iota = group.coset_min_rep(group.left_mult(j, path.cosets[0]), model.J)
    for k, member in enumerate(string):
        expected = tuple(a - k * b for a, b in zip(start, alpha))
        result.check(member.endpoint() == expected, f"string endpoint {k} wrong for {path.describe()}")
        if k >= 1:
            iota = s_iota if moves else path.cosets[0]
            result.check(member.cosets[0] == iota, f"iota(f_{j}^{k}) wrong for {path.describe()}")
    _check_string_final_directions(result, model, string, j)


def _check_string_final_directions(result, model, string, j):
    m = len(string) - 1
    if m < 1:
        return
    group = model.group
    for w in group:
        if group.left_mult(j, w).length > w.length:
            continue
        if not all(group.coset_bruhat_leq(p.cosets[0], w, model.J) for p in string):
            continue
        finals = [group.final_direction(p.cosets, w, model.J) for p in string]
        label = f"string of {string[0].describe()} under w={format_word(w.word)}"
        result.check(
            finals[-1] == group.demazure_left_mult(j, finals[0]),
            f"v(f_{j}^m pi) != s_{j} * v(pi) for {label}",
        )
        for k in range(1, m):
            result.check(finals[k] == finals[0], f"v(f_{j}^{k} pi) != v(pi) for {label}")


def run_cohomology(seed: int) -> SuiteResult:
    result = SuiteResult('cohomology')
    rng = random.Random(seed)
    for cartan_type, rank in SUITE_TYPES:
        rs = build_root_system(cartan_type, rank)
        model = cohomology.get_schubert_model(rs)
        group = model.group
        N = group.longest.length
        try:
            model.check_round_trip()
            message = ''
        except ConsistencyError as e:
            message = str(e)
        result.check(not message, f"{rs.name}: extraction round trip failed: {message}")
        for w in group:
            result.check(model.schubert_rep(w).degree() == N - w.length, f"deg [X_{format_word(w.word)}] wrong")
        for _ in range(20):
            f = model.make(sum(
                rng.randint(-3, 3) * model.symbols[rng.randrange(rank)] ** rng.randint(0, 3)
                * model.symbols[rng.randrange(rank)] ** rng.randint(0, 2)
                for _ in range(4)
            ))
            for j in range(1, rank + 1):
                twice = model.bgg_partial(j, model.bgg_partial(j, f))
                result.check(twice.is_zero(), f"d_{j}^2 != 0 on {f!r} in {rs.name}")
    return result


def run_g2golden(seed: int) -> SuiteResult:
    result = SuiteResult('g2golden')
    rs = build_root_system('G', 2)
    expansion = pieri.expand(rs, G2_GOLDEN_SHAPE, G2_GOLDEN_WORD)
    result.check(expansion.path_count == 13, f"|T| = {expansion.path_count}, expected 13")
    result.check(expansion.by_word() == G2_GOLDEN_EXPANSION, f"expansion {expansion.by_word()}")
    rows = sorted(
        (tuple(row.endpoint), tuple(t.word for t in row.lift), row.initial.word, row.final_inverse.word)
        for row in pieri.path_table(rs, G2_GOLDEN_SHAPE, G2_GOLDEN_WORD)
    )
    result.check(rows == sorted(G2_GOLDEN_TABLE), f"path table differs: {rows}")
    result.check(len(lspath.generate_paths(rs, G2_GOLDEN_SHAPE)) == 14, "T^omega2 does not have 14 paths")
    return result


SUITES: Dict[str, Callable[[int], SuiteResult]] = {
    'identities31': run_identities31,
    'thm42': run_thm42,
    'character': run_character,
    'chevalley': run_chevalley,
    'paths': run_paths,
    'cohomology': run_cohomology,
    'g2golden': run_g2golden,
}


def run_suite(name: str, seed: int = None) -> SuiteResult:
    """Run a named suite; 'all' runs every suite in order."""
    seed = SEED if seed is None else seed
    if name == 'all':
        combined = SuiteResult('all')
        for suite_name, runner in SUITES.items():
            part = runner(seed)
            combined.checks += part.checks
            combined.failures.extend(part.failures)
        return combined
    return SUITES[name](seed)
