#!/usr/bin/env python3
"""
Root systems and weight-lattice arithmetic.

Weights are tuples of exact rationals (int or Fraction) in the basis of
fundamental weights, so the pairing with a simple coroot is a coordinate
read. Simple indices are 1-based everywhere in the public API.

Cartan matrices follow a_ij = <alpha_j, alpha_i^vee> with Bourbaki labeling;
in G2 the first simple root is short.
"""
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Sequence, Tuple

from config import MAX_RANK
from utils.error_utils import ConsistencyError, RootDataError

Weight = Tuple  # tuple of int/Fraction, fundamental-weight coordinates

CARTAN_TYPES = ('A', 'B', 'C', 'D', 'E', 'F', 'G')

# Classification counts of positive roots, used as a sanity check
_POSITIVE_ROOT_COUNTS = {
    'A': lambda n: n * (n + 1) // 2,
    'B': lambda n: n * n,
    'C': lambda n: n * n,
    'D': lambda n: n * (n - 1),
    'E': lambda n: {6: 36, 7: 63, 8: 120}[n],
    'F': lambda n: 24,
    'G': lambda n: 6,
}


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Finite crystallographic root system generated from a Cartan matrix.

    Equality and hashing use (cartan_type, rank) only; RootSystem is the key of
    most memoized computations.
    """
    cartan_type: str
    rank: int
    cartan_matrix: Tuple[Tuple[int, ...], ...]
    simple_roots: Tuple[Weight, ...]
    positive_roots: Tuple[Weight, ...]
    rho: Weight
    # positive roots in the simple-root basis, aligned with positive_roots
    root_coords: Tuple[Tuple[int, ...], ...] = field(repr=False)
    # (u, i) with beta = u(alpha_i), u a word applied right to left
    root_witness: Tuple[Tuple[Tuple[int, ...], int], ...] = field(repr=False)

    def __eq__(self, other):
        return isinstance(other, RootSystem) and (self.cartan_type, self.rank) == (other.cartan_type, other.rank)

    def __hash__(self):
        return hash((self.cartan_type, self.rank))

    @property
    def name(self):
        return f"{self.cartan_type}{self.rank}"

    @property
    def num_positive_roots(self):
        return len(self.positive_roots)

    def check_index(self, j):
        if not isinstance(j, int) or not 1 <= j <= self.rank:
            raise RootDataError(f"Simple-root index {j!r} out of range 1..{self.rank} for {self.name}")

    def check_weight(self, weight):
        if len(weight) != self.rank:
            raise RootDataError(f"Weight {tuple(weight)} has {len(weight)} coordinates, expected {self.rank}")


def cartan_matrix(cartan_type, rank):
    """Return the Cartan matrix of a finite type as a tuple of rows.

    Args:
        cartan_type (str): One of A, B, C, D, E, F, G
        rank (int): Rank of the root system

    Returns:
        tuple: rank x rank integer matrix with a_ij = <alpha_j, alpha_i^vee>

    Raises:
        RootDataError: If (cartan_type, rank) is not a finite Cartan type
    """
    if not isinstance(rank, int) or isinstance(rank, bool):
        raise RootDataError(f"Invalid rank {rank!r}")
    valid = {
        'A': rank >= 1,
        'B': rank >= 2,
        'C': rank >= 2,
        'D': rank >= 4,
        'E': rank in (6, 7, 8),
        'F': rank == 4,
        'G': rank == 2,
    }
    if cartan_type not in valid or not valid[cartan_type]:
        raise RootDataError(f"Invalid Cartan type {cartan_type}{rank}")

    n = rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, a_ij=-1, a_ji=-1):
        # 1-based node labels
        a[i - 1][j - 1] = a_ij
        a[j - 1][i - 1] = a_ji

    if cartan_type in ('A', 'B', 'C'):
        for i in range(1, n):
            link(i, i + 1)
        if cartan_type == 'B':
            # alpha_n short
            link(n - 1, n, a_ij=-1, a_ji=-2)
        elif cartan_type == 'C':
            # alpha_n long
            link(n - 1, n, a_ij=-2, a_ji=-1)
    elif cartan_type == 'D':
        for i in range(1, n - 1):
            link(i, i + 1)
        link(n - 2, n)
    elif cartan_type == 'E':
        link(1, 3)
        link(2, 4)
        for i in range(3, n):
            link(i, i + 1)
    elif cartan_type == 'F':
        link(1, 2)
        link(2, 3, a_ij=-1, a_ji=-2)
        link(3, 4)
    elif cartan_type == 'G':
        # alpha_1 short
        link(1, 2, a_ij=-3, a_ji=-1)

    return tuple(tuple(row) for row in a)


def _root_pairing(matrix, beta, j):
    """<beta, alpha_j^vee> for beta in simple-root coordinates (j 0-based)."""
    return sum(b * matrix[j][i] for i, b in enumerate(beta))


def _generate_positive_roots(matrix):
    """Close the simple roots under simple reflections, keeping positives.

    Returns:
        dict: simple-root coordinates -> witness (u, i) with beta = u(alpha_i)
    """
    n = len(matrix)
    witness = {}
    queue = deque()
    for i in range(n):
        simple = tuple(1 if k == i else 0 for k in range(n))
        witness[simple] = ((), i + 1)
        queue.append(simple)

    while queue:
        beta = queue.popleft()
        word, i = witness[beta]
        for j in range(n):
            c = _root_pairing(matrix, beta, j)
            if c == 0:
                continue
            gamma = tuple(b - (c if k == j else 0) for k, b in enumerate(beta))
            if any(g < 0 for g in gamma) or gamma in witness:
                continue
            witness[gamma] = ((j + 1,) + word, i)
            queue.append(gamma)

    return witness


def build_root_system(cartan_type, rank, max_rank=None):
    """Build a fully populated RootSystem.

    Args:
        cartan_type (str): One of A, B, C, D, E, F, G
        rank (int): Rank, at most max_rank
        max_rank (int, optional): Rank cap; defaults to FLAGK_MAX_RANK

    Returns:
        RootSystem: Immutable root data

    Raises:
        RootDataError: On an invalid type/rank pair or a rank above the cap
    """
    cartan_type = str(cartan_type).upper()
    if max_rank is None:
        max_rank = MAX_RANK
    if isinstance(rank, int) and rank > max_rank:
        raise RootDataError(f"Rank {rank} exceeds the cap of {max_rank}")
    return _build_root_system(cartan_type, rank)


@lru_cache(maxsize=None)
def _build_root_system(cartan_type, rank):
    matrix = cartan_matrix(cartan_type, rank)

    witness = _generate_positive_roots(matrix)
    coords = sorted(witness, key=lambda b: (sum(b), tuple(-x for x in b)))

    def to_weight(beta):
        return tuple(_root_pairing(matrix, beta, j) for j in range(rank))

    positive_roots = tuple(to_weight(b) for b in coords)
    simple_roots = tuple(to_weight(tuple(1 if k == i else 0 for k in range(rank))) for i in range(rank))

    expected = _POSITIVE_ROOT_COUNTS[cartan_type](rank)
    if len(positive_roots) != expected:
        raise ConsistencyError(
            f"{cartan_type}{rank}: generated {len(positive_roots)} positive roots, expected {expected}"
        )

    rho = tuple(Fraction(sum(beta[j] for beta in positive_roots), 2) for j in range(rank))
    if any(r != 1 for r in rho):
        raise ConsistencyError(f"{cartan_type}{rank}: rho = {rho} is not the sum of fundamental weights")
    rho = tuple(1 for _ in range(rank))

    return RootSystem(
        cartan_type=cartan_type,
        rank=rank,
        cartan_matrix=matrix,
        simple_roots=simple_roots,
        positive_roots=positive_roots,
        rho=rho,
        root_coords=tuple(coords),
        root_witness=tuple(witness[b] for b in coords),
    )


# Weight arithmetic

def fundamental_weight(rs: RootSystem, i: int) -> Weight:
    """omega_i as a weight (i 1-based)."""
    rs.check_index(i)
    return tuple(1 if k == i - 1 else 0 for k in range(rs.rank))


def weight_add(lam: Weight, mu: Weight) -> Weight:
    return tuple(a + b for a, b in zip(lam, mu))


def normalize_weight(lam: Iterable) -> Weight:
    """Store integral coordinates as int and the rest as Fraction."""
    out = []
    for a in lam:
        a = Fraction(a)
        out.append(a.numerator if a.denominator == 1 else a)
    return tuple(out)


def is_integral(lam: Weight) -> bool:
    return all(Fraction(a).denominator == 1 for a in lam)


def weight_to_json(lam: Weight):
    """Integral weight as a list of ints."""
    if not is_integral(lam):
        raise RootDataError(f"Weight {tuple(lam)} is not integral")
    return [int(a) for a in lam]


def is_dominant(lam: Weight) -> bool:
    return all(a >= 0 for a in lam)


def check_dominant_integral(rs: RootSystem, lam: Weight) -> Weight:
    """Validate and normalize a dominant integral weight.

    Raises:
        RootDataError: If lam has the wrong length or is not dominant integral
    """
    rs.check_weight(lam)
    if not is_integral(lam) or not is_dominant(lam):
        raise RootDataError(f"Weight {tuple(lam)} is not dominant integral")
    return normalize_weight(lam)


def pairing(rs: RootSystem, lam: Weight, j: int):
    """<lam, alpha_j^vee>, i.e. the j-th fundamental-weight coordinate."""
    rs.check_index(j)
    return lam[j - 1]


def reflect(rs: RootSystem, j: int, lam: Weight) -> Weight:
    """s_j(lam) = lam - <lam, alpha_j^vee> alpha_j."""
    c = pairing(rs, lam, j)
    if c == 0:
        return tuple(lam)
    alpha = rs.simple_roots[j - 1]
    return tuple(a - c * b for a, b in zip(lam, alpha))


def apply_word(rs: RootSystem, word: Sequence[int], lam: Weight) -> Weight:
    """(s_{i1} ... s_{ip})(lam); the rightmost reflection acts first."""
    for j in reversed(word):
        lam = reflect(rs, j, lam)
    return lam


def root_index(rs: RootSystem, beta: Weight) -> int:
    """Position of a positive root in rs.positive_roots."""
    try:
        return _root_positions(rs)[tuple(beta)]
    except KeyError:
        raise RootDataError(f"{tuple(beta)} is not a positive root of {rs.name}") from None


@lru_cache(maxsize=None)
def _root_positions(rs: RootSystem) -> Dict[Weight, int]:
    return {beta: k for k, beta in enumerate(rs.positive_roots)}


def is_positive_root(rs: RootSystem, beta: Weight) -> bool:
    return tuple(beta) in _root_positions(rs)


def coroot_pairing(rs: RootSystem, lam: Weight, beta: Weight):
    """<lam, beta^vee> for a positive root beta.

    With beta = u(alpha_i) this is <u^{-1} lam, alpha_i^vee>.
    """
    word, i = rs.root_witness[root_index(rs, beta)]
    # u^{-1} = reversed word, so the first letter of u acts first
    for j in word:
        lam = reflect(rs, j, lam)
    return lam[i - 1]


def reflect_root(rs: RootSystem, beta: Weight, lam: Weight) -> Weight:
    """s_beta(lam) = lam - <lam, beta^vee> beta."""
    c = coroot_pairing(rs, lam, beta)
    return tuple(a - c * b for a, b in zip(lam, beta))


def is_reduced_word(rs: RootSystem, word: Sequence[int]) -> bool:
    """A word is reduced iff each prefix w satisfies w(alpha_next) > 0."""
    for k, i in enumerate(word):
        rs.check_index(i)
        image = apply_word(rs, word[:k], rs.simple_roots[i - 1])
        if not is_positive_root(rs, image):
            return False
    return True


def weyl_dimension(rs: RootSystem, lam: Weight) -> int:
    """dim V_lam = prod over beta > 0 of <lam + rho, beta^vee> / <rho, beta^vee>."""
    lam_rho = weight_add(lam, rs.rho)
    dim = Fraction(1)
    for beta in rs.positive_roots:
        dim *= Fraction(coroot_pairing(rs, lam_rho, beta), coroot_pairing(rs, rs.rho, beta))
    if dim.denominator != 1:
        raise ConsistencyError(f"Weyl dimension of {lam} is not an integer: {dim}")
    return dim.numerator


def parse_cartan_type(text, rank=None):
    """Parse 'G2', 'g', 'A3' (with optional separate rank) into (type, rank).

    Raises:
        RootDataError: On malformed input or a rank mismatch
    """
    text = str(text).strip().upper()
    if not text or text[0] not in CARTAN_TYPES:
        raise RootDataError(f"Unknown Cartan type {text!r}")
    letter, digits = text[0], text[1:]
    parsed = None
    if digits:
        if not digits.isdigit():
            raise RootDataError(f"Malformed Cartan type {text!r}")
        parsed = int(digits)
    if parsed is not None and rank is not None and parsed != rank:
        raise RootDataError(f"Cartan type {text} disagrees with rank {rank}")
    final = parsed if parsed is not None else rank
    if final is None:
        raise RootDataError(f"Cartan type {text!r} needs a rank")
    return letter, final