#!/usr/bin/env python3
"""
Laurent polynomials in the weight lattice and Demazure operators.

This module provides:
- LaurentPoly: finite Q-linear combinations of e^mu
- The Weyl group action and the augmentation epsilon
- The Demazure operators T_j and the operators L_j, in closed form
- Point classes, Demazure characters and Schubert classes of K(G/B)

Monomials e^mu are keyed by weight tuples; coefficients are Fractions.
"""
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Iterator, Sequence, Tuple

from src.rootdata import (
    RootSystem, Weight, check_dominant_integral, is_reduced_word, weight_add, weight_to_json,
)
from src.weyl import format_word, generate_group
from utils.error_utils import NotReducedError, RootDataError
from utils.json_utils import fraction_to_str, str_to_fraction

MAX_DIVISION_STEPS = 10 ** 6


class LaurentPoly:
    """An element of Q[Lambda]."""

    __slots__ = ('_terms',)

    def __init__(self, terms=None):
        self._terms: Dict[Weight, Fraction] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for weight, coeff in items:
                self._add_term(tuple(weight), coeff)

    def _add_term(self, weight, coeff):
        value = self._terms.get(weight, 0) + Fraction(coeff)
        if value:
            self._terms[weight] = value
        else:
            self._terms.pop(weight, None)

    @classmethod
    def monomial(cls, weight: Weight, coeff=1) -> 'LaurentPoly':
        return cls({tuple(weight): coeff})

    @classmethod
    def one(cls, rank: int) -> 'LaurentPoly':
        return cls.monomial((0,) * rank)

    @classmethod
    def zero(cls) -> 'LaurentPoly':
        return cls()

    def terms(self) -> Dict[Weight, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Weight, Fraction]]:
        return iter(sorted(self._terms.items(), reverse=True))

    def coefficient(self, weight: Weight) -> Fraction:
        return self._terms.get(tuple(weight), Fraction(0))

    def weights(self):
        return sorted(self._terms, reverse=True)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    __hash__ = None

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = LaurentPoly(self._terms)
        for weight, coeff in other._terms.items():
            out._add_term(weight, coeff)
        return out

    def __neg__(self):
        return LaurentPoly({w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            out = LaurentPoly()
            for w1, c1 in self._terms.items():
                for w2, c2 in other._terms.items():
                    out._add_term(tuple(a + b for a, b in zip(w1, w2)), c1 * c2)
            return out
        if isinstance(other, (int, Fraction)):
            return LaurentPoly({w: c * other for w, c in self._terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def shift(self, weight: Weight) -> 'LaurentPoly':
        """e^weight * self."""
        return LaurentPoly({tuple(a + b for a, b in zip(w, weight)): c for w, c in self._terms.items()})

    def evaluate(self, point: Sequence) -> Fraction:
        """Substitute e^mu -> prod_i x_i^mu_i at a point of nonzero rationals."""
        total = Fraction(0)
        for weight, coeff in self._terms.items():
            value = Fraction(coeff)
            for x, k in zip(point, weight):
                value *= Fraction(x) ** int(k)
            total += value
        return total

    def to_json(self):
        """[{"weight": [...], "coeff": "p/q"}, ...] sorted by weight, descending."""
        return [
            {'weight': weight_to_json(weight), 'coeff': fraction_to_str(coeff)}
            for weight, coeff in self.items()
        ]

    @classmethod
    def from_json(cls, data) -> 'LaurentPoly':
        return cls(
            (tuple(int(a) for a in entry['weight']), str_to_fraction(str(entry['coeff'])))
            for entry in data
        )

    def __repr__(self):
        if not self._terms:
            return 'LaurentPoly(0)'
        parts = []
        for weight, coeff in self.items():
            parts.append(f"{fraction_to_str(coeff)}*e^{list(weight)}")
        return 'LaurentPoly(' + ' + '.join(parts) + ')'


def _sum_monomial_images(f: LaurentPoly, image) -> LaurentPoly:
    out = LaurentPoly()
    for weight, coeff in f._terms.items():
        for w2, c2 in image(weight):
            out._add_term(w2, coeff * c2)
    return out


def weyl_act(rs: RootSystem, w, f: LaurentPoly) -> LaurentPoly:
    """w . sum c_mu e^mu = sum c_mu e^{w mu}."""
    group = generate_group(rs)
    return LaurentPoly((group.act(w, weight), coeff) for weight, coeff in f._terms.items())


def epsilon(f: LaurentPoly) -> Fraction:
    """Augmentation: sum of coefficients (e^mu -> 1)."""
    return sum(f._terms.values(), Fraction(0))


@lru_cache(maxsize=None)
def _string_terms(rs: RootSystem, j: int, mu: Weight, shift: int) -> Tuple[Tuple[Weight, int], ...]:
    """Closed form of T_j (shift=0) or L_j (shift=1) on e^mu.

    With k = <mu, alpha_j^vee> - shift:
      k >= 0:  sum_{m=0}^{k} e^{mu - m alpha_j}
      k == -1: 0
      k <= -2: -sum_{m=1}^{-k-1} e^{mu + m alpha_j}
    """
    alpha = rs.simple_roots[j - 1]
    k = Fraction(mu[j - 1]) - shift
    if k.denominator != 1:
        raise RootDataError(f"Weight {mu} is not integral")
    k = int(k)
    if k >= 0:
        return tuple((tuple(a - m * b for a, b in zip(mu, alpha)), 1) for m in range(k + 1))
    if k == -1:
        return ()
    return tuple((tuple(a + m * b for a, b in zip(mu, alpha)), -1) for m in range(1, -k))


def demazure_T(rs: RootSystem, j: int, f: LaurentPoly) -> LaurentPoly:
    """T_j f = (f - e^{-alpha_j} s_j f) / (1 - e^{-alpha_j})."""
    rs.check_index(j)
    return _sum_monomial_images(f, lambda mu: _string_terms(rs, j, mu, 0))


def demazure_L(rs: RootSystem, j: int, f: LaurentPoly) -> LaurentPoly:
    """L_j f = (f - s_j f) / (1 - e^{-alpha_j})."""
    rs.check_index(j)
    return _sum_monomial_images(f, lambda mu: _string_terms(rs, j, mu, 1))


def demazure_T_word(rs: RootSystem, word: Sequence[int], f: LaurentPoly) -> LaurentPoly:
    """T_{i1} T_{i2} ... T_{ip} f; the rightmost operator acts first.

    Raises:
        NotReducedError: If word is not reduced
    """
    word = tuple(word)
    if not is_reduced_word(rs, word):
        raise NotReducedError(f"{format_word(word)} is not reduced")
    for j in reversed(word):
        f = demazure_T(rs, j, f)
    return f


def demazure_T_elt(rs: RootSystem, w, f: LaurentPoly) -> LaurentPoly:
    """T_w f, computed along the stored reduced word of w."""
    for j in reversed(w.word):
        f = demazure_T(rs, j, f)
    return f


def _positive_root_product(rs: RootSystem, J: Iterable[int]) -> LaurentPoly:
    """prod over beta > 0 with beta outside Phi_J of (1 - e^{-beta})."""
    J = frozenset(J)
    zero = (0,) * rs.rank
    product = LaurentPoly.monomial(zero)
    for beta, coords in zip(rs.positive_roots, rs.root_coords):
        if all(c == 0 or (i + 1) in J for i, c in enumerate(coords)):
            continue
        product = product * LaurentPoly({zero: 1, tuple(-b for b in beta): -1})
    return product


def point_class(rs: RootSystem, J: Iterable[int] = ()) -> LaurentPoly:
    """Class of the T-fixed point in K(G/P_J) under the Borel presentation.

    (|W_J| / |W|) * prod over beta > 0, beta not in Phi_J of (1 - e^{-beta}).
    """
    J = frozenset(J)
    for j in J:
        rs.check_index(j)
    return _point_class(rs, J)


@lru_cache(maxsize=None)
def _point_class(rs: RootSystem, J: frozenset) -> LaurentPoly:
    group = generate_group(rs)
    factor = Fraction(len(group.parabolic_subgroup(J)), len(group))
    return _positive_root_product(rs, J) * factor


@lru_cache(maxsize=None)
def schubert_class(rs: RootSystem, w) -> LaurentPoly:
    """[O_{X_w}] = T_{w^{-1}} applied to the point class.

    Built along the stored word of w: [O_{X_{w s_j}}] = T_j [O_{X_w}] when w s_j > w.
    """
    if w.length == 0:
        return point_class(rs)
    parent = generate_group(rs).from_word(w.word[:-1])
    return demazure_T(rs, w.word[-1], schubert_class(rs, parent))


def demazure_character(rs: RootSystem, lam: Weight) -> LaurentPoly:
    """char V_lam = T_{w0}(e^lam)."""
    lam = check_dominant_integral(rs, lam)
    group = generate_group(rs)
    return demazure_T_elt(rs, group.longest, LaurentPoly.monomial(lam))


def alternant(rs: RootSystem, mu: Weight) -> LaurentPoly:
    """sum over w in W of sign(w) e^{w mu}."""
    group = generate_group(rs)
    return LaurentPoly((group.act(w, mu), group.sign(w)) for w in group)


def weyl_character(rs: RootSystem, lam: Weight) -> LaurentPoly:
    """char V_lam by the Weyl character formula, by exact division of alternants."""
    numerator = alternant(rs, weight_add(lam, rs.rho))
    denominator = alternant(rs, rs.rho)
    return divide_exact(numerator, denominator)


def divide_exact(numerator: LaurentPoly, denominator: LaurentPoly) -> LaurentPoly:
    """Exact division in Q[Lambda] by repeatedly cancelling leading terms.

    Raises:
        RootDataError: If the denominator is zero or does not divide
    """
    if denominator.is_zero():
        raise RootDataError("Division by the zero Laurent polynomial")
    # Lex order on weights is translation invariant, so leading terms multiply
    lead_w, lead_c = max(denominator._terms.items())
    if numerator.is_zero():
        return LaurentPoly()
    floor = tuple(a - b for a, b in zip(min(numerator._terms), min(denominator._terms)))
    remainder = LaurentPoly(numerator._terms)
    quotient = LaurentPoly()
    steps = 0
    while remainder:
        steps += 1
        if steps > MAX_DIVISION_STEPS:
            raise RootDataError("Laurent polynomial division does not terminate")
        w, c = max(remainder._terms.items())
        shift = tuple(a - b for a, b in zip(w, lead_w))
        if shift < floor:
            raise RootDataError("Laurent polynomial division is not exact")
        term = LaurentPoly.monomial(shift, c / lead_c)
        quotient = quotient + term
        remainder = remainder - term * denominator
    return quotient
