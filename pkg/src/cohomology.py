#!/usr/bin/env python3
"""
Polynomial model of H*(G/B) in the simple-root variables.

This module provides:
- PolyClass, a thin wrapper around a sympy Poly over QQ in a1..an
- The BGG divided differences d_j(f) = (f - s_j f) / alpha_j
- Schubert class representatives, starting from (1/|W|) prod over beta > 0 of beta
- Coefficient extraction in the Schubert basis
- Chevalley's formula lambda . [X_w] computed through the polynomial model
"""
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable

import sympy

from src.rootdata import RootSystem, Weight
from src.weyl import WeylElt, format_word, generate_group
from utils.error_utils import ConsistencyError
from utils.json_utils import fraction_to_str, str_to_fraction


def _to_fraction(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


class PolyClass:
    """A polynomial in the simple roots with rational coefficients."""

    def __init__(self, poly: sympy.Poly):
        self.poly = poly

    @property
    def gens(self):
        return self.poly.gens

    def terms(self) -> Dict[tuple, Fraction]:
        """exponent vector -> coefficient."""
        if self.poly.is_zero:
            return {}
        return {monom: _to_fraction(coeff) for monom, coeff in self.poly.terms()}

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if self.poly.is_zero:
            return -1
        return self.poly.total_degree()

    def constant_term(self) -> Fraction:
        return self.terms().get((0,) * len(self.gens), Fraction(0))

    def homogeneous_components(self) -> Dict[int, 'PolyClass']:
        parts: Dict[int, Dict[tuple, Fraction]] = {}
        for monom, coeff in self.terms().items():
            parts.setdefault(sum(monom), {})[monom] = coeff
        return {
            degree: PolyClass(sympy.Poly.from_dict(
                {m: sympy.Rational(c.numerator, c.denominator) for m, c in terms.items()},
                *self.gens, domain=sympy.QQ,
            ))
            for degree, terms in parts.items()
        }

    def is_zero(self) -> bool:
        return self.poly.is_zero

    def __add__(self, other):
        return PolyClass(self.poly + other.poly)

    def __sub__(self, other):
        return PolyClass(self.poly - other.poly)

    def __mul__(self, other):
        if isinstance(other, PolyClass):
            return PolyClass(self.poly * other.poly)
        return PolyClass(self.poly * sympy.Rational(other))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, PolyClass):
            return NotImplemented
        return (self.poly - other.poly).is_zero

    __hash__ = None

    def to_json(self):
        return [
            {'exponent': list(monom), 'coeff': fraction_to_str(coeff)}
            for monom, coeff in sorted(self.terms().items(), reverse=True)
        ]

    def __repr__(self):
        return f"PolyClass({self.poly.as_expr()})"


class SchubertModel:
    """BGG operators and Schubert representatives for one root system."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.group = generate_group(rs)
        self.symbols = sympy.symbols(f"a1:{rs.rank + 1}")
        self._reps: Dict[WeylElt, PolyClass] = {}
        # s_j(alpha_i) = alpha_i - <alpha_i, alpha_j^vee> alpha_j
        self._reflections = []
        for j in range(rs.rank):
            self._reflections.append({
                self.symbols[i]: self.symbols[i] - rs.cartan_matrix[j][i] * self.symbols[j]
                for i in range(rs.rank)
            })

    def make(self, expr) -> PolyClass:
        return PolyClass(sympy.Poly(expr, *self.symbols, domain=sympy.QQ))

    def from_json(self, data) -> PolyClass:
        return PolyClass(sympy.Poly.from_dict(
            {tuple(entry['exponent']): sympy.Rational(str(str_to_fraction(str(entry['coeff']))))
             for entry in data} or {(0,) * self.rs.rank: 0},
            *self.symbols, domain=sympy.QQ,
        ))

    def root_form(self, coords: Iterable) -> PolyClass:
        """sum_i c_i alpha_i."""
        return self.make(sum(sympy.Rational(c) * a for c, a in zip(coords, self.symbols)))

    def linear_form(self, lam: Weight) -> PolyClass:
        """lambda written in the simple roots, through the inverse Cartan matrix."""
        self.rs.check_weight(lam)
        cartan = sympy.Matrix(self.rs.cartan_matrix)
        # omega-coordinates of alpha_j are column j of the Cartan matrix
        coords = cartan.inv() * sympy.Matrix([sympy.Rational(str(Fraction(a))) for a in lam])
        return self.root_form(list(coords))

    def weyl_act(self, j: int, f: PolyClass) -> PolyClass:
        self.rs.check_index(j)
        return self.make(f.poly.as_expr().xreplace(self._reflections[j - 1]))

    def bgg_partial(self, j: int, f: PolyClass) -> PolyClass:
        """d_j(f) = (f - s_j f) / alpha_j.

        Raises:
            ConsistencyError: If the division leaves a remainder
        """
        numerator = (f - self.weyl_act(j, f)).poly
        divisor = sympy.Poly(self.symbols[j - 1], *self.symbols, domain=sympy.QQ)
        quotient, remainder = sympy.div(numerator, divisor)
        if not remainder.is_zero:
            raise ConsistencyError(f"d_{j} left remainder {remainder.as_expr()}")
        return PolyClass(quotient)

    def bgg_word(self, word: Iterable[int], f: PolyClass) -> PolyClass:
        """Apply d_{i1}, then d_{i2}, ...; the first letter acts first."""
        for j in word:
            f = self.bgg_partial(j, f)
        return f

    def top_class(self) -> PolyClass:
        """(1/|W|) prod over beta > 0 of beta, the class of a point."""
        product = sympy.Integer(1)
        for coords in self.rs.root_coords:
            product *= sum(c * a for c, a in zip(coords, self.symbols))
        return self.make(product / len(self.group))

    def schubert_rep(self, w: WeylElt) -> PolyClass:
        """[X_w], of degree N - l(w)."""
        if w not in self._reps:
            if w.length == 0:
                self._reps[w] = self.top_class()
            else:
                parent = self.group.from_word(w.word[:-1])
                self._reps[w] = self.bgg_partial(w.word[-1], self.schubert_rep(parent))
        return self._reps[w]

    def expand_in_schubert_basis(self, f: PolyClass) -> Dict[WeylElt, Fraction]:
        """Coefficients of f in the basis {[X_w]}.

        For a homogeneous part of degree d only the x with l(x) = N - d can
        occur; c_x is the constant term of d applied along x^{-1} w0.
        """
        N = self.group.longest.length
        out = {}
        for degree, part in f.homogeneous_components().items():
            if degree > N:
                raise ConsistencyError(f"Degree {degree} exceeds dim G/B = {N}")
            for x in self.group:
                if x.length != N - degree:
                    continue
                u = self.group.multiply(self.group.inverse(x), self.group.longest)
                coeff = self.bgg_word(u.word, part).constant_term()
                if coeff:
                    out[x] = coeff
        return out

    def check_round_trip(self, elements: Iterable[WeylElt] = None):
        """Extraction applied to [X_v] must give the indicator of v.

        Raises:
            ConsistencyError: On the first element where it does not
        """
        if self.schubert_rep(self.group.longest) != self.make(1):
            raise ConsistencyError("[X_w0] is not 1")
        for v in (elements if elements is not None else self.group):
            coeffs = self.expand_in_schubert_basis(self.schubert_rep(v))
            if coeffs != {v: 1}:
                raise ConsistencyError(f"Extraction of [X_{format_word(v.word)}] gave {coeffs}")

    def classical_chevalley(self, lam: Weight, w: WeylElt) -> Dict[WeylElt, Fraction]:
        """lambda . [X_w] in the Schubert basis."""
        if w.length == 0:
            # [X_e] is the point class; its product with a degree-one class is 0
            return {}
        return self.expand_in_schubert_basis(self.linear_form(lam) * self.schubert_rep(w))


@lru_cache(maxsize=None)
def get_schubert_model(rs: RootSystem) -> SchubertModel:
    return SchubertModel(rs)


def bgg_partial(rs: RootSystem, j: int, f: PolyClass) -> PolyClass:
    return get_schubert_model(rs).bgg_partial(j, f)


def schubert_rep(rs: RootSystem, w: WeylElt) -> PolyClass:
    return get_schubert_model(rs).schubert_rep(w)


def expand_in_schubert_basis(rs: RootSystem, f: PolyClass) -> Dict[WeylElt, Fraction]:
    return get_schubert_model(rs).expand_in_schubert_basis(f)


def classical_chevalley(rs: RootSystem, lam: Weight, w) -> Dict[WeylElt, Fraction]:
    model = get_schubert_model(rs)
    if not isinstance(w, WeylElt):
        w = model.group.from_word(tuple(w))
    return model.classical_chevalley(tuple(lam), w)
