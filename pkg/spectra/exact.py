"""
Exact characteristic polynomials and exact sign decisions at sqrt(m).

Polynomials are carried as coefficient lists. CharPoly stores them
highest degree first; the private helpers below work lowest degree first
over Fraction.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

import numpy as np

from graphs.core import Graph, GraphError, SizeBudgetError

logger = logging.getLogger(__name__)

EXACT_MAX_ORDER = 24

Number = Union[int, Fraction]
Poly = List[Fraction]


@dataclass(frozen=True)
class CharPoly:
    """det(xI - M), monic, coefficients highest degree first"""
    coeffs: Tuple[Number, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def evaluate(self, x: float) -> float:
        return float(np.polyval([float(c) for c in self.coeffs], x))

    def exact_at(self, x: Number) -> Fraction:
        acc = Fraction(0)
        for c in self.coeffs:
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            k = self.degree - i
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            coef = str(abs(c)) if (abs(c) != 1 or k == 0) else ""
            terms.append(("-" if c < 0 else "+") + coef + mono)
        text = "".join(terms) or "0"
        return text[1:] if text.startswith("+") else text


@dataclass(frozen=True)
class SqrtSign:
    """p(sqrt(m)) = a_int + b_int * sqrt(m), up to a positive common factor"""
    a_int: int
    b_int: int
    m: int
    sign: int


@dataclass(frozen=True)
class EigenCount:
    above: int
    is_eigenvalue: bool


def _normalize(c: Fraction) -> Number:
    return c.numerator if c.denominator == 1 else c


def matrix_char_poly(matrix: Sequence[Sequence[Number]]) -> CharPoly:
    """Faddeev-LeVerrier recurrence in exact arithmetic"""
    a = np.array([[Fraction(x) for x in row] for row in matrix], dtype=object)
    n = a.shape[0]
    identity = np.array([[Fraction(int(i == j)) for j in range(n)] for i in range(n)], dtype=object)
    m = identity.copy()
    coeffs: List[Fraction] = [Fraction(1)]
    for k in range(1, n + 1):
        am = a.dot(m)
        c = -sum(am[i, i] for i in range(n)) / k
        coeffs.append(c)
        m = am + identity * c
    return CharPoly(tuple(_normalize(c) for c in coeffs))


def char_poly(G: Graph, max_order: int = EXACT_MAX_ORDER) -> CharPoly:
    if G.n > max_order:
        raise SizeBudgetError(f"exact characteristic polynomial limited to n <= {max_order}, got {G.n}")
    return matrix_char_poly(G.adjacency_matrix(dtype=int).tolist())


# -- sign of A + B sqrt(m) ----------------------------------------------------

def _sign(x) -> int:
    return (x > 0) - (x < 0)


def sign_of_sqrt_sum(a: Number, b: Number, m: int) -> int:
    """Exact sign of a + b*sqrt(m) for m >= 0"""
    sa, sb = _sign(a), _sign(b)
    if sb == 0 or m == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    diff = a * a - b * b * m
    return sa * _sign(diff)


def split_at_sqrt(coeffs_low_first: Sequence[Number], m: int) -> Tuple[Fraction, Fraction]:
    """(a, b) with p(sqrt(m)) = a + b*sqrt(m), coefficients lowest degree first"""
    root = math.isqrt(m)
    if root * root == m:
        value = sum(Fraction(c) * root ** k for k, c in enumerate(coeffs_low_first))
        return value, Fraction(0)
    a = sum(Fraction(c) * m ** (k // 2) for k, c in enumerate(coeffs_low_first) if k % 2 == 0)
    b = sum(Fraction(c) * m ** (k // 2) for k, c in enumerate(coeffs_low_first) if k % 2 == 1)
    return Fraction(a), Fraction(b)


def sign_at_sqrt(p: CharPoly, m: int) -> SqrtSign:
    """Exact sign of p(sqrt(m)), no floating point involved"""
    if m <= 0:
        raise GraphError(f"sign_at_sqrt needs a positive integer m, got {m}")
    a, b = split_at_sqrt(list(reversed(p.coeffs)), m)
    scale = math.lcm(a.denominator, b.denominator)
    a_int, b_int = int(a * scale), int(b * scale)
    return SqrtSign(a_int, b_int, m, sign_of_sqrt_sum(a_int, b_int, m))


# -- polynomial helpers (lowest degree first) ----------------------------------

def _trim(p: Poly) -> Poly:
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def _deriv(p: Poly) -> Poly:
    return _trim([k * p[k] for k in range(1, len(p))])


def _divmod(num: Poly, den: Poly) -> Tuple[Poly, Poly]:
    num, den = _trim(list(num)), _trim(list(den))
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(0, len(num) - len(den) + 1)
    while len(num) >= len(den) and num:
        shift = len(num) - len(den)
        factor = num[-1] / den[-1]
        quot[shift] = factor
        for i, d in enumerate(den):
            num[i + shift] -= factor * d
        num = _trim(num[:-1] if num[-1] == 0 else num)
    return _trim(quot), num


def _monic(p: Poly) -> Poly:
    return [c / p[-1] for c in p]


def _gcd(a: Poly, b: Poly) -> Poly:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        _, r = _divmod(a, b)
        a, b = b, r
    return _monic(a) if a else a


def _exact_div(a: Poly, b: Poly) -> Poly:
    q, r = _divmod(a, b)
    if r:
        raise ArithmeticError("polynomial division left a remainder")
    return q


def square_free_factors(p: CharPoly) -> List[Tuple[int, Poly]]:
    """Yun's decomposition p = prod q_i^i; returns (i, q_i) with deg q_i > 0"""
    f = [Fraction(c) for c in reversed(p.coeffs)]
    f_prime = _deriv(f)
    if not f_prime:
        return []
    a0 = _gcd(f, f_prime)
    b = _exact_div(f, a0)
    c = _exact_div(f_prime, a0)
    d = _trim([ci - bi for ci, bi in _zip_longest(c, _deriv(b))])
    factors = []
    i = 1
    while len(b) > 1:
        a = _gcd(b, d) if d else _monic(b)
        if len(a) > 1:
            factors.append((i, a))
        b = _exact_div(b, a)
        c = _exact_div(d, a) if d else []
        d = _trim([ci - bi for ci, bi in _zip_longest(c, _deriv(b))])
        i += 1
    return factors


def _zip_longest(x: Poly, y: Poly):
    size = max(len(x), len(y))
    return zip(list(x) + [Fraction(0)] * (size - len(x)), list(y) + [Fraction(0)] * (size - len(y)))


def sturm_sequence(q: Poly) -> List[Poly]:
    chain = [_trim(list(q)), _deriv(q)]
    while chain[-1]:
        _, r = _divmod(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return [p for p in chain if p]


def _sign_changes(signs: Sequence[int]) -> int:
    nonzero = [s for s in signs if s != 0]
    return sum(1 for x, y in zip(nonzero, nonzero[1:]) if x != y)


def _distinct_roots_above_sqrt(q: Poly, m: int) -> int:
    """Distinct real roots of square-free q in (sqrt(m), +inf)"""
    chain = sturm_sequence(q)
    at_sqrt = [sign_of_sqrt_sum(*split_at_sqrt(p, m), m) for p in chain]
    at_inf = [_sign(p[-1]) for p in chain]
    return _sign_changes(at_sqrt) - _sign_changes(at_inf)


def count_poly_roots_above(p: CharPoly, m: int) -> EigenCount:
    above = sum(mult * _distinct_roots_above_sqrt(q, m) for mult, q in square_free_factors(p))
    return EigenCount(above, sign_at_sqrt(p, m).sign == 0)


def count_eigs_above(G: Graph, m: int, max_order: int = EXACT_MAX_ORDER) -> EigenCount:
    """Adjacency eigenvalues strictly above sqrt(m), counted with multiplicity"""
    if m <= 0:
        raise GraphError(f"count_eigs_above needs a positive integer m, got {m}")
    return count_poly_roots_above(char_poly(G, max_order), m)


def real_roots(p: CharPoly) -> List[float]:
    """Roots of a polynomial whose roots are known to be real, descending.

    Each square-free factor is solved with numpy and polished by Newton
    steps, so repeated roots keep full precision.
    """
    roots: List[float] = []
    for mult, q in square_free_factors(p):
        coeffs = [float(c) for c in reversed(q)]
        deriv = np.polyder(coeffs)
        for z in np.roots(coeffs):
            x = float(z.real)
            for _ in range(50):
                slope = np.polyval(deriv, x)
                if slope == 0:
                    break
                step = np.polyval(coeffs, x) / slope
                x -= step
                if abs(step) < 1e-15 * max(1.0, abs(x)):
                    break
            roots.extend([x] * mult)
    return sorted(roots, reverse=True)
