"""Dense univariate polynomials over exact rationals.

Coefficients are Fractions (ints are accepted and converted); floats are
rejected outright, since every computation in this package is exact.
Coefficient sequences run from the constant term up, and trailing zeros are
stripped, so the zero polynomial is the empty tuple and has degree -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, lcm

from .errors import InvalidInputError, InternalCheckError, NotPolynomialError


def _to_fraction(c):
    if isinstance(c, float):
        raise InvalidInputError("floating point coefficients are not allowed")
    try:
        return Fraction(c)
    except (TypeError, ValueError):
        raise InvalidInputError(f"{c!r} is not an exact rational") from None


@dataclass(frozen=True)
class Polynomial:
    coeffs: tuple = ()

    def __post_init__(self):
        cs = [_to_fraction(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def coefficient(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(tuple(self.coefficient(k) + other.coefficient(k)
                                for k in range(n)))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) + (-self)

    def __mul__(self, other):
        other = _as_poly(other)
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(tuple(out))

    __rmul__ = __mul__

    def __call__(self, value):
        value = _to_fraction(value)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)})"


def _as_poly(v):
    if isinstance(v, Polynomial):
        return v
    return Polynomial((_to_fraction(v),))


def monomial(k, coeff=1):
    """coeff * t^k."""
    if k < 0:
        raise InvalidInputError("monomial exponent must be nonnegative")
    return Polynomial((0,) * k + (_to_fraction(coeff),))


def is_palindromic(poly, center):
    """Whether t^center * poly(1/t) == poly(t).

    The zero polynomial is palindromic for every center.  A center below the
    degree leaves negative powers on the left side, so the answer is False.
    """
    if poly.is_zero():
        return True
    if center < poly.degree:
        return False
    return all(poly.coefficient(k) == poly.coefficient(center - k)
               for k in range(center + 1))


def gamma_vector(poly, d):
    """Coefficients gamma_k in poly = sum_k gamma_k t^k (1+t)^(d-2k).

    Requires poly palindromic with center d; k runs from 0 to d // 2.  The
    expansion is found by eliminating coefficients from the bottom up.
    """
    if not is_palindromic(poly, d):
        raise InvalidInputError("gamma vector needs a polynomial palindromic "
                                f"with center {d}")
    work = poly
    out = []
    for k in range(d // 2 + 1):
        g = work.coefficient(k)
        out.append(g)
        if g:
            work = work - monomial(k, g) * binomial_power(d - 2 * k)
    if not work.is_zero():
        raise InternalCheckError("gamma elimination left a remainder")
    return tuple(out)


def binomial_power(n):
    """(1 + t)^n."""
    if n < 0:
        raise InvalidInputError("negative power of (1 + t)")
    return Polynomial(tuple(comb(n, k) for k in range(n + 1)))


def compose_linear(poly, a, b):
    """poly(a*t + b), exactly."""
    inner = Polynomial((_to_fraction(b), _to_fraction(a)))
    acc = Polynomial()
    for c in reversed(poly.coeffs):
        acc = acc * inner + Polynomial((c,))
    return acc


def interpolate(points):
    """The unique polynomial of degree < len(points) through the given points.

    points is a sequence of (x, y) pairs with distinct x values.
    """
    xs = [_to_fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise InvalidInputError("interpolation nodes must be distinct")
    # divided differences, then Horner back into the monomial basis
    coefs = [_to_fraction(y) for _, y in points]
    n = len(coefs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coefs[i] = (coefs[i] - coefs[i - 1]) / (xs[i] - xs[i - j])
    acc = Polynomial()
    for i in range(n - 1, -1, -1):
        acc = acc * Polynomial((-xs[i], 1)) + Polynomial((coefs[i],))
    return acc


def hstar_from_counts(counts, p):
    """Numerator of sum_n counts[n] t^n written over (1 - t)^(p + 1).

    counts must hold the values for n = 0, ..., m with m >= p.  Entries of
    the numerator beyond degree p must vanish; a nonzero one means the counts
    do not come from a degree-p polynomial and NotPolynomialError is raised.
    """
    cs = [_to_fraction(c) for c in counts]
    m = len(cs) - 1
    if m < p:
        raise InvalidInputError(f"need counts up to n = {p}, got {m}")
    out = []
    for k in range(m + 1):
        a = sum((-1) ** j * comb(p + 1, j) * cs[k - j]
                for j in range(min(k, p + 1) + 1))
        out.append(a)
    for k in range(p + 1, m + 1):
        if out[k] != 0:
            raise NotPolynomialError(
                f"numerator has degree above {p}: coefficient {out[k]} at t^{k}")
    return Polynomial(tuple(out[:p + 1]))


def int_coefficients(poly):
    """Clear denominators: integer coefficient list with the same roots."""
    if poly.is_zero():
        return []
    scale = lcm(*(c.denominator for c in poly.coeffs))
    return [int(c * scale) for c in poly.coeffs]
