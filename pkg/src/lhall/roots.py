"""Real-rootedness, root isolation and interleaving, exactly.

Everything here runs on integer coefficient lists (constant term first).
Root counts come from Sturm chains built with sign-corrected fraction-free
remainders, multiplicities from a squarefree decomposition, and comparisons
between roots of different polynomials from one shared list of isolating
intervals, so equality of two algebraic numbers is decided without any
numerical approximation.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import InternalCheckError, InvalidInputError
from .polys import Polynomial, int_coefficients


def _strip(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _canonical(poly):
    """Integer tuple with denominators cleared and positive content divided out.

    The sign of the leading coefficient is preserved.
    """
    if not isinstance(poly, Polynomial):
        poly = Polynomial(tuple(poly))
    return tuple(_primitive(_strip(int_coefficients(poly))))


def _primitive(c):
    g = 0
    for ci in c:
        g = gcd(g, ci)
    if g > 1:
        return [ci // g for ci in c]
    return list(c)


def _derivative(c):
    return _strip([i * ci for i, ci in enumerate(c)][1:])


def _sub(a, b):
    n = max(len(a), len(b))
    return _strip([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)
                   for i in range(n)])


def _mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _strip(out)


def _rem_signfixed(a, b):
    """Primitive remainder of a mod b carrying the sign of the true remainder.

    Fraction-free: every elimination step scales the running remainder by the
    leading coefficient of b, so the result equals lc(b)^steps times the true
    remainder; the accumulated sign is divided back out at the end.
    """
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    steps = 0
    while r and len(r) - 1 >= db:
        lead = r[-1]
        r = [ci * lb for ci in r]
        shift = len(r) - 1 - db
        for i, bi in enumerate(b):
            r[shift + i] -= lead * bi
        r = _strip(r)
        steps += 1
    if lb < 0 and steps % 2:
        r = [-ci for ci in r]
    return _primitive(r)


def _poly_gcd(a, b):
    a, b = _strip(a), _strip(b)
    while b:
        a, b = b, _rem_signfixed(a, b)
    a = _primitive(a)
    if a and a[-1] < 0:
        a = [-ci for ci in a]
    return a


def _div_exact(a, b):
    """Quotient a / b when b divides a; anything inexact is an internal bug."""
    a = [Fraction(ci) for ci in _strip(a)]
    b = _strip(b)
    if not b:
        raise InvalidInputError("division by the zero polynomial")
    out = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lb = b[-1]
    while len(a) >= len(b):
        k = len(a) - len(b)
        qc = a[-1] / lb
        out[k] = qc
        for i, bi in enumerate(b):
            a[k + i] -= qc * bi
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    if any(a):
        raise InternalCheckError("inexact polynomial division")
    ints = []
    for ci in out:
        if ci.denominator != 1:
            raise InternalCheckError("inexact polynomial division")
        ints.append(int(ci))
    return _strip(ints)


def _positive_leading(c):
    if c and c[-1] < 0:
        return [-ci for ci in c]
    return list(c)


def _squarefree_part(c):
    c = _positive_leading(_primitive(_strip(c)))
    if len(c) <= 1:
        return c
    g = _poly_gcd(c, _derivative(c))
    if len(g) == 1:
        return c
    return _div_exact(c, g)


def _yun(c):
    """Squarefree decomposition [(u, m)]: c is a constant times prod u^m."""
    c = _positive_leading(_primitive(_strip(c)))
    if len(c) <= 1:
        return []
    dc = _derivative(c)
    g = _poly_gcd(c, dc)
    if len(g) == 1:
        return [(tuple(c), 1)]
    b = _div_exact(c, g)
    d = _sub(_div_exact(dc, g), _derivative(b))
    out = []
    m = 1
    while len(b) > 1:
        u = _poly_gcd(b, d)
        if len(u) > 1:
            out.append((tuple(u), m))
        b = _div_exact(b, u)
        d = _sub(_div_exact(d, u), _derivative(b))
        m += 1
    return out


@lru_cache(maxsize=None)
def _yun_cached(c):
    return tuple(_yun(list(c)))


@lru_cache(maxsize=None)
def _sturm(c):
    """Sturm chain of c as a tuple of primitive integer tuples."""
    first = tuple(_primitive(_strip(c)))
    if not first:
        raise InvalidInputError("no Sturm chain for the zero polynomial")
    chain = [first]
    d = _derivative(first)
    if not d:
        return tuple(chain)
    chain.append(tuple(_primitive(d)))
    while True:
        r = _rem_signfixed(chain[-2], chain[-1])
        if not r:
            return tuple(chain)
        chain.append(tuple(-ci for ci in r))


def _sign_at(c, num, den):
    """Sign of c at num/den with den >= 1, via an integer Horner pass."""
    acc = 0
    dp = 1
    for coeff in reversed(c):
        acc = acc * num + coeff * dp
        dp *= den
    return (acc > 0) - (acc < 0)


def _variations(signs):
    out = 0
    prev = 0
    for sg in signs:
        if sg == 0:
            continue
        if prev and sg != prev:
            out += 1
        prev = sg
    return out


def _vars_at(chain, point):
    return _variations(_sign_at(c, point.numerator, point.denominator)
                       for c in chain)


def _vars_pinf(chain):
    return _variations((c[-1] > 0) - (c[-1] < 0) for c in chain)


def _vars_ninf(chain):
    return _variations(((c[-1] > 0) - (c[-1] < 0)) * (-1) ** (len(c) - 1)
                       for c in chain)


def _count_in(chain, lo, hi):
    """Distinct roots of chain[0] in (lo, hi); endpoints must not be roots."""
    return _vars_at(chain, lo) - _vars_at(chain, hi)


def _isolate(w):
    """Isolating intervals for the distinct real roots of squarefree w."""
    if len(w) <= 1:
        return ()
    chain = _sturm(tuple(w))
    total = _vars_ninf(chain) - _vars_pinf(chain)
    if total == 0:
        return ()
    bound = 1
    while True:
        lo, hi = Fraction(-bound), Fraction(bound)
        if (_sign_at(w, lo.numerator, lo.denominator) != 0
                and _sign_at(w, hi.numerator, hi.denominator) != 0
                and _count_in(chain, lo, hi) == total):
            break
        bound *= 2
    out = []
    stack = [(lo, hi, total)]
    while stack:
        a, b, cnt = stack.pop()
        if cnt == 0:
            continue
        if cnt == 1:
            out.append((a, b))
            continue
        delta = (b - a) / 2
        mid = a + delta
        while _sign_at(w, mid.numerator, mid.denominator) == 0:
            delta /= 2
            mid = a + delta
        left = _count_in(chain, a, mid)
        stack.append((a, mid, left))
        stack.append((mid, b, cnt - left))
    out.sort()
    return tuple(out)


def isolate_real_roots(poly):
    """Disjoint open rational intervals, one per distinct real root, ascending."""
    c = _canonical(poly)
    if not c:
        raise InvalidInputError("cannot isolate roots of the zero polynomial")
    return _isolate(_squarefree_part(list(c)))


@lru_cache(maxsize=None)
def _real_rooted(c):
    if len(c) <= 1:
        return True
    w = _squarefree_part(list(c))
    chain = _sturm(tuple(w))
    return _vars_ninf(chain) - _vars_pinf(chain) == len(w) - 1


def is_real_rooted(poly):
    """True when every complex root is real.  Constants and zero pass."""
    return _real_rooted(_canonical(poly))


def real_root_count(poly):
    """Number of distinct real roots."""
    c = _canonical(poly)
    if not c:
        raise InvalidInputError("the zero polynomial has every number as a root")
    w = _squarefree_part(list(c))
    if len(w) <= 1:
        return 0
    chain = _sturm(tuple(w))
    return _vars_ninf(chain) - _vars_pinf(chain)


def _aligned_roots(fk, gk):
    """Roots of f and g with multiplicity, as ascending shared interval indices.

    Indices point into one list of isolating intervals for the roots of f*g,
    so two roots are equal exactly when their indices agree.
    """
    intervals = _isolate(_squarefree_part(_mul(list(fk), list(gk))))
    out = []
    for c in (fk, gk):
        counts = {}
        for u, mult in _yun_cached(tuple(c)):
            chain = _sturm(u)
            for idx, (lo, hi) in enumerate(intervals):
                if _count_in(chain, lo, hi):
                    counts[idx] = counts.get(idx, 0) + mult
        roots = []
        for idx in sorted(counts):
            roots.extend([idx] * counts[idx])
        if len(roots) != len(c) - 1:
            raise InternalCheckError("root multiplicities do not add up")
        out.append(roots)
    return out


@lru_cache(maxsize=None)
def _interleaves(fk, gk):
    if not fk or not gk:
        return True
    for c in (fk, gk):
        if c[-1] < 0:
            raise InvalidInputError(
                "interleaving needs positive leading coefficients")
        if not _real_rooted(c):
            raise InvalidInputError("interleaving needs real-rooted polynomials")
    n, m = len(fk) - 1, len(gk) - 1
    if not m - 1 <= n <= m:
        return False
    if n == 0:
        return True
    roots_f, roots_g = _aligned_roots(fk, gk)
    a = roots_f[::-1]
    b = roots_g[::-1]
    for i in range(min(n, m)):
        if a[i] > b[i]:
            return False
    for i in range(min(n, m - 1)):
        if b[i + 1] > a[i]:
            return False
    return True


def interleaves(f, g):
    """Whether f interleaves g: descending roots satisfy
    alpha_i <= beta_i and beta_{i+1} <= alpha_i, and deg f is deg g or one less.

    The zero polynomial interleaves everything in both directions.  Any other
    argument must be real-rooted with a positive leading coefficient.
    """
    return _interleaves(_canonical(f), _canonical(g))


def interlacing_failure(polys):
    """First pair (i, j) with i < j where polys[i] fails to interleave polys[j].

    Returns None when the whole sequence is interlacing.
    """
    keys = [_canonical(f) for f in polys]
    for j in range(len(keys)):
        for i in range(j):
            if not _interleaves(keys[i], keys[j]):
                return (i, j)
    return None


def is_interlacing_sequence(polys):
    return interlacing_failure(polys) is None
