"""Colored linear extensions and their descent statistics.

An s-colored permutation is a pair tau = (pi, r) where pi permutes
{1, ..., p} and r grants each element x a color in {0, ..., s(x) - 1}.
Attached to a labeled poset we keep only those pi that are linear extensions.
Colors compare through the fractions r(x)/s(x); every comparison below runs
on cross-multiplied integers, never on floats.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .errors import InvalidInputError, ResourceLimitError
from .polys import Polynomial
from .posets import _cap, count_linear_extensions, linear_extensions, validate_smap

DEFAULT_COLORED_CAP = 5_000_000


@dataclass(frozen=True)
class ColoredPermutation:
    """A permutation with one color per element.

    colors is indexed by element, so colors[x - 1] is the color of element x,
    not of position x.
    """

    pi: tuple
    colors: tuple

    def __post_init__(self):
        object.__setattr__(self, "pi", tuple(self.pi))
        object.__setattr__(self, "colors", tuple(self.colors))
        p = len(self.pi)
        if sorted(self.pi) != list(range(1, p + 1)):
            raise InvalidInputError("pi must be a permutation of 1..p")
        if len(self.colors) != p:
            raise InvalidInputError("need exactly one color per element")
        for r in self.colors:
            if not isinstance(r, int) or isinstance(r, bool) or r < 0:
                raise InvalidInputError(f"color {r!r} is not a nonnegative "
                                        "integer")

    def color(self, x):
        return self.colors[x - 1]


@dataclass(frozen=True)
class DescentProfile:
    """The five descent sets of a colored permutation.

    Positions are 1-based: i in d1 means the step from position i to i + 1
    descends, judged on r(x)/s(x) with ties broken toward a descent exactly
    when the labels descend.  d2 may add position 0 (when the first letter
    has color zero), d and d4 may add position p (when the last letter has a
    positive color), and d3 is the [p-1]-variant computed from the shifted
    colors r + 1.
    """

    d1: frozenset
    d2: frozenset
    d3: frozenset
    d4: frozenset
    d: frozenset


def descent_profile(tau, s):
    """Compute all five descent sets of tau in one sweep."""
    pi, colors = tau.pi, tau.colors
    p = len(pi)
    if len(colors) != p or len(s) != p:
        raise InvalidInputError("pi, colors and s must all have length p")
    d1 = set()
    d3 = set()
    for i in range(p - 1):
        a, b = pi[i], pi[i + 1]
        ra, rb = colors[a - 1], colors[b - 1]
        sa, sb = s[a - 1], s[b - 1]
        tie = a > b
        lhs, rhs = ra * sb, rb * sa
        if lhs > rhs or (tie and lhs == rhs):
            d1.add(i + 1)
        lhs, rhs = lhs + sb, rhs + sa
        if lhs > rhs or (tie and lhs == rhs):
            d3.add(i + 1)
    d2 = set(d1)
    d4 = set(d1)
    d = set(d1)
    if p:
        if colors[pi[0] - 1] == 0:
            d2.add(0)
            d4.add(0)
        if colors[pi[-1] - 1] > 0:
            d.add(p)
            d4.add(p)
    return DescentProfile(frozenset(d1), frozenset(d2), frozenset(d3),
                          frozenset(d4), frozenset(d))


def _precheck(P, s, max_count):
    limit = _cap(max_count, "LHALL_MAX_COLORED", DEFAULT_COLORED_CAP)
    total = count_linear_extensions(P) * prod(s)
    if total > limit:
        raise ResourceLimitError(
            f"{total} colored extensions exceed the cap {limit}")
    return total


def colored_extensions(P, s, max_count=None):
    """Yield the colored linear extensions of (P, s) in canonical order.

    Order: pi lexicographically, then the color vector (r(1), ..., r(p))
    lexicographically.  The total count is checked against a cap before any
    work starts (LHALL_MAX_COLORED, default DEFAULT_COLORED_CAP).
    """
    s = validate_smap(P, s)
    _precheck(P, s, max_count)
    ranges = [range(v) for v in s]
    for pi in linear_extensions(P):
        for colors in itertools.product(*ranges):
            yield ColoredPermutation(pi, colors)


def statistics(tau, s):
    """The descent statistics of tau as a dict.

    des is |D|, comaj sums p - i over i in D, and lhp adds |r| to the
    s-weighted comajor index.  fmaj = |r| + k * comaj only makes sense for
    constant s = (k, ..., k) and is present exactly in that case.
    """
    p = len(tau.pi)
    prof = descent_profile(tau, s)
    comaj = sum(p - i for i in prof.d)
    rsum = sum(tau.colors)
    lhp = rsum + sum(sum(s[x - 1] for x in tau.pi[i:]) for i in prof.d)
    out = {"des": len(prof.d), "comaj": comaj, "lhp": lhp}
    if len(set(s)) <= 1:
        out["fmaj"] = rsum + (s[0] if s else 0) * comaj
    return out


def flag_major_index(tau, s):
    """fmaj for constant s = (k, ..., k); rejects non-constant s."""
    if len(set(s)) > 1:
        raise InvalidInputError("fmaj is only defined for a constant color count")
    if not tau.pi:
        return 0
    prof = descent_profile(tau, s)
    comaj = sum(len(tau.pi) - i for i in prof.d)
    return sum(tau.colors) + s[0] * comaj


def _descent_histogram(pi, s, hist):
    """Add the |D| distribution over all colorings of a fixed pi to hist."""
    p = len(pi)
    if p == 0:
        hist[0] += 1
        return
    spos = [s[x - 1] for x in pi]
    ties = [pi[i] > pi[i + 1] for i in range(p - 1)]
    for rpos in itertools.product(*[range(v) for v in spos]):
        d = 0
        for i in range(p - 1):
            lhs = rpos[i] * spos[i + 1]
            rhs = rpos[i + 1] * spos[i]
            if lhs > rhs or (ties[i] and lhs == rhs):
                d += 1
        if rpos[-1]:
            d += 1
        hist[d] += 1


def eulerian_polynomial(P, s, max_count=None):
    """Generating polynomial of the descent number over colored extensions."""
    s = validate_smap(P, s)
    _precheck(P, s, max_count)
    hist = [0] * (P.p + 2)
    for pi in linear_extensions(P):
        _descent_histogram(pi, s, hist)
    return Polynomial(tuple(hist))


def x_order(P, s):
    """All pairs (k, x) with 0 <= k < s(x), ordered by (k/s(x), x)."""
    s = validate_smap(P, s)
    pairs = [(k, x) for x in P.elements for k in range(s[x - 1])]
    pairs.sort(key=lambda g: (Fraction(g[0], s[g[1] - 1]), g[1]))
    return tuple(pairs)


def refined_eulerian(P, s, max_count=None):
    """Split the Eulerian polynomial by gamma = (r(pi_1), pi_1).

    Returns a dict keyed by every gamma in x_order(P, s); values sum to
    eulerian_polynomial(P, s).  Keys whose element is never first in a linear
    extension carry the zero polynomial.
    """
    s = validate_smap(P, s)
    _precheck(P, s, max_count)
    p = P.p
    if p == 0:
        return {}
    buckets = {g: [0] * (p + 2) for g in x_order(P, s)}
    for pi in linear_extensions(P):
        spos = [s[x - 1] for x in pi]
        ties = [pi[i] > pi[i + 1] for i in range(p - 1)]
        for rpos in itertools.product(*[range(v) for v in spos]):
            d = 0
            for i in range(p - 1):
                lhs = rpos[i] * spos[i + 1]
                rhs = rpos[i + 1] * spos[i]
                if lhs > rhs or (ties[i] and lhs == rhs):
                    d += 1
            if rpos[-1]:
                d += 1
            buckets[(rpos[0], pi[0])][d] += 1
    return {g: Polynomial(tuple(h)) for g, h in buckets.items()}
