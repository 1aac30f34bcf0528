"""Sturm-chain root isolation, real-rootedness and interleaving."""

import pytest
import sympy
from hypothesis import assume, given, settings, strategies as st

from lhall import (InvalidInputError, Polynomial, interlacing_failure,
                   interleaves, is_interlacing_sequence, is_real_rooted,
                   isolate_real_roots, real_root_count)
from oracles import classical_eulerian

_t = sympy.Symbol("t")


def _sympy_real_roots(coeffs):
    """Real roots with multiplicity, as exact sympy numbers."""
    expr = sum(int(c) * _t ** k for k, c in enumerate(coeffs))
    return sympy.Poly(expr, _t).real_roots()


def test_is_real_rooted_hand_cases():
    assert is_real_rooted(Polynomial(()))
    assert is_real_rooted(Polynomial((5,)))
    assert is_real_rooted(Polynomial((3, 1)))
    assert is_real_rooted(Polynomial((1, 2, 1)))
    assert is_real_rooted(Polynomial((1, 6, 1)))
    assert not is_real_rooted(Polynomial((1, 1, 1)))
    assert not is_real_rooted(Polynomial((1, 0, 0, 0, 1)))
    assert is_real_rooted(Polynomial((0, 0, 1)))          # double root at 0


def test_real_root_count_and_isolation_hand_cases():
    f = Polynomial((-2, 0, 1))                            # roots at +-sqrt(2)
    assert real_root_count(f) == 2
    intervals = isolate_real_roots(f)
    assert len(intervals) == 2
    assert all(lo < hi for lo, hi in intervals)
    with pytest.raises(InvalidInputError):
        isolate_real_roots(Polynomial(()))
    with pytest.raises(InvalidInputError):
        real_root_count(Polynomial(()))
    assert real_root_count(Polynomial((7,))) == 0


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(-8, 8), min_size=1, max_size=6))
def test_real_roots_match_sympy(cs):
    f = Polynomial(tuple(cs))
    assume(not f.is_zero())
    roots = _sympy_real_roots(f.coeffs)
    assert real_root_count(f) == len(set(roots))
    assert is_real_rooted(f) == (len(roots) == f.degree)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-8, 8), min_size=2, max_size=6))
def test_isolating_intervals_match_sympy(cs):
    f = Polynomial(tuple(cs))
    assume(not f.is_zero())
    distinct = sorted(set(_sympy_real_roots(f.coeffs)))
    intervals = isolate_real_roots(f)
    assert len(intervals) == len(distinct)
    for (lo, hi), root in zip(intervals, distinct):
        assert sympy.Rational(lo) < root < sympy.Rational(hi)


@settings(max_examples=150)
@given(st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9))
def test_quadratic_discriminant(a, b, c):
    assume(a != 0)
    assert is_real_rooted(Polynomial((c, b, a))) == (b * b - 4 * a * c >= 0)


def test_interleaves_frozen_cases():
    f = Polynomial((2, 1))                                # root -2
    g = Polynomial((3, 4, 1))                             # roots -1, -3
    assert interleaves(f, g)
    assert not interleaves(g, f)
    assert interleaves(f, Polynomial((1, 1)))             # -2 <= -1, same degree
    assert not interleaves(Polynomial((1, 1)), f)
    assert interleaves(Polynomial((1,)), Polynomial((0, 1)))
    assert interleaves(Polynomial((0, 1)), Polynomial((0, 1)))
    assert interleaves(Polynomial(()), g)                 # zero is neutral
    assert interleaves(g, Polynomial(()))
    # multiple roots: (t+1)(t+2) interleaves (t+1)^2 but not the other way
    assert interleaves(Polynomial((2, 3, 1)), Polynomial((1, 2, 1)))
    assert not interleaves(Polynomial((1, 2, 1)), Polynomial((2, 3, 1)))
    # degree can drop by at most one
    assert not interleaves(Polynomial((1,)), Polynomial((3, 4, 1)))


def test_interleaves_rejects_bad_input():
    with pytest.raises(InvalidInputError):
        interleaves(Polynomial((1, 1, 1)), Polynomial((1, 1)))
    with pytest.raises(InvalidInputError):
        interleaves(Polynomial((-1, -1)), Polynomial((1, 1)))


def test_classical_eulerian_family_interlaces():
    family = [Polynomial(tuple(classical_eulerian(p))) for p in range(1, 6)]
    for f, g in zip(family, family[1:]):
        assert is_real_rooted(g)
        assert interleaves(f, g)


def test_interlacing_sequence():
    one, t = Polynomial((1,)), Polynomial((0, 1))
    assert is_interlacing_sequence([one, t, t])
    assert interlacing_failure([one, t, t]) is None
    bad = [Polynomial((3, 4, 1)), Polynomial((2, 1))]
    assert interlacing_failure(bad) == (0, 1)
    assert not is_interlacing_sequence(bad)
    assert is_interlacing_sequence([])
