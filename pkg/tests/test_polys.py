"""Exact polynomial arithmetic, palindromicity, gamma vectors, h*."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lhall import (InvalidInputError, NotPolynomialError, Polynomial,
                   binomial_power, compose_linear, gamma_vector,
                   hstar_from_counts, int_coefficients, interpolate,
                   is_palindromic, monomial)

small_polys = st.builds(
    Polynomial, st.lists(st.integers(-9, 9), max_size=6).map(tuple))


def test_construction_normalizes():
    assert Polynomial((1, 2, 0, 0)).coeffs == (1, 2)
    assert Polynomial(()).degree == -1
    assert Polynomial((0,)).is_zero()
    assert Polynomial((Fraction(1, 2),)).coefficient(0) == Fraction(1, 2)
    with pytest.raises(InvalidInputError):
        Polynomial((0.5,))
    with pytest.raises(InvalidInputError):
        monomial(-1)


def test_arithmetic_and_evaluation():
    f = Polynomial((1, 2, 1))
    g = Polynomial((-1, 1))
    assert f + g == Polynomial((0, 3, 1))
    assert f - f == Polynomial(())
    assert f * g == Polynomial((-1, -1, 1, 1))
    assert (2 + f) == Polynomial((3, 2, 1))
    assert f(0) == 1 and f(1) == 4 and f(Fraction(1, 2)) == Fraction(9, 4)
    assert monomial(3, 2) == Polynomial((0, 0, 0, 2))


@settings(max_examples=120)
@given(small_polys, small_polys, st.integers(-4, 4))
def test_products_evaluate_pointwise(f, g, v):
    assert (f * g)(v) == f(v) * g(v)
    assert (f + g)(v) == f(v) + g(v)


def test_is_palindromic():
    assert is_palindromic(Polynomial((1, 4, 1)), 2)
    assert is_palindromic(Polynomial((1, 1)), 1)
    assert not is_palindromic(Polynomial((1, 1)), 0)  # center below degree
    assert is_palindromic(Polynomial((0, 1)), 2)      # t == t^2 * (1/t)
    assert not is_palindromic(Polynomial((1, 2, 2)), 2)
    assert is_palindromic(Polynomial(()), 5)


def test_gamma_vector_frozen():
    assert gamma_vector(Polynomial((1, 6, 1)), 2) == (1, 4)
    assert gamma_vector(Polynomial((1, 4, 1)), 2) == (1, 2)
    assert gamma_vector(Polynomial((1,)), 0) == (1,)
    assert gamma_vector(Polynomial((0, 1)), 2) == (0, 1)
    with pytest.raises(InvalidInputError):
        gamma_vector(Polynomial((1, 2)), 2)


@settings(max_examples=120)
@given(st.integers(0, 7), st.data())
def test_gamma_vector_roundtrip(d, data):
    gs = tuple(data.draw(st.integers(-5, 5)) for _ in range(d // 2 + 1))
    poly = Polynomial(())
    for k, g in enumerate(gs):
        poly = poly + monomial(k, g) * binomial_power(d - 2 * k)
    assert gamma_vector(poly, d) == tuple(Fraction(g) for g in gs)


def test_binomial_power_and_compose():
    assert binomial_power(3) == Polynomial((1, 3, 3, 1))
    assert binomial_power(0) == Polynomial((1,))
    with pytest.raises(InvalidInputError):
        binomial_power(-1)
    f = Polynomial((1, 0, 1))
    assert compose_linear(f, -1, 0) == f            # even polynomial
    assert compose_linear(Polynomial((0, 1)), 2, 3) == Polynomial((3, 2))


@settings(max_examples=100)
@given(small_polys, st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3))
def test_compose_linear_evaluates(f, a, b, v):
    assert compose_linear(f, a, b)(v) == f(a * v + b)


@settings(max_examples=100)
@given(small_polys)
def test_interpolate_roundtrip(f):
    nodes = range(max(f.degree + 1, 1))
    assert interpolate([(x, f(x)) for x in nodes]) == f


def test_interpolate_rejects_repeated_nodes():
    with pytest.raises(InvalidInputError):
        interpolate([(0, 1), (0, 2)])


def test_hstar_from_counts():
    cubes = [(n + 1) ** 3 for n in range(6)]
    assert hstar_from_counts(cubes, 3) == Polynomial((1, 4, 1))
    simplex = [(n + 2) * (n + 1) // 2 for n in range(5)]
    assert hstar_from_counts(simplex, 2) == Polynomial((1,))
    assert hstar_from_counts([0, 1, 3, 6, 10], 2) == Polynomial((0, 1))
    with pytest.raises(InvalidInputError):
        hstar_from_counts([1, 2], 3)
    with pytest.raises(NotPolynomialError):
        hstar_from_counts([1, 2, 4, 8], 1)


def test_int_coefficients():
    f = Polynomial((Fraction(1, 2), Fraction(1, 3)))
    assert int_coefficients(f) == [3, 2]
    assert int_coefficients(Polynomial(())) == []
    assert int_coefficients(Polynomial((2, 4))) == [2, 4]
