"""Truncated multivariate power series over exact rationals."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lhall import (InvalidInputError, Series, SeriesContext, first_mismatch,
                   substitute, to_records)


def ctx_xy(capx=3, capy=3):
    return SeriesContext({"x": capx, "y": capy})


def test_context_keys_and_caps():
    ctx = ctx_xy()
    assert ctx.key_of({"x": 1}) == (1, 0)
    assert ctx.in_cap((3, 3)) and not ctx.in_cap((4, 0))
    with pytest.raises(InvalidInputError):
        ctx.key_of({"z": 1})
    # negative entries are legal in raw keys (used by monomial shifts) but
    # never in monomials themselves
    with pytest.raises(InvalidInputError):
        ctx.monomial({"x": -1})


def test_monomial_and_geometric():
    ctx = ctx_xy()
    assert to_records(ctx.one()) == [({}, 1)]
    assert ctx.monomial({"x": 4}).is_zero()          # over the cap
    geo = ctx.geometric({"x": 1})
    assert to_records(geo) == [({}, 1), ({"x": 1}, 1), ({"x": 2}, 1),
                               ({"x": 3}, 1)]
    with pytest.raises(InvalidInputError):
        ctx.geometric({})                            # 1/(1-1) diverges
    with pytest.raises(InvalidInputError):
        ctx.monomial({"x": 1}, 0.5)


def test_truncation_is_a_ring_quotient():
    # (1 - x) * (1 + x + ... + x^cap) == 1 once x^(cap+1) leaves the window
    ctx = ctx_xy()
    one_minus_x = ctx.one() - ctx.monomial({"x": 1})
    assert one_minus_x * ctx.geometric({"x": 1}) == ctx.one()


def test_arithmetic_hand_cases():
    ctx = ctx_xy()
    f = ctx.monomial({"x": 1}) + ctx.monomial({"y": 1})
    g = f * f
    assert to_records(g) == [({"y": 2}, 1), ({"x": 1, "y": 1}, 2),
                             ({"x": 2}, 1)]
    assert (g - g).is_zero()
    assert g.scale(Fraction(1, 2)).terms[ctx.key_of({"x": 1, "y": 1})] == 1
    assert f.mul_monomial({"x": 1}) == f * ctx.monomial({"x": 1})


def test_context_identity_is_required():
    a = ctx_xy().one()
    b = ctx_xy().one()
    with pytest.raises(InvalidInputError):
        a + b


small_exps = st.dictionaries(st.sampled_from(("x", "y")),
                             st.integers(0, 3), max_size=2)


def _series(ctx, draw_terms):
    out = ctx.zero()
    for exps, coeff in draw_terms:
        out = out + ctx.monomial(exps, coeff)
    return out


series_terms = st.lists(st.tuples(small_exps, st.integers(-4, 4)), max_size=5)


@settings(max_examples=100)
@given(series_terms, series_terms, series_terms)
def test_ring_axioms(ta, tb, tc):
    ctx = ctx_xy()
    a, b, c = (_series(ctx, t) for t in (ta, tb, tc))
    assert a * b == b * a
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a + ctx.zero() == a
    assert a * ctx.one() == a


def test_first_mismatch():
    ctx = ctx_xy()
    a = ctx.one() + ctx.monomial({"x": 2})
    b = ctx.one() + ctx.monomial({"x": 2}, 2) + ctx.monomial({"y": 1})
    exps, ca, cb = first_mismatch(a, b)
    assert (exps, ca, cb) == ({"y": 1}, 0, 1)
    assert first_mismatch(a, a) is None


def test_substitute():
    ctx = ctx_xy()
    target = SeriesContext({"u": 6})
    f = ctx.geometric({"x": 1}) * ctx.geometric({"y": 1})
    g = substitute(f, target, {"x": {"u": 1}, "y": {"u": 1}})
    # coefficient of u^k counts pairs a + b = k with a, b <= 3
    expected = {0: 1, 1: 2, 2: 3, 3: 4, 4: 3, 5: 2, 6: 1}
    assert {k[0]: c for k, c in g.terms.items()} == expected
    with pytest.raises(InvalidInputError):
        substitute(f, target, {"x": {"u": 1}})
