"""Construction, queries, duality and extension machinery for labeled posets."""

import pytest
from hypothesis import given, settings

from lhall import (InvalidInputError, LabeledPoset, ResourceLimitError,
                   all_labeled_posets, count_linear_extensions, disjoint_union,
                   epsilon, from_relations, linear_extensions, make_antichain,
                   make_chain, ordinal_sum, ordinal_sum_of_antichains,
                   poset_from_document, poset_to_document, sign_rank,
                   validate_smap)
from oracles import posets


def test_construction_rejects_bad_covers():
    with pytest.raises(InvalidInputError):
        LabeledPoset(2, frozenset({(1, 1)}))
    with pytest.raises(InvalidInputError):
        LabeledPoset(2, frozenset({(0, 1)}))
    with pytest.raises(InvalidInputError):
        LabeledPoset(2, frozenset({(1, 3)}))
    with pytest.raises(InvalidInputError):
        LabeledPoset(2, frozenset({(1, 2), (2, 1)}))
    with pytest.raises(InvalidInputError):
        LabeledPoset(3, frozenset({(1, 2), (2, 3), (3, 1)}))
    # (1, 3) follows from the other two covers, so it is not itself a cover
    with pytest.raises(InvalidInputError):
        LabeledPoset(3, frozenset({(1, 2), (2, 3), (1, 3)}))
    with pytest.raises(InvalidInputError):
        LabeledPoset(-1)


def test_order_queries():
    P = LabeledPoset(4, frozenset({(1, 3), (2, 3), (2, 4)}))
    assert list(P.elements) == [1, 2, 3, 4]
    assert P.less(1, 3) and P.less(2, 4)
    assert not P.less(1, 4) and not P.less(3, 1)
    assert P.leq(3, 3) and not P.less(3, 3)
    assert P.above(2) == {3, 4}
    assert P.below(3) == {1, 2}
    assert P.minimal_elements() == (1, 2)
    assert P.maximal_elements() == (3, 4)
    assert P.is_naturally_labeled()
    assert not make_chain((2, 1)).is_naturally_labeled()
    with pytest.raises(InvalidInputError):
        P.less(0, 1)


def test_epsilon_sign():
    assert epsilon(1, 2) == 1
    assert epsilon(2, 1) == -1
    with pytest.raises(InvalidInputError):
        epsilon(3, 3)


def test_dual_mirrors_labels():
    assert make_chain((1, 2, 3)).dual() == make_chain((3, 2, 1))
    vee = LabeledPoset(3, frozenset({(1, 2), (1, 3)}))
    assert vee.dual() == LabeledPoset(3, frozenset({(3, 2), (3, 1)}))
    assert make_antichain(4).dual() == make_antichain(4)


def test_dual_is_an_involution_and_flips_cover_signs():
    for p in range(5):
        for P in all_labeled_posets(p):
            D = P.dual()
            assert D.dual() == P
            n = P.p + 1
            assert D.covers == frozenset((n - x, n - y) for x, y in P.covers)
            for x, y in P.covers:
                assert epsilon(n - x, n - y) == -epsilon(x, y)


def test_constructors():
    assert make_chain((2, 1, 3)).covers == frozenset({(2, 1), (1, 3)})
    with pytest.raises(InvalidInputError):
        make_chain((1, 3))
    assert make_antichain(3).covers == frozenset()
    with pytest.raises(InvalidInputError):
        make_antichain(-2)
    assert from_relations(3, [(1, 2), (2, 3), (1, 3)]) == make_chain((1, 2, 3))
    with pytest.raises(InvalidInputError):
        from_relations(2, [(1, 2), (2, 1)])


def test_sums_and_unions():
    stacked = ordinal_sum(make_antichain(2), make_antichain(1))
    assert stacked == LabeledPoset(3, frozenset({(1, 3), (2, 3)}))
    assert ordinal_sum_of_antichains((2, 1)) == stacked
    with pytest.raises(InvalidInputError):
        ordinal_sum_of_antichains((2, 0))
    union = disjoint_union(make_chain((1, 2)), make_chain((2, 1)))
    assert union == LabeledPoset(4, frozenset({(1, 2), (4, 3)}))


def test_linear_extensions_enumeration():
    assert list(linear_extensions(make_chain((2, 1, 3)))) == [(2, 1, 3)]
    exts = list(linear_extensions(make_antichain(3)))
    assert len(exts) == 6
    assert exts == sorted(exts)
    vee = LabeledPoset(3, frozenset({(1, 2), (1, 3)}))
    assert list(linear_extensions(vee)) == [(1, 2, 3), (1, 3, 2)]
    assert list(linear_extensions(make_antichain(0))) == [()]


def test_extension_count_matches_enumeration():
    for p in range(5):
        for P in all_labeled_posets(p):
            assert count_linear_extensions(P) == len(list(linear_extensions(P)))


def test_extension_caps(monkeypatch):
    with pytest.raises(ResourceLimitError):
        list(linear_extensions(make_antichain(11)))
    monkeypatch.setenv("LHALL_MAX_P", "11")
    assert next(linear_extensions(make_antichain(11))) == tuple(range(1, 12))
    monkeypatch.setenv("LHALL_MAX_P_COUNT", "3")
    with pytest.raises(ResourceLimitError):
        count_linear_extensions(make_antichain(4))


def test_sign_rank_cases():
    info = sign_rank(make_chain((1, 2, 3)))
    assert info.ranked and info.rho == (0, 1, 2)
    assert info.graded and info.rank == 2 and info.conflict is None

    info = sign_rank(make_chain((2, 1)))
    assert info.ranked and info.rho == (-1, 0)

    vee = LabeledPoset(3, frozenset({(1, 2), (1, 3)}))
    info = sign_rank(vee)
    assert info.ranked and info.rho == (0, 1, 1) and info.graded

    # two walks to the top disagree: +1 through 1, -1 through 3
    info = sign_rank(LabeledPoset(3, frozenset({(1, 2), (3, 2)})))
    assert not info.ranked and info.rho is None and info.conflict is not None

    n_poset = LabeledPoset(4, frozenset({(1, 3), (2, 3), (2, 4)}))
    info = sign_rank(n_poset)
    assert info.ranked and info.rho == (0, 0, 1, 1)


@settings(max_examples=80)
@given(posets(max_p=5))
def test_sign_rank_solves_the_cover_constraints(P):
    info = sign_rank(P)
    if info.ranked:
        for x, y in P.covers:
            assert info.rho[y - 1] - info.rho[x - 1] == epsilon(x, y)
        for m in P.minimal_elements():
            assert info.rho[m - 1] == 0
    else:
        (a, y1), (b, y2) = info.conflict
        assert y1 == y2 and {(a, y1), (b, y2)} <= P.covers


def test_validate_smap():
    P = make_antichain(3)
    assert validate_smap(P, {1: 2, 2: 1, 3: 3}) == (2, 1, 3)
    assert validate_smap(P, [1, 1, 1]) == (1, 1, 1)
    with pytest.raises(InvalidInputError):
        validate_smap(P, (1, 2))
    with pytest.raises(InvalidInputError):
        validate_smap(P, (0, 1, 1))
    with pytest.raises(InvalidInputError):
        validate_smap(P, (1.0, 1, 1))
    with pytest.raises(InvalidInputError):
        validate_smap(P, {1: 1, 2: 1, 4: 1})


def test_document_roundtrip():
    P = LabeledPoset(4, frozenset({(1, 3), (2, 3), (2, 4)}))
    doc = poset_to_document(P)
    assert doc == {"p": 4, "covers": [[1, 3], [2, 3], [2, 4]]}
    assert poset_from_document(doc) == P
    with pytest.raises(InvalidInputError):
        poset_from_document({"covers": []})


@settings(max_examples=60)
@given(posets(max_p=5))
def test_document_roundtrip_random(P):
    assert poset_from_document(poset_to_document(P)) == P
