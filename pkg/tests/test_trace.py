import pytest
from hypothesis import given, strategies as st

from chromalie import (GraphError, WeightVector, b_set, b_tilde, canonicalize,
                       cyclic_class_rep, enumerate_weight_words, i_form,
                       initial_alphabet, initial_alphabet_set, is_aperiodic,
                       new_graph)
from chromalie.trace import concat

from helpers import complete_graph, cycle_graph, path_graph

SHOWCASE = new_graph([1, 2, 3, 4], edges=[(1, 2), (2, 3), (2, 4), (3, 4)])


def test_canonicalize_fixed_points():
    g = path_graph(3)
    # 1 and 3 commute; the larger letter moves first
    assert canonicalize((1, 3), g) == (3, 1)
    assert canonicalize((3, 1), g) == (3, 1)
    assert canonicalize((1, 2), g) == (1, 2)
    assert canonicalize((), g) == ()


def test_canonicalize_showcase():
    assert canonicalize((1, 3, 4, 2, 1), SHOWCASE) == (3, 4, 1, 2, 1)


def test_canonicalize_rejects_unknown_letters():
    with pytest.raises(GraphError):
        canonicalize((9,), path_graph(2))


@given(st.lists(st.integers(1, 4), max_size=7), st.randoms())
def test_canonicalize_commutation_invariant(word, rng):
    g = cycle_graph(4)
    base = canonicalize(word, g)
    # apply random swaps of adjacent independent letters; the class must not move
    w = list(word)
    for _ in range(10):
        if len(w) < 2:
            break
        j = rng.randrange(len(w) - 1)
        a, b = w[j], w[j + 1]
        if a != b and not g.adjacent(a, b):
            w[j], w[j + 1] = b, a
    assert canonicalize(w, g) == base


@given(st.lists(st.integers(1, 4), max_size=7))
def test_canonicalize_idempotent(word):
    g = cycle_graph(4)
    once = canonicalize(word, g)
    assert canonicalize(once, g) == once


def test_initial_alphabet_multiplicities():
    k3 = complete_graph(3)
    assert dict(initial_alphabet((1, 2, 3, 3), k3)) == {3: 2}
    assert dict(initial_alphabet((2, 1, 1), k3)) == {1: 2}
    g2 = path_graph(2)
    assert dict(initial_alphabet((1, 2, 1), g2)) == {1: 1}
    assert dict(initial_alphabet((2, 1, 1), g2)) == {1: 2}
    # commuting letters can both be final
    p3 = path_graph(3)
    assert initial_alphabet_set((2, 1, 3), p3) == frozenset({1, 3})


def test_i_form_showcase():
    f = i_form((1, 3, 4, 2, 1), 1, SHOWCASE)
    assert f == ((1,), (3, 4, 2, 1))


def test_i_form_concat_round_trip():
    g = SHOWCASE
    k = WeightVector.of({1: 2, 2: 1, 3: 1, 4: 1})
    for w in b_tilde(g, k, 1):
        f = i_form(w, 1, g)
        assert len(f) == 2
        assert concat(f, g) == w
        for factor in f:
            assert initial_alphabet_set(factor, g) == frozenset({1})
            assert factor.count(1) == 1


def test_i_form_requires_single_initial_letter():
    with pytest.raises(GraphError):
        i_form((1, 2), 1, path_graph(2))


def test_enumerate_weight_words_path():
    g = path_graph(3)
    words = enumerate_weight_words(g, WeightVector.ones([1, 2, 3]))
    assert words == ((1, 2, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1))


def test_enumerate_weight_words_counts():
    # complete graph: all arrangements are distinct traces
    g = complete_graph(3)
    k = WeightVector.of({1: 2, 2: 1, 3: 1})
    assert len(enumerate_weight_words(g, k)) == 12
    # edgeless graph: one trace per weight
    e3 = new_graph([1, 2, 3])
    assert len(enumerate_weight_words(e3, k)) == 1


def test_enumerate_weight_words_all_canonical():
    g = cycle_graph(4)
    k = WeightVector.of({1: 1, 2: 2, 3: 1, 4: 1})
    words = enumerate_weight_words(g, k)
    assert len(set(words)) == len(words)
    for w in words:
        assert canonicalize(w, g) == w


def test_b_tilde_showcase():
    k = WeightVector.of({1: 2, 2: 1, 3: 1, 4: 1})
    assert len(b_tilde(SHOWCASE, k, 1)) == 4


def test_aperiodicity():
    g = path_graph(2)
    k = WeightVector.of({1: 2, 2: 2})
    # (12)(12) is periodic, so it contributes no aperiodic class
    forms = b_set(g, k, 1)
    periodic = [f for f in forms if not is_aperiodic(f, g)]
    assert not periodic
    for f in forms:
        assert cyclic_class_rep(f, g) == f


def test_b_set_counts_match_multiplicity():
    from chromalie import root_multiplicity
    for g in (path_graph(3), cycle_graph(4), complete_graph(3)):
        for k in (WeightVector.ones(g.vertices),
                  WeightVector.of({**dict.fromkeys(g.vertices, 1), 1: 2})):
            m = root_multiplicity(g, k)
            for i in k.support:
                assert len(b_set(g, k, i)) == m
