import random

import pytest
from hypothesis import given, settings, strategies as st

from stablegroth.hecke import hecke_product, reduce_word
from stablegroth.insertion import (CompatiblePair, InsertionResult, hecke_insert, insert_word,
                                   insert_compatible_pair, product_chain, product_decreasing,
                                   product_increasing, recover_compatible_pair,
                                   reverse_hecke_insert)
from stablegroth.tableaux import (column_word, decreasing_permutation, is_increasing, size,
                                  straight_setvalued, tableau_permutation,
                                  random_increasing_tableau)
from stablegroth.verify import random_compatible_pair


def test_insert_absorbed_in_second_column():
    y = ((1, 2, 3, 4), (2, 5, 6), (3,), (5,))
    assert hecke_insert(3, y) == InsertionResult(y, (2, 3), 0)


def test_insert_comes_to_rest_in_third_column():
    assert hecke_insert(2, ((1, 2), (2, 5), (4,))) == \
        InsertionResult(((1, 2, 5), (2, 4), (4,)), (1, 3), 1)


def test_insert_blocked_by_first_column():
    y = ((1, 2, 3, 5), (2, 3, 4), (4,))
    assert hecke_insert(2, y) == InsertionResult(y, (2, 3), 0)


def test_insert_replacements_refused_by_rows():
    assert hecke_insert(1, ((1, 2, 3), (3, 4, 5))) == \
        InsertionResult(((1, 2, 3, 5), (3, 4, 5)), (1, 4), 1)


def test_reverse_insert_recovers_initial_tableau():
    assert reverse_hecke_insert((((1, 2, 3, 5), (3, 4, 5)), (1, 4), 1)) == \
        (((1, 2, 3), (3, 4, 5)), 1)


def test_insert_into_empty_tableau():
    assert hecke_insert(4, ()) == InsertionResult(((4,),), (1, 1), 1)
    with pytest.raises(ValueError):
        hecke_insert(0, ())


def test_reverse_insert_rejects_non_corner():
    with pytest.raises(ValueError):
        reverse_hecke_insert((((1, 2), (3,)), (1, 1), 1))
    with pytest.raises(ValueError):
        reverse_hecke_insert((((1, 2),), (1, 2), 2))


def test_step_log():
    steps = []
    hecke_insert(1, ((1, 2, 3), (3, 4, 5)), steps)
    assert [s["action"] for s in steps] == ["keep", "keep", "keep", "adjoin"]
    assert [s["value"] for s in steps] == [1, 3, 4, 5]


def test_compatible_pair_trace():
    pair = CompatiblePair((4, 1, 4, 4, 3), (1, 1, 2, 4, 4))
    rec = insert_compatible_pair(pair, trace=True)
    expected = [
        (((4,),), [[[1]]]),
        (((1, 4),), [[[1], [1]]]),
        (((1, 4), (4,)), [[[1], [1]], [[2]]]),
        (((1, 4), (4,)), [[[1], [1]], [[2, 4]]]),
        (((1, 4), (3,)), [[[1], [1, 4]], [[2, 4]]]),
    ]
    assert [(s["T"], s["U"]) for s in rec.trace] == \
        [(t, straight_setvalued(u)) for t, u in expected]
    assert recover_compatible_pair(rec.t, rec.u) == pair


def test_compatible_pair_validation():
    with pytest.raises(ValueError):
        CompatiblePair((1, 2), (1, 1))  # must decrease on a run
    with pytest.raises(ValueError):
        CompatiblePair((1,), (2, 1))
    with pytest.raises(ValueError):
        CompatiblePair((2, 1), (2, 1))
    assert CompatiblePair((2, 1), (1, 1)).exponents(2) == (2, 0)


def test_product_is_not_associative():
    t1, t2, t3 = ((1,),), ((1, 5), (4,)), ((2,),)
    assert product_increasing(t1, t2) == ((1, 4, 5), (4,))
    assert product_increasing(product_increasing(t1, t2), t3) == ((1, 2, 5), (4,))
    assert product_increasing(t1, product_increasing(t2, t3)) == ((1, 2, 5), (4, 5))
    assert product_chain([t1, t2, t3]) == ((1, 2, 5), (4, 5))


def test_decreasing_product():
    assert product_decreasing(((5, 3), (4,)), ((6, 3, 1), (4, 2), (3,), (2,))) == \
        ((6, 4, 3, 1), (5, 3, 2), (4,), (2,))
    for x in range(1, 5):
        assert product_decreasing(((x,),), ((x,),)) == ((x,),)
    assert product_decreasing((), ((3, 1),)) == ((3, 1),)


def test_insert_word_reduces_hecke_word():
    t = insert_word([2, 4, 1, 3])
    assert is_increasing(t)
    assert tableau_permutation(t) == reduce_word([2, 4, 1, 3][::-1])


tableaux = st.builds(lambda seed: random_increasing_tableau(random.Random(seed), 12, 8),
                     st.integers(0, 10**9))
letters = st.integers(1, 8)


@given(tableaux, letters)
def test_insert_then_reverse(y, x):
    z = hecke_insert(x, y)
    assert is_increasing(z.tableau)
    assert reverse_hecke_insert(z) == (y, x)


@given(tableaux, letters)
def test_insertion_adds_letter_on_the_left(y, x):
    z = hecke_insert(x, y).tableau
    assert tableau_permutation(z) == reduce_word((x,) + column_word(y))


@given(tableaux, letters, letters)
def test_pieri_property(y, x1, x2):
    z, c1, _ = hecke_insert(x1, y)
    _, c2, _ = hecke_insert(x2, z)
    assert (c2[1] > c1[1]) == (x1 > x2)


@given(tableaux, tableaux)
def test_product_multiplies_permutations(t1, t2):
    assert tableau_permutation(product_increasing(t1, t2)) == \
        hecke_product(tableau_permutation(t1), tableau_permutation(t2))


@given(st.permutations(range(1, 8)))
def test_distinct_letters_always_add_a_box(word):
    t = ()
    for k, letter in enumerate(word, start=1):
        t, _, alpha = hecke_insert(letter, t)
        assert alpha == 1 and size(t) == k


@settings(max_examples=200)
@given(st.integers(0, 10**9))
def test_recording_pair_roundtrip(seed):
    pair = random_compatible_pair(random.Random(seed))
    rec = insert_compatible_pair(pair, trace=True)
    assert all(step["U"].is_valid() for step in rec.trace)
    assert rec.u.exponents(5) == pair.exponents(5)
    assert recover_compatible_pair(rec.t, rec.u) == pair


def test_decreasing_product_multiplies_permutations():
    rng = random.Random(11)
    for _ in range(200):
        a = random_increasing_tableau(rng, 6, 6)
        b = random_increasing_tableau(rng, 6, 6)
        a = tuple(tuple(7 - x for x in row) for row in a)
        b = tuple(tuple(7 - x for x in row) for row in b)
        assert decreasing_permutation(product_decreasing(a, b)) == \
            hecke_product(decreasing_permutation(a), decreasing_permutation(b))
