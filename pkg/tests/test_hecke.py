from itertools import product

import pytest
from hypothesis import given, strategies as st

from stablegroth.hecke import (Permutation, conjugate_by_longest, grassmannian_permutation,
                               hecke_factorizations, hecke_product, hecke_product_all,
                               identity, is_321_avoiding, left_descents, left_hecke_preimages,
                               longest, partition, reduce_word, reduced_word, shift, simple,
                               skew_permutation, symmetric_group, weak_prefixes)

P = lambda *a: Permutation(a)

words = st.lists(st.integers(1, 5), max_size=10)


def test_permutation_trims_fixed_points():
    assert P(1, 2, 3) == identity()
    assert P(2, 1, 3, 4) == P(2, 1)
    assert P(2, 1, 3).size == 2
    assert identity().size == 1


def test_rejects_non_permutations():
    with pytest.raises(ValueError):
        P(1, 1)
    with pytest.raises(ValueError):
        P(0, 1)


def test_composition_applies_right_factor_first():
    # s1 s2 sends 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1
    assert simple(1) * simple(2) == P(2, 3, 1)


def test_reduce_word_examples():
    assert reduce_word([2, 1, 4, 3]) == P(3, 1, 5, 2, 4)
    assert reduce_word([1, 1]) == P(2, 1)
    assert reduce_word([]) == identity()
    # 121 and 212 are both reduced words for the longest element of S_3
    assert reduce_word([1, 2, 1]) == reduce_word([2, 1, 2]) == P(3, 2, 1)
    # a Hecke word that is not reduced
    assert reduce_word([1, 2, 1, 2]) == P(3, 2, 1)


def test_reduce_word_rejects_bad_letters():
    with pytest.raises(ValueError):
        reduce_word([0])


def test_reduced_word_is_reduced():
    for p in symmetric_group(5):
        w = reduced_word(p)
        assert len(w) == p.length()
        assert reduce_word(w) == p


@given(words, words, words)
def test_hecke_product_is_associative(a, b, c):
    x, y, z = reduce_word(a), reduce_word(b), reduce_word(c)
    assert hecke_product(hecke_product(x, y), z) == hecke_product(x, hecke_product(y, z))


@given(words, words)
def test_hecke_product_matches_concatenation(a, b):
    assert hecke_product(reduce_word(a), reduce_word(b)) == reduce_word(a + b)


@given(words)
def test_right_and_left_hecke(a):
    p = reduce_word(a)
    for i in range(1, 6):
        assert p.right_hecke(i) == reduce_word(a + [i])
        assert p.left_hecke(i) == reduce_word([i] + a)


def test_descents_and_length():
    p = P(3, 1, 5, 2, 4)
    assert p.descents() == {1, 3}
    assert p.length() == 4
    assert left_descents(p) == p.inverse().descents()
    assert longest(4).length() == 6


def test_left_hecke_preimages_by_brute_force():
    group = list(symmetric_group(4))
    for p in group:
        for i in range(1, 4):
            expected = {q for q in group if q.left_hecke(i) == p}
            assert set(left_hecke_preimages(i, p)) == expected


def test_factorizations_by_brute_force():
    group = list(symmetric_group(4))
    for p in [P(3, 1, 4, 2), P(4, 3, 2, 1), P(2, 1), identity()]:
        expected = {(u, v) for u, v in product(group, group) if hecke_product(u, v) == p}
        assert hecke_factorizations(p) == expected


def test_weak_prefixes():
    assert weak_prefixes(P(2, 1)) == {identity(), P(2, 1)}
    assert len(weak_prefixes(longest(4))) == 24


def test_grassmannian_permutation():
    assert grassmannian_permutation((2, 2), 2) == P(3, 4, 1, 2)
    assert grassmannian_permutation((), 3) == identity()
    p = grassmannian_permutation((3, 1), 2)
    assert p.descents() <= {2} and p.length() == 4
    with pytest.raises(ValueError):
        grassmannian_permutation((1, 1, 1), 2)


def test_skew_permutation_is_321_avoiding_of_right_length():
    p = skew_permutation((3, 2), (1,), 2)
    assert is_321_avoiding(p)
    assert p.length() == 4
    assert skew_permutation((2, 1), (), 2) == grassmannian_permutation((2, 1), 2)
    with pytest.raises(ValueError):
        skew_permutation((1,), (2,), 2)


def test_321_avoidance():
    assert not is_321_avoiding(P(3, 2, 1))
    assert is_321_avoiding(P(3, 1, 2))
    assert sum(is_321_avoiding(p) for p in symmetric_group(4)) == 14


def test_conjugate_by_longest_and_shift():
    assert conjugate_by_longest(P(2, 1), 3) == P(1, 3, 2)
    assert shift(P(2, 1), 2) == P(1, 2, 4, 3)
    with pytest.raises(ValueError):
        conjugate_by_longest(P(3, 1, 2), 2)


def test_hecke_product_all():
    assert hecke_product_all([simple(1), simple(1), simple(2)]) == reduce_word([1, 2])


def test_partition_normalizes():
    assert partition([3, 1, 0, 0]) == (3, 1)
    with pytest.raises(ValueError):
        partition([1, 2])
    with pytest.raises(ValueError):
        partition([-1])
