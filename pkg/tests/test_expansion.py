import pytest

from stablegroth.hecke import (Permutation, conjugate_by_longest, reduce_word, skew_permutation,
                               symmetric_group)
from stablegroth.expansion import (Expansion, combine_setvalued, decreasing_tableaux_for,
                                   grothendieck_recursion, increasing_tableaux_brute_force,
                                   increasing_tableaux_for, max_tableau, monomials_compatible,
                                   monomials_setvalued, skew_lr_coefficients, stable_coefficient,
                                   stable_coefficients, stable_coefficients_decreasing,
                                   universal_coefficients)
from stablegroth.tableaux import shape, skew_shapes, tableau_permutation

P = lambda *a: Permutation(a)


def test_golden_expansion():
    c = stable_coefficients(P(3, 1, 5, 2, 4))
    assert dict(c) == {(2, 2): 1, (3, 1): 1, (3, 2): -1}
    assert c.complete
    assert c.to_json() == [{"shape": [2, 2], "coeff": 1}, {"shape": [3, 1], "coeff": 1},
                           {"shape": [3, 2], "coeff": -1}]


def test_tableaux_for_inverse():
    found = increasing_tableaux_for(P(2, 4, 1, 5, 3))
    assert found == [((1, 2), (3, 4)), ((1, 2, 4), (3,)), ((1, 2, 4), (3, 4))]
    assert all(tableau_permutation(t) == P(2, 4, 1, 5, 3) for t in found)


def test_max_tableau():
    assert max_tableau(P(2, 4, 1, 5, 3)) == ((1, 2, 4), (3,))
    assert max_tableau(P(3, 1, 5, 2, 4)) == ((1, 3), (2, 4))
    assert max_tableau(P(2, 1)) == ((1,),)
    assert max_tableau(P(1)) == ()


def test_identity_and_simple_reflection():
    assert dict(stable_coefficients(P(1))) == {(): 1}
    assert increasing_tableaux_for(P(2, 1), max_boxes=3) == [((1,),)]
    assert dict(stable_coefficients(P(1, 4, 3, 2))) == {(2, 1): 1}


def test_degree_cap_and_completeness():
    capped = stable_coefficients(P(3, 1, 5, 2, 4), max_degree=4)
    assert dict(capped) == {(2, 2): 1, (3, 1): 1}
    assert not capped.complete
    assert stable_coefficients(P(3, 1, 5, 2, 4), max_degree=5).complete
    with pytest.raises(ValueError):
        stable_coefficients(P(3, 1, 5, 2, 4), max_degree=3)


def test_single_coefficient():
    assert stable_coefficient(P(3, 1, 5, 2, 4), (3, 2)) == -1
    assert stable_coefficient(P(3, 1, 5, 2, 4), (3, 2), decreasing=True) == -1
    assert stable_coefficient(P(3, 1, 5, 2, 4), (4,)) == 0


def test_pruning_agrees_with_brute_force():
    for p in symmetric_group(4):
        pruned = increasing_tableaux_for(p, max_boxes=7)
        assert pruned == increasing_tableaux_for(p, max_boxes=7, prune=False)
        assert set(pruned) == set(increasing_tableaux_brute_force(p, 7))


def test_max_tableau_bounds_first_column():
    # row r of any tableau for p starts at or below row r of the maximal tableau
    for p in symmetric_group(4):
        m = max_tableau(p)
        for t in increasing_tableaux_for(p):
            assert all(m[r][0] >= row[0] for r, row in enumerate(t) if r < len(m))
        assert increasing_tableaux_for(p, shape=shape(m)) and m in increasing_tableaux_for(p)


def test_shape_and_rectangle_filters():
    p = P(2, 4, 1, 5, 3)
    assert increasing_tableaux_for(p, shape=(3, 1)) == [((1, 2, 4), (3,))]
    assert increasing_tableaux_for(p, max_rows=1) == []
    assert increasing_tableaux_for(p, max_cols=2) == [((1, 2), (3, 4))]


def test_decreasing_matches_increasing():
    for p in symmetric_group(4):
        assert stable_coefficients_decreasing(p) == stable_coefficients(p)
        assert stable_coefficients(conjugate_by_longest(p.inverse(), 4)) == \
            stable_coefficients(p)
        for t in decreasing_tableaux_for(p):
            assert shape(t) in stable_coefficients(p)


def test_monomials_simple_reflection():
    assert monomials_compatible(P(2, 1), 2, 2).format() == "x1 + x2 - x1*x2"
    assert monomials_setvalued((1,), 2, 2) == monomials_compatible(P(2, 1), 2, 2)


def test_monomials_expansion_oracle():
    p = P(3, 1, 5, 2, 4)
    d = p.length() + 2
    assert monomials_compatible(p, 3, d) == combine_setvalued(stable_coefficients(p, d), 3, d)


def test_grothendieck_recursion_base_cases():
    assert grothendieck_recursion(P(3, 2, 1), 3).format() == "x1^2*x2"
    assert grothendieck_recursion(P(2, 1), 3).format() == "x1"
    assert grothendieck_recursion(P(1), 3).format() == "1"
    with pytest.raises(ValueError):
        grothendieck_recursion(P(1, 2, 4, 3), 3)


def test_skew_lr():
    assert dict(skew_lr_coefficients((2, 1), (1,), 4)) == {(1, 1): 1, (2,): 1, (2, 1): -1}
    for outer, inner in skew_shapes(2, 3, 4):
        expected = stable_coefficients(skew_permutation(outer, inner, 2))
        found = skew_lr_coefficients(outer, inner, expected.max_degree() + 1)
        assert dict(found) == dict(expected)
    with pytest.raises(ValueError):
        skew_lr_coefficients((1,), (2,), 3)


def test_universal_coefficients():
    c = universal_coefficients(P(2, 1), 2, 3)
    assert dict(c) == {((1,), (), ()): 1, ((), (1,), ()): 1, ((), (), (1,)): 1,
                       ((1,), (1,), ()): -1, ((1,), (), (1,)): -1, ((), (1,), (1,)): -1,
                       ((1,), (1,), (1,)): 1}
    assert c.to_json()[0] == {"shapes": [[], [], [1]], "coeff": 1}
    with pytest.raises(ValueError):
        universal_coefficients(P(1, 2, 4, 3), 2, 3)


def test_expansion_helpers():
    e = Expansion()
    e.add((1,), 2)
    e.add((1,), -2)
    assert e == {}
    e.add((2, 1), 1)
    e.add((1,), 1)
    assert e.sorted_items() == [((1,), 1), ((2, 1), 1)]
    assert e.max_degree() == 3
    assert e.restrict_degree(2) == {(1,): 1}


def test_words_and_permutations_agree():
    assert stable_coefficients(reduce_word([2, 1, 4, 3])) == stable_coefficients(P(3, 1, 5, 2, 4))
