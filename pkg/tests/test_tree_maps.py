import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import nonempty_forests, word_sums
from rtm import tree_maps
from rtm.errors import DomainError
from rtm.forest import EMPTY, POINT, ForestSum, forests_up_to, parse_forest
from rtm.hopf import dynkin, ladder, ladder_product
from rtm.tree_maps import (
    apply,
    apply_letter,
    apply_letter_in_order,
    apply_split,
    partial_as_forest_sum,
    partial_n,
)
from rtm.words import (
    WordSum,
    admissible_words,
    is_admissible,
    parse_word_sum,
    r_y_inverse,
    right_mult,
    words_of_weight,
    z_encode,
)

W = parse_word_sum
CHERRY = parse_forest("(()())")


def test_letter_action_examples():
    assert apply_letter(POINT, "x") == W("xy")
    assert apply_letter(POINT, "y") == W("-xy")
    assert apply_letter(ladder(2), "x") == W("xxy + 2xyy")


def test_cherry_letter_action_by_hand():
    # B+(..)(x) = R_y R_{x+2y} R_y^{-1} (.(.(x)))
    inner = apply(POINT, apply(POINT, "x"))
    by_hand = right_mult(right_mult(r_y_inverse(inner), W("x + 2y")), "y")
    assert by_hand == W("xyxy + 2xyyy - xxxy - 2xxyy")
    assert apply_letter(CHERRY, "x") == by_hand


def test_apply_examples():
    assert apply(POINT, "xy") == W("xyy - xxy")
    assert apply(ladder(2), "xy") == W("2xyyy - xyxy - xxxy - xxyy")
    assert apply(ladder(2), WordSum.of("")) == 0
    assert apply(EMPTY, W("xy - 2y")) == W("xy - 2y")


def test_ladder2_on_xy_in_z_form():
    img = apply(ladder(2), "xy")
    zform = {z_encode(w): c for w, c in img.items()}
    assert zform == {(2, 1, 1): 2, (2, 2): -1, (4,): -1, (3, 1): -1}


def test_apply_letter_rejects_bad_input():
    with pytest.raises(DomainError):
        apply_letter(EMPTY, "x")
    with pytest.raises(DomainError):
        apply_letter(POINT, "z")


def test_partial_examples():
    assert partial_n(1, "x") == W("xy")
    assert partial_n(2, "x") == W("xxy + xyy")
    assert partial_n(1, "xy") == W("xyy - xxy")
    assert partial_n(1, "xy") == apply(POINT, "xy")
    assert partial_n(3, "") == 0
    with pytest.raises(DomainError):
        partial_n(0, "x")


def test_partial_as_forest_sum_examples():
    l1, l2, l3 = ladder(1), ladder(2), ladder(3)
    assert partial_as_forest_sum(1) == ForestSum.of(l1)
    assert partial_as_forest_sum(2) == ForestSum.of(l2, Fraction(2, 3)) - ForestSum.of(l1 * l1, Fraction(1, 3))
    assert partial_as_forest_sum(3) == (
        ForestSum.of(l3, Fraction(3, 7)) - ForestSum.of(l2 * l1, Fraction(3, 7)) + ForestSum.of(l1 * l1 * l1, Fraction(1, 7))
    )


def test_partial_as_forest_sum_is_scaled_dynkin():
    for n in range(1, 9):
        assert partial_as_forest_sum(n).scale(2**n - 1) == dynkin(ladder(n))


def test_main_theorem_small():
    for n in range(1, 5):
        op = partial_as_forest_sum(n)
        for length in range(0, 6):
            for w in words_of_weight(length):
                assert apply(op, w) == partial_n(n, w)


def test_split_compatibility():
    for f in forests_up_to(3):
        for length in range(0, 7):
            for w in words_of_weight(length):
                whole = apply(f, w)
                for i in range(len(w) + 1):
                    assert apply_split(f, w[:i], w[i:]) == whole, (f.key, w, i)


def test_sign_property():
    for f in forests_up_to(5):
        if f:
            assert apply_letter(f, "x") + apply_letter(f, "y") == 0


def test_admissibility_is_preserved():
    for f in forests_up_to(4):
        if not f:
            continue
        for n in range(2, 8):
            for w in admissible_words(n):
                assert is_admissible(apply(f, w)), (f.key, w)


def test_ladder_recursion():
    for n in range(1, 6):
        for length in range(0, 7):
            for w in words_of_weight(length):
                rhs = WordSum.zero()
                for j in range(1, n + 1):
                    rhs = rhs + apply(ladder(n - j), partial_n(j, w)).scale(2**j - 1)
                assert apply(ladder(n), w).scale(n) == rhs


def test_factor_order_is_irrelevant():
    rnd = random.Random(11)
    multi = [f for f in forests_up_to(5) if len(f.trees) >= 2]
    for f in multi:
        orders = list(itertools.permutations(range(len(f.trees))))
        for order in rnd.sample(orders, min(4, len(orders))):
            for u in "xy":
                assert apply_letter_in_order(f, u, order) == apply_letter(f, u)


def test_ladders_commute_as_operators():
    for a, b in [(1, 2), (2, 3), (1, 3)]:
        for w in ["xy", "xxy", "xyxy"]:
            assert apply(ladder(a), apply(ladder(b), w)) == apply(ladder(b), apply(ladder(a), w))
            assert apply(ladder_product([a, b]), w) != 0


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=1, max_value=5), st.text("xy", max_size=4), st.text("xy", max_size=4))
def test_dynkin_of_ladder_is_a_derivation(n, v, w):
    d = dynkin(ladder(n))
    assert apply(d, v + w) == apply(d, v) * WordSum.of(w) + WordSum.of(v) * apply(d, w)


@settings(max_examples=50, deadline=None)
@given(nonempty_forests, word_sums(), word_sums())
def test_apply_is_linear(f, a, b):
    assert apply(f, a + b) == apply(f, a) + apply(f, b)
    assert apply(f, a.scale(Fraction(-5, 2))) == apply(f, a).scale(Fraction(-5, 2))


def test_caches_are_transparent():
    sample = [(f, w) for f in forests_up_to(3) for w in ["xy", "xxy", "xyxy", "yxy"]]
    cached = [apply(f, w) for f, w in sample]
    tree_maps.set_cache_budget(0)
    try:
        uncached = [apply(f, w) for f, w in sample]
    finally:
        tree_maps.set_cache_budget(tree_maps.DEFAULT_CACHE_BUDGET)
    assert cached == uncached
