import random

import pytest
from hypothesis import given

from conftest import forest_sums, forests
from oracles import brute_force_forests
from rtm.errors import ForestParseError
from rtm.forest import (
    EMPTY,
    POINT,
    Forest,
    ForestSum,
    Tree,
    b_plus,
    canonical_encode,
    enumerate_forests,
    forest_sum_product,
    forests_up_to,
    parse_forest,
    remove_root,
)

CHERRY = parse_forest("(()())")
LADDER2 = parse_forest("(())")
LADDER3 = parse_forest("((()))")


def test_encode_examples():
    assert canonical_encode(POINT) == "()"
    assert canonical_encode(b_plus(Forest([POINT, POINT]))) == "(()())"
    assert canonical_encode(Forest.of(LADDER2, POINT)) == "(())()"


def test_parse_examples():
    assert parse_forest("()") == POINT.as_forest()
    assert parse_forest("()(())") == Forest.of(POINT, LADDER2)
    assert parse_forest("()(())").key == "(())()"
    assert parse_forest("") == EMPTY


@pytest.mark.parametrize("bad,pos", [("(()", 3), ("())", 2), ("(a)", 1), (")", 0)])
def test_parse_errors_report_position(bad, pos):
    with pytest.raises(ForestParseError) as info:
        parse_forest(bad)
    assert info.value.position == pos


def test_b_plus_and_remove_root():
    assert b_plus(EMPTY).key == "()"
    assert b_plus(POINT).key == "(())"
    assert b_plus(Forest([POINT, POINT])).key == "(()())"
    assert remove_root(POINT) == EMPTY
    assert remove_root(LADDER3) == LADDER2
    assert remove_root(CHERRY) == Forest([POINT, POINT])
    assert b_plus(LADDER2).degree == 3


def test_remove_root_inverts_b_plus():
    for f in forests_up_to(5):
        assert remove_root(b_plus(f)) == f


def test_round_trip_through_keys():
    for f in forests_up_to(6):
        assert parse_forest(canonical_encode(f)) == f
        assert parse_forest(f.key).key == f.key


def _random_build(shape, rnd):
    # shape: nested lists of children; rebuild with shuffled child order at every node
    kids = [_random_build(c, rnd) for c in shape]
    rnd.shuffle(kids)
    return "(" + "".join(kids) + ")"


def _shape(tree: Tree):
    return [_shape(c) for c in tree.children.trees]


def test_child_order_does_not_matter():
    rnd = random.Random(7)
    for f in enumerate_forests(6):
        for t in f.trees:
            for _ in range(3):
                assert parse_forest(_random_build(_shape(t), rnd)).key == t.key


def test_enumeration_examples():
    assert enumerate_forests(0) == (EMPTY,)
    assert [f.key for f in enumerate_forests(3)] == sorted(["()()()", "(())()", "((()))", "(()())"])


def test_enumeration_matches_brute_force():
    counts = []
    for n in range(1, 7):
        mine = [f.key for f in enumerate_forests(n)]
        assert len(mine) == len(set(mine))
        assert mine == sorted(mine)
        assert set(mine) == brute_force_forests(n)
        assert all(f.degree == n for f in enumerate_forests(n))
        counts.append(len(mine))
    assert counts == [1, 2, 4, 9, 20, 48]


def test_forest_sum_product_examples():
    assert forest_sum_product(ForestSum.of(POINT), ForestSum.of(LADDER2)) == ForestSum.of(Forest.of(POINT, LADDER2))
    assert ForestSum.of(POINT, 2) * ForestSum.of(POINT, 3) == ForestSum.of(Forest([POINT, POINT]), 6)
    a = ForestSum.of(POINT) + ForestSum.of(LADDER2)
    assert a * ForestSum.of(EMPTY) == a


def test_zero_coefficients_are_dropped():
    a = ForestSum.of(POINT) - ForestSum.of(POINT)
    assert len(a) == 0 and a == 0
    assert ForestSum({POINT.as_forest(): 0}) == ForestSum.zero()


def test_floats_are_rejected():
    with pytest.raises(TypeError):
        ForestSum.of(POINT, 0.5)


@given(forest_sums(), forest_sums())
def test_product_commutes(a, b):
    assert a * b == b * a


@given(forest_sums(), forest_sums(), forest_sums())
def test_product_associates_and_distributes(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(forests, forests)
def test_forest_product_adds_degrees(f, g):
    assert (f * g).degree == f.degree + g.degree
    assert f * g == g * f
