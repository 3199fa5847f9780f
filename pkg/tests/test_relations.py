import io
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from rtm.errors import DimensionError, DomainError
from rtm.forest import enumerate_forests
from rtm.mzv import to_fraction, z_eval
from rtm.relations import (
    RelationRow,
    RelationSet,
    RunConfig,
    bareiss_echelon,
    derivation_relation_from,
    derivation_rows,
    generate,
    rank_exact,
    read_relations,
    relation_from,
    span_inclusion,
    tree_map_rows,
    write_relations,
)
from rtm.words import admissible_indices

LADDER2 = "(())"


def test_relation_from_ladder2_on_xy():
    row = relation_from(LADDER2, "xy")
    assert row.weight == 4
    assert row.as_dict() == {(2, 1, 1): 2, (2, 2): -1, (3, 1): -1, (4,): -1}
    assert row.to_text() == "w=4 (())(xy): 2*(2,1,1) - (2,2) - (3,1) - (4)"


def test_relation_from_rejects_bad_input():
    with pytest.raises(DomainError):
        relation_from("", "xy")
    with pytest.raises(DomainError):
        relation_from("()", "")
    with pytest.raises(DomainError):
        relation_from("()", "yx")
    with pytest.raises(DomainError):
        derivation_relation_from(0, "xy")


def test_derivation_row_is_combination_of_tree_rows():
    cols = admissible_indices(4)
    d = derivation_relation_from(2, "xy").vector(cols)
    a = relation_from(LADDER2, "xy").vector(cols)
    b = relation_from("()()", "xy").vector(cols)
    assert d == [Fraction(2, 3) * p - Fraction(1, 3) * q for p, q in zip(a, b)]
    assert derivation_relation_from(1, "xy").as_dict() == relation_from("()", "xy").as_dict()


def test_generate_counts():
    for max_degree, max_weight in [(1, 3), (2, 4), (3, 6), (2, 2)]:
        rs = generate(RunConfig(max_degree, max_weight))
        expected = sum(
            len(enumerate_forests(d)) * 2 ** (weight - d - 2)
            for weight in range(3, max_weight + 1)
            for d in range(1, min(max_degree, weight - 2) + 1)
        )
        assert len(rs) == expected
    assert len(generate(RunConfig(2, 4))) == 5


def test_run_config_validation():
    with pytest.raises(DomainError):
        RunConfig(0, 4)
    with pytest.raises(DomainError):
        RunConfig(2, 4, format="xml")


def test_rank_examples():
    assert rank_exact([[1, 2], [2, 4]]) == 1
    assert rank_exact([[Fraction(1, 2), 0], [0, Fraction(1, 3)]]) == 2
    assert rank_exact([[0, 0, 0]]) == 0
    assert rank_exact([]) == 0
    assert bareiss_echelon([[2, 4], [1, 3]]) == (2, [[2, 4], [0, 2]])


def test_rank_rejects_ragged_and_mixed_input():
    with pytest.raises(DimensionError):
        rank_exact([[1, 2], [3]])
    with pytest.raises(DimensionError):
        rank_exact([relation_from("()", "xy"), relation_from("()", "xxy")])


matrices = st.integers(1, 5).flatmap(
    lambda cols: st.lists(
        st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=5), min_size=cols, max_size=cols),
        min_size=0,
        max_size=6,
    )
)


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_rank_matches_sympy(m):
    expected = sympy.Matrix([[sympy.Rational(c.numerator, c.denominator) for c in row] for row in m]).rank() if m else 0
    assert rank_exact(m) == expected


@settings(max_examples=80, deadline=None)
@given(matrices, st.randoms(use_true_random=False))
def test_rank_invariances(m, rnd):
    r = rank_exact(m)
    shuffled = m[:]
    rnd.shuffle(shuffled)
    assert rank_exact(shuffled) == r
    assert rank_exact([[c * 7 for c in row] for row in m]) == r
    if m:
        assert rank_exact(m + [[a + b for a, b in zip(m[0], m[-1])]]) == r
        assert rank_exact([list(col) for col in zip(*m)]) == r


def test_span_examples():
    tree = list(tree_map_rows(2, 4))
    deriv = list(derivation_rows(4))
    res = span_inclusion(deriv, tree)
    assert res and res.witness is None
    assert res.ranks == {3: (1, 1), 4: (2, 2)}
    # a single tree row cannot span the weight-4 derivation rows
    res = span_inclusion(deriv, [relation_from("()", "xy"), relation_from("()", "xxy")])
    assert not res and res.witness.weight == 4


def test_span_inclusion_to_weight_6():
    tree = list(tree_map_rows(4, 6))
    deriv = list(derivation_rows(6))
    res = span_inclusion(deriv, tree)
    assert res.included
    assert res.ranks == {3: (1, 1), 4: (2, 2), 5: (5, 5), 6: (10, 10)}


def test_jsonl_round_trip(tmp_path):
    rs = generate(RunConfig(2, 5, derivations=True))
    path = tmp_path / "rel.jsonl"
    with open(path, "w") as fh:
        write_relations(rs, fh)
    back = read_relations(path)
    assert back.rows == rs.rows
    assert all(r.forest is None for r in back.derivation_rows())


def test_output_is_deterministic(tmp_path):
    outputs = []
    for fmt in ("jsonl", "text"):
        for _ in range(2):
            buf = io.StringIO()
            write_relations(generate(RunConfig(3, 6, derivations=True)), buf, fmt)
            outputs.append(buf.getvalue())
    assert outputs[0] == outputs[1] and outputs[2] == outputs[3]
    assert outputs[2].startswith("# relations ")
    (tmp_path / "a.jsonl").write_text(outputs[0])
    assert (tmp_path / "a.jsonl").read_bytes() == outputs[0].encode()


def test_bad_records_are_reported(tmp_path):
    path = tmp_path / "bad.jsonl"
    path.write_text('{"weight": 3}\n')
    with pytest.raises(DomainError, match="bad.jsonl:1"):
        read_relations(path)


def test_rows_sort_by_weight_then_kind():
    rs = RelationSet(list(derivation_rows(4)) + list(tree_map_rows(2, 4)))
    keys = [r.sort_key() for r in rs]
    assert keys == sorted(keys)
    assert rs.weights() == [3, 4]


def test_all_small_rows_vanish_numerically():
    rows = list(tree_map_rows(4, 6)) + list(derivation_rows(6))
    for r in rows:
        res = z_eval(r.word_sum())
        assert abs(to_fraction(res.value)) <= res.bound + Fraction(1, 10**20), r.source


def test_row_json_shape():
    row = derivation_relation_from(1, "xy")
    assert RelationRow.from_json(row.to_json()) == row
    assert '"forest":null' in row.to_json()
