import json

import pytest

from rtm.cli import main
from rtm.tree_maps import apply
from rtm.words import parse_word_sum


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "argv,expected",
    [
        (["coproduct", "(()())"], "1 ⊗ (()()) + (()()) ⊗ 1 + 2*() ⊗ (()) + ()() ⊗ ()"),
        (["coproduct", "1"], "1 ⊗ 1"),
        (["antipode", "(())"], "-(()) + ()()"),
        (["dynkin", "(())"], "2*(()) - ()()"),
        (["apply", "(())", "xy"], "-xxxy - xxyy - xyxy + 2*xyyy"),
        (["partial", "2", "x"], "xxy + xyy"),
        (["ladder-decomp", "2"], "2/3*(()) - 1/3*()()"),
        (["mzv", "eval", "(2)"], "1.6449340668482264 ± 1e-31"),
        (["mzv", "eval", "xxy", "--digits", "10"], "1.202056903 ± 1e-31"),
    ],
)
def test_golden_outputs(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out.strip() == expected


def test_apply_accepts_word_sums(capsys):
    code, out, _ = run(capsys, "apply", "()", "xy - 2xxy")
    assert code == 0
    assert parse_word_sum(out.strip()) == apply("()", parse_word_sum("xy - 2xxy"))


def test_json_output(capsys):
    code, out, _ = run(capsys, "coproduct", "()", "--json")
    assert code == 0
    assert json.loads(out) == [["", "()", "1"], ["()", "", "1"]]
    code, out, _ = run(capsys, "dynkin", "()", "--json")
    assert json.loads(out) == [["()", "1"]]


def test_kernel_check(capsys):
    code, out, _ = run(capsys, "check", "kernel", "(())", "xy")
    assert code == 0
    assert out.startswith("PASS Z((())(xy))")


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "hopf-axioms", "--max-degree", "3"],
        ["verify", "ladders", "--n", "4"],
        ["verify", "series", "--order", "3"],
        ["verify", "main-theorem", "--n", "3", "--max-word-weight", "4"],
    ],
)
def test_verify_commands_pass(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out.startswith("PASS")


@pytest.mark.parametrize(
    "argv",
    [
        ["coproduct", "(()"],
        ["mzv", "eval", "yx"],
        ["partial", "0", "x"],
        ["check", "kernel", "1", "xy"],
        ["apply", "()", "xz"],
        ["rank", "--in", "/nonexistent/rows.jsonl"],
    ],
)
def test_user_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("error:")


def test_parse_error_names_position(capsys):
    _, _, err = run(capsys, "coproduct", "(()")
    assert "position 3" in err


def test_relations_text(capsys):
    code, out, _ = run(capsys, "relations", "--max-degree", "2", "--max-weight", "4", "--format", "text")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("# relations ")
    assert lines[1:] == [
        "w=3 ()(xy): (2,1) - (3)",
        "w=4 (())(xy): 2*(2,1,1) - (2,2) - (3,1) - (4)",
        "w=4 ()(xxy): (2,2) + (3,1) - (4)",
        "w=4 ()(xyy): (2,1,1) - (2,2) - (3,1)",
        "w=4 ()()(xy): (2,1,1) - 2*(2,2) - 2*(3,1) + (4)",
    ]


def test_relations_rank_and_span_files(capsys, tmp_path):
    both = tmp_path / "both.jsonl"
    tree = tmp_path / "tree.jsonl"
    code, _, err = run(capsys, "relations", "--max-degree", "2", "--max-weight", "4", "--derivations", "--out", str(both))
    assert code == 0 and "wrote 9 rows" in err
    run(capsys, "relations", "--max-degree", "2", "--max-weight", "4", "--out", str(tree))

    code, out, _ = run(capsys, "rank", "--in", str(both))
    assert code == 0
    assert out.splitlines() == ["weight 3: 2 rows, rank 1", "weight 4: 7 rows, rank 2"]

    code, out, _ = run(capsys, "span", "--sub", str(both), "--sup", str(tree))
    assert code == 0
    assert out.strip().endswith("PASS span inclusion")

    small = tmp_path / "small.jsonl"
    small.write_text(tree.read_text().splitlines()[0] + "\n")
    code, out, _ = run(capsys, "span", "--sub", str(tree), "--sup", str(small))
    assert code == 1
    assert "FAIL" in out


def test_relations_file_is_reproducible(capsys, tmp_path):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    for p in (a, b):
        run(capsys, "relations", "--max-degree", "3", "--max-weight", "5", "--derivations", "--out", str(p))
    assert a.read_bytes() == b.read_bytes()
