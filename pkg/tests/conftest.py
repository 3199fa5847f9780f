import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from rtm.forest import forests_up_to  # noqa: E402
from rtm.words import WordSum  # noqa: E402

FORESTS_4 = forests_up_to(4)
NONEMPTY_FORESTS_4 = [f for f in FORESTS_4 if f]

words = st.text(alphabet="xy", max_size=6)
forests = st.sampled_from(FORESTS_4)
nonempty_forests = st.sampled_from(NONEMPTY_FORESTS_4)
small_ints = st.integers(min_value=-3, max_value=3)


@st.composite
def word_sums(draw, max_terms=4, max_len=4):
    terms = draw(st.dictionaries(st.text(alphabet="xy", max_size=max_len), small_ints, max_size=max_terms))
    return WordSum(terms)


@st.composite
def forest_sums(draw, max_terms=3):
    from rtm.forest import ForestSum

    terms = draw(st.dictionaries(forests, small_ints, max_size=max_terms))
    return ForestSum(terms)


_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def record_criterion():
    def record(number: int, passed: bool, detail: str) -> None:
        line = f"[{'PASS' if passed else 'FAIL'}] criterion {number:>2}: {detail}"
        _ACCEPTANCE_LINES.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
