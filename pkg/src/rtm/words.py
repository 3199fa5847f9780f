"""The noncommutative polynomial algebra Q<x,y>.

Words are plain ``str`` over the letters ``"x"`` and ``"y"``; the empty string is
the unit and is rendered as ``"1"``.  Concatenation is string concatenation.
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import product
from typing import Any, Iterable, Iterator

from rtm.errors import DomainError
from rtm.forest import format_terms
from rtm.linear import Combination, Scalar

LETTERS = ("x", "y")
_WORD_RE = re.compile(r"^[xy]*$")

ZIndex = tuple[int, ...]


def check_word(w: str) -> str:
    if w == "1":
        return ""
    if not isinstance(w, str) or not _WORD_RE.match(w):
        raise DomainError(f"not a word over {{x, y}}: {w!r}")
    return w


def word_order(w: str) -> tuple[int, str]:
    # by weight, then bytewise with x < y
    return (len(w), w)


def words_of_weight(n: int) -> Iterator[str]:
    for letters in product(LETTERS, repeat=n):
        yield "".join(letters)


def admissible_words(n: int) -> Iterator[str]:
    """Admissible words of weight exactly n (the empty word for n = 0)."""
    if n == 0:
        yield ""
    elif n >= 2:
        for mid in words_of_weight(n - 2):
            yield "x" + mid + "y"


class WordSum(Combination):
    """Element of Q<x,y>."""

    __slots__ = ()

    @classmethod
    def _coerce(cls, other: Any):
        if isinstance(other, cls):
            return other
        if isinstance(other, str):
            return cls._wrap({check_word(other): 1})
        if isinstance(other, int) and not isinstance(other, bool):
            return cls._wrap({"": other} if other else {})
        return NotImplemented

    @classmethod
    def of(cls, w: str, c: Scalar = 1) -> WordSum:
        return cls({check_word(w): c})

    @staticmethod
    def _product(a: str, b: str):
        return {a + b: 1}

    def sorted_items(self) -> list[tuple[str, Scalar]]:
        return sorted(self._terms.items(), key=lambda kv: word_order(kv[0]))

    def max_weight(self) -> int:
        return max((len(w) for w in self._terms), default=0)

    def homogeneous_part(self, n: int) -> WordSum:
        return WordSum._wrap({w: c for w, c in self._terms.items() if len(w) == n})

    def __repr__(self) -> str:
        return f"WordSum({str(self)!r})"

    def __str__(self) -> str:
        return format_terms((w or "1", c) for w, c in self.sorted_items())


def as_word_sum(a: WordSum | str | int) -> WordSum:
    out = WordSum._coerce(a)
    if out is NotImplemented:
        raise TypeError(f"not a word sum: {a!r}")
    return out


_TERM_RE = re.compile(r"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*\*?\s*)?([xy]+|1)?\s*")


def parse_word_sum(text: str) -> WordSum:
    """Parse text like ``"2xyy - xxy + 1/3*xy"`` (bare integers are multiples of 1)."""
    text = text.strip()
    if text in ("", "0"):
        return WordSum.zero()
    pos = 0
    terms: dict[str, Scalar] = {}
    first = True
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        sign, coeff, word = m.group(1), m.group(2), m.group(3)
        if m.end() == pos or (coeff is None and word is None) or (sign is None and not first):
            raise DomainError(f"cannot parse word sum {text!r} at position {pos}")
        c = Fraction(coeff) if coeff else Fraction(1)
        if sign == "-":
            c = -c
        w = "" if word in (None, "1") else word
        terms[w] = terms.get(w, 0) + c
        pos = m.end()
        first = False
    return WordSum(terms)


def concat(a: WordSum | str, b: WordSum | str) -> WordSum:
    return as_word_sum(a) * as_word_sum(b)


def right_mult(a: WordSum | str, v: WordSum | str) -> WordSum:
    """R_v(a) = a v."""
    return as_word_sum(a) * as_word_sum(v)


def strip_final_y(terms: dict[str, Scalar]) -> dict[str, Scalar]:
    out = {}
    for w, c in terms.items():
        if not w.endswith("y"):
            raise DomainError(f"R_y is not invertible on {w or '1'!r}: word does not end in y")
        out[w[:-1]] = c
    return out


def r_y_inverse(a: WordSum | str) -> WordSum:
    """Strip the final y from every word; every word must end in y."""
    return WordSum._wrap(strip_final_y(as_word_sum(a)._terms))


def z_encode(w: str) -> ZIndex:
    """xy -> (2,), xyxxy -> (2, 3); the empty word maps to ()."""
    w = check_word(w)
    if w and not w.endswith("y"):
        raise DomainError(f"z-encoding needs a word ending in y, got {w!r}")
    out = []
    run = 0
    for ch in w:
        if ch == "x":
            run += 1
        else:
            out.append(run + 1)
            run = 0
    return tuple(out)


def z_decode(k: Iterable[int]) -> str:
    parts = []
    for n in k:
        if n < 1:
            raise DomainError(f"z-index entries must be positive, got {n}")
        parts.append("x" * (n - 1) + "y")
    return "".join(parts)


def format_zindex(k: ZIndex) -> str:
    return "(" + ",".join(str(n) for n in k) + ")"


def parse_zindex(text: str) -> ZIndex:
    body = text.strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise DomainError(f"z-index must look like (3,1): {text!r}")
    body = body[1:-1].strip()
    if not body:
        return ()
    try:
        out = tuple(int(p) for p in body.split(","))
    except ValueError as exc:
        raise DomainError(f"bad z-index {text!r}") from exc
    if any(n < 1 for n in out):
        raise DomainError(f"z-index entries must be positive: {text!r}")
    return out


def is_admissible_word(w: str) -> bool:
    return w == "" or (w[0] == "x" and w[-1] == "y")


def is_admissible(a: WordSum | str) -> bool:
    return all(is_admissible_word(w) for w in as_word_sum(a))


def dual(w: str) -> str:
    """Reverse and swap x <-> y."""
    return check_word(w)[::-1].translate(_SWAP)


_SWAP = str.maketrans("xy", "yx")


def admissible_indices(weight: int) -> list[ZIndex]:
    """Admissible compositions of ``weight`` in lexicographic order."""
    return sorted(z_encode(w) for w in admissible_words(weight))
