"""Unordered rooted trees and forests, and rational combinations of them.

Trees and forests are immutable and identified by a canonical parenthesis key:
a tree is ``"(" + key of its child forest + ")"`` and a forest is the
concatenation of its tree keys sorted bytewise.  The single vertex is ``"()"``
and the empty forest (the unit of the algebra) has the empty key.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Any, Iterable, Iterator

from rtm.errors import ForestParseError
from rtm.linear import Combination, Scalar


class Tree:
    """A rooted tree, given by the forest hanging below its root."""

    __slots__ = ("children", "key", "degree")

    def __init__(self, children: Forest):
        self.children = children
        self.key = "(" + children.key + ")"
        self.degree = children.degree + 1

    def __eq__(self, other: Any) -> bool:
        return isinstance(other, Tree) and self.key == other.key

    def __lt__(self, other: Tree) -> bool:
        return self.key < other.key

    def __hash__(self) -> int:
        return hash(("T", self.key))

    def __repr__(self) -> str:
        return f"Tree({self.key!r})"

    def as_forest(self) -> Forest:
        return Forest((self,))


class Forest:
    """A finite multiset of trees; the empty multiset is the unit."""

    __slots__ = ("trees", "key", "degree")

    def __init__(self, trees: Iterable[Tree] = ()):
        ts = tuple(sorted(trees, key=lambda t: t.key))
        self.trees = ts
        self.key = "".join(t.key for t in ts)
        self.degree = sum(t.degree for t in ts)

    @classmethod
    def of(cls, *items: Tree | Forest) -> Forest:
        trees: list[Tree] = []
        for it in items:
            trees.extend(it.trees if isinstance(it, Forest) else (it,))
        return cls(trees)

    def __eq__(self, other: Any) -> bool:
        return isinstance(other, Forest) and self.key == other.key

    def __lt__(self, other: Forest) -> bool:
        return self.key < other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"Forest({self.key!r})"

    def __str__(self) -> str:
        return self.key or "1"

    def __len__(self) -> int:
        return len(self.trees)

    def __iter__(self) -> Iterator[Tree]:
        return iter(self.trees)

    def __bool__(self) -> bool:
        return bool(self.trees)

    def __mul__(self, other: Any):
        if isinstance(other, Tree):
            other = other.as_forest()
        if isinstance(other, Forest):
            return Forest(self.trees + other.trees)
        return NotImplemented

    def is_tree(self) -> bool:
        return len(self.trees) == 1


EMPTY = Forest()
POINT = Tree(EMPTY)


def as_forest(f: Forest | Tree | str) -> Forest:
    if isinstance(f, Forest):
        return f
    if isinstance(f, Tree):
        return f.as_forest()
    if isinstance(f, str):
        return parse_forest(f)
    raise TypeError(f"not a forest: {f!r}")


def canonical_encode(f: Forest | Tree) -> str:
    return f.key


def parse_forest(text: str) -> Forest:
    """Parse a parenthesis string into a Forest; tree order in the input is irrelevant.

    >>> parse_forest("()(())").key
    '(())()'
    """
    pos = 0

    def forest_until(closing: bool) -> Forest:
        nonlocal pos
        trees = []
        while pos < len(text):
            ch = text[pos]
            if ch == "(":
                pos += 1
                trees.append(Tree(forest_until(True)))
            elif ch == ")":
                if not closing:
                    raise ForestParseError(text, pos, "unmatched ')'")
                pos += 1
                return Forest(trees)
            else:
                raise ForestParseError(text, pos, f"unexpected character {ch!r}")
        if closing:
            raise ForestParseError(text, pos, "missing ')'")
        return Forest(trees)

    return forest_until(False)


def parse_tree(text: str) -> Tree:
    f = parse_forest(text)
    if not f.is_tree():
        raise ForestParseError(text, 0, "expected exactly one tree")
    return f.trees[0]


def b_plus(f: Forest | Tree) -> Tree:
    return Tree(as_forest(f))


def remove_root(t: Tree | Forest) -> Forest:
    if isinstance(t, Forest):
        if not t.is_tree():
            raise TypeError("remove_root needs a single tree")
        t = t.trees[0]
    return t.children


@lru_cache(maxsize=None)
def trees_of_degree(n: int) -> tuple[Tree, ...]:
    if n < 1:
        return ()
    return tuple(sorted((Tree(f) for f in enumerate_forests(n - 1)), key=lambda t: t.key))


@lru_cache(maxsize=None)
def enumerate_forests(n: int) -> tuple[Forest, ...]:
    """All forests with exactly ``n`` vertices, sorted by canonical key."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    pool = sorted((t for d in range(1, n + 1) for t in trees_of_degree(d)), key=lambda t: t.key)
    out: list[Forest] = []

    # multisets as non-decreasing index sequences into the pool
    def grow(remaining: int, start: int, acc: list[Tree]) -> None:
        if remaining == 0:
            out.append(Forest(acc))
            return
        for i in range(start, len(pool)):
            t = pool[i]
            if t.degree <= remaining:
                acc.append(t)
                grow(remaining - t.degree, i, acc)
                acc.pop()

    grow(n, 0, [])
    return tuple(sorted(out, key=lambda f: f.key))


def forests_up_to(n: int) -> list[Forest]:
    return [f for d in range(n + 1) for f in enumerate_forests(d)]


def _forest_key_order(f: Forest) -> tuple[int, str]:
    return (f.degree, f.key)


class ForestSum(Combination):
    """Element of the forest algebra: rational combination of forests."""

    __slots__ = ()

    @classmethod
    def _coerce(cls, other: Any):
        if isinstance(other, cls):
            return other
        if isinstance(other, (Forest, Tree)):
            return cls._wrap({as_forest(other): 1})
        if isinstance(other, int) and not isinstance(other, bool):
            return cls._wrap({EMPTY: other} if other else {})
        return NotImplemented

    @classmethod
    def of(cls, f: Forest | Tree | str, c: Scalar = 1) -> ForestSum:
        return cls({as_forest(f): c})

    @staticmethod
    def _product(a: Forest, b: Forest):
        return {a * b: 1}

    def sorted_items(self) -> list[tuple[Forest, Scalar]]:
        return sorted(self._terms.items(), key=lambda kv: _forest_key_order(kv[0]))

    def __repr__(self) -> str:
        return f"ForestSum({str(self)!r})"

    def __str__(self) -> str:
        return format_terms((str(f), c) for f, c in self.sorted_items())


class TensorSum(Combination):
    """Element of H (x) H: rational combination of pairs of forests."""

    __slots__ = ()

    @staticmethod
    def _product(a: tuple[Forest, Forest], b: tuple[Forest, Forest]):
        return {(a[0] * b[0], a[1] * b[1]): 1}

    def swap(self) -> TensorSum:
        return TensorSum._wrap({(r, l): c for (l, r), c in self._terms.items()})

    def triples(self) -> list[tuple[str, str, Scalar]]:
        """(left key, right key, coefficient), sorted lexicographically by keys."""
        return sorted((l.key, r.key, c) for (l, r), c in self._terms.items())

    def __repr__(self) -> str:
        return f"TensorSum({str(self)!r})"

    def __str__(self) -> str:
        return format_terms((f"{l or '1'} ⊗ {r or '1'}", c) for l, r, c in self.triples())


def format_terms(terms: Iterable[tuple[str, Scalar]]) -> str:
    parts = []
    for label, c in terms:
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = label if mag == 1 else f"{mag}*{label}"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first = parts[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def forest_sum_product(a: ForestSum | Forest, b: ForestSum | Forest) -> ForestSum:
    return ForestSum._coerce(a) * ForestSum._coerce(b)
