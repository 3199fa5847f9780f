"""Connes-Kreimer Hopf structure on the forest algebra.

Coproduct, counit and antipode are computed per basis forest and memoized on
the canonical key; the public functions extend them linearly to ForestSums.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Callable, Iterator, Mapping

from rtm.forest import EMPTY, Forest, ForestSum, TensorSum, Tree, as_forest
from rtm.linear import Scalar, add_into

ForestLike = ForestSum | Forest | Tree


def _as_sum(a: ForestLike) -> ForestSum:
    if isinstance(a, ForestSum):
        return a
    return ForestSum._wrap({as_forest(a): 1})


@lru_cache(maxsize=None)
def _tree_coproduct(t: Tree) -> Mapping[tuple[Forest, Forest], int]:
    # Delta(t) = t (x) 1 + (id (x) B+) Delta(f_t)
    out: dict[tuple[Forest, Forest], int] = {(t.as_forest(), EMPTY): 1}
    for (left, right), c in forest_coproduct(t.children).items():
        add_into(out, {(left, Tree(right).as_forest()): c})
    return out


@lru_cache(maxsize=None)
def forest_coproduct(f: Forest) -> Mapping[tuple[Forest, Forest], int]:
    """Coproduct of a basis forest as a read-only dict (left, right) -> int."""
    out: dict[tuple[Forest, Forest], int] = {(EMPTY, EMPTY): 1}
    for t in f.trees:
        nxt: dict[tuple[Forest, Forest], int] = {}
        for ((l1, r1), c1), ((l2, r2), c2) in product(out.items(), _tree_coproduct(t).items()):
            add_into(nxt, {(l1 * l2, r1 * r2): c1 * c2})
        out = nxt
    return out


def coproduct(a: ForestLike) -> TensorSum:
    out: dict = {}
    for f, c in _as_sum(a).items():
        add_into(out, forest_coproduct(f), c)
    return TensorSum._wrap(out)


def reduced_coproduct_terms(f: Forest) -> Iterator[tuple[Forest, Forest, int]]:
    """Terms of Delta(f) other than f (x) 1 and 1 (x) f."""
    for (left, right), c in forest_coproduct(f).items():
        if left and right:
            yield left, right, c


def counit(a: ForestLike) -> Scalar:
    return _as_sum(a).coefficient(EMPTY)


@lru_cache(maxsize=None)
def _tree_antipode(t: Tree) -> Mapping[Forest, int]:
    # S(t) = -t - sum' S(t') t''
    f = t.as_forest()
    out: dict[Forest, int] = {f: -1}
    for left, right, c in reduced_coproduct_terms(f):
        for g, s in forest_antipode(left).items():
            add_into(out, {g * right: 1}, -c * s)
    return out


@lru_cache(maxsize=None)
def forest_antipode(f: Forest) -> Mapping[Forest, int]:
    out: dict[Forest, int] = {EMPTY: 1}
    for t in f.trees:
        nxt: dict[Forest, int] = {}
        for (g, c1), (h, c2) in product(out.items(), _tree_antipode(t).items()):
            add_into(nxt, {g * h: 1}, c1 * c2)
        out = nxt
    return out


def antipode(a: ForestLike) -> ForestSum:
    out: dict = {}
    for f, c in _as_sum(a).items():
        add_into(out, forest_antipode(f), c)
    return ForestSum._wrap(out)


def grading(a: ForestLike) -> ForestSum:
    """The grading operator Y: each forest scaled by its vertex count."""
    return ForestSum({f: c * f.degree for f, c in _as_sum(a).items()})


def convolve(left_map: Callable[[Forest], Mapping[Forest, Scalar]],
             right_map: Callable[[Forest], Mapping[Forest, Scalar]],
             a: ForestLike) -> ForestSum:
    """m o (left_map (x) right_map) o Delta, applied to ``a``."""
    out: dict = {}
    for f, c in _as_sum(a).items():
        for (left, right), k in forest_coproduct(f).items():
            lm = left_map(left)
            if not lm:
                continue
            rm = right_map(right)
            for g, cg in lm.items():
                for h, ch in rm.items():
                    add_into(out, {g * h: 1}, c * k * cg * ch)
    return ForestSum._wrap(out)


def dynkin(a: ForestLike) -> ForestSum:
    """Dynkin operator m o (S (x) Y) o Delta."""
    return convolve(forest_antipode, lambda g: {g: g.degree} if g.degree else {}, a)


@lru_cache(maxsize=None)
def _ladder_tree(m: int) -> Forest:
    f = EMPTY
    for _ in range(m):
        f = Tree(f).as_forest()
    return f


def ladder(m: int) -> Forest:
    """The branchless tree with ``m`` vertices; ladder(0) is the empty forest."""
    if m < 0:
        raise ValueError("ladder height must be non-negative")
    return _ladder_tree(m)


def ladder_product(heights) -> Forest:
    return Forest(t for m in heights if m for t in ladder(m).trees)


def compositions(n: int) -> Iterator[tuple[int, ...]]:
    """Ordered tuples of positive integers summing to ``n`` (one empty tuple for n=0)."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


# tensor helpers used by the axiom checks

def tensor_apply(t: TensorSum, left_map: Callable[[Forest], Mapping], right_map: Callable[[Forest], Mapping]) -> dict:
    """(left_map (x) right_map)(t) as a dict over pairs of basis keys."""
    out: dict = {}
    for (l, r), c in t.items():
        for a, ca in left_map(l).items():
            for b, cb in right_map(r).items():
                add_into(out, {(a, b): 1}, c * ca * cb)
    return out


def coassociativity_sides(f: Forest) -> tuple[dict, dict]:
    """((Delta (x) id) Delta f, (id (x) Delta) Delta f) as dicts over forest triples."""
    lhs: dict = {}
    rhs: dict = {}
    for (l, r), c in forest_coproduct(f).items():
        for (a, b), k in forest_coproduct(l).items():
            add_into(lhs, {(a, b, r): 1}, c * k)
        for (a, b), k in forest_coproduct(r).items():
            add_into(rhs, {(l, a, b): 1}, c * k)
    return lhs, rhs


def hopf_axiom_failures(forests) -> list[tuple[str, str]]:
    """Check coassociativity, counit and antipode axioms; return (axiom, forest key) failures."""
    failures = []
    for f in forests:
        lhs, rhs = coassociativity_sides(f)
        if lhs != rhs:
            failures.append(("coassociativity", f.key))
        ident = {f: 1}
        left_counit = tensor_apply(coproduct(f), lambda g: {EMPTY: 1} if not g else {}, lambda g: {g: 1})
        right_counit = tensor_apply(coproduct(f), lambda g: {g: 1}, lambda g: {EMPTY: 1} if not g else {})
        if {b: c for (_, b), c in left_counit.items()} != ident:
            failures.append(("counit-left", f.key))
        if {a: c for (a, _), c in right_counit.items()} != ident:
            failures.append(("counit-right", f.key))
        eps = 1 if not f else 0
        s_id = convolve(forest_antipode, lambda g: {g: 1}, f)
        id_s = convolve(lambda g: {g: 1}, forest_antipode, f)
        if s_id != ForestSum._wrap({EMPTY: eps} if eps else {}):
            failures.append(("antipode-left", f.key))
        if id_s != ForestSum._wrap({EMPTY: eps} if eps else {}):
            failures.append(("antipode-right", f.key))
    return failures


def is_cocommutative(a: ForestLike) -> bool:
    d = coproduct(a)
    return d == d.swap()
