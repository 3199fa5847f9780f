"""Rooted tree maps: each forest acts as a linear operator on Q<x,y>.

For a word ``w u`` ending in the letter ``u`` the action recurses through the
coproduct, ``f(w u) = sum f'(w) f''(u)``.  On single letters:

* the one-vertex tree sends x to xy and y to -xy,
* a tree ``B+(g)`` sends u to ``R_y R_{x+2y} R_y^{-1} g(u)``,
* a product ``g h`` of trees sends u to ``g(h(u))``.

The empty forest is the identity and a non-empty forest kills the empty word.
Internally words are strings and sums are plain dicts with int coefficients;
cached dicts are shared and must not be mutated.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Mapping, Sequence

from rtm.errors import ConsistencyError, DomainError
from rtm.forest import Forest, ForestSum, Tree, as_forest
from rtm.hopf import compositions, forest_coproduct, ladder_product
from rtm.linear import Scalar, add_into
from rtm.words import WordSum, as_word_sum, check_word, strip_final_y

DEFAULT_CACHE_BUDGET = 1 << 18

Terms = Mapping[str, int]


def _letter_of_tree(t: Tree, u: str) -> Terms:
    if not t.children:
        return {"xy": 1} if u == "x" else {"xy": -1}
    inner = _letter(t.children, u)
    try:
        stripped = strip_final_y(dict(inner))
    except DomainError as exc:  # unreachable for letters
        raise ConsistencyError(f"R_y^-1 failed inside {t.key}: {exc}") from exc
    out: dict[str, int] = {}
    for w, c in stripped.items():
        add_into(out, {w + "xy": c, w + "yy": 2 * c})
    return out


def _compose(trees: Sequence[Tree], u: str) -> Terms:
    # f = t1 ... tk acts as t1(t2(...tk(u))); the last tree is applied first
    cur: Terms = _letter_of_tree(trees[-1], u)
    for t in reversed(trees[:-1]):
        tf = t.as_forest()
        nxt: dict[str, int] = {}
        for w, c in cur.items():
            add_into(nxt, _word(tf, w), c)
        cur = nxt
    return cur


def _letter_impl(f: Forest, u: str) -> Terms:
    if len(f.trees) == 1:
        return _letter_of_tree(f.trees[0], u)
    return _compose(f.trees, u)


def _word_impl(f: Forest, w: str) -> Terms:
    if not f:
        return {w: 1}
    if not w:
        return {}
    head, u = w[:-1], w[-1]
    out: dict[str, int] = {}
    for (left, right), c in forest_coproduct(f).items():
        lw = _word(left, head)
        if not lw:
            continue
        ru = _letter(right, u) if right else {u: 1}
        for a, ca in lw.items():
            k = c * ca
            for b, cb in ru.items():
                key = a + b
                v = out.get(key, 0) + k * cb
                if v:
                    out[key] = v
                else:
                    del out[key]
    return out


_letter = lru_cache(maxsize=DEFAULT_CACHE_BUDGET)(_letter_impl)
_word = lru_cache(maxsize=DEFAULT_CACHE_BUDGET)(_word_impl)


def set_cache_budget(maxsize: int | None) -> None:
    """Rebuild the memo tables with a new size limit (None = unbounded, 0 = off)."""
    global _letter, _word
    _letter = lru_cache(maxsize=maxsize)(_letter_impl)
    _word = lru_cache(maxsize=maxsize)(_word_impl)


def clear_caches() -> None:
    _letter.cache_clear()
    _word.cache_clear()
    _partial_letter.cache_clear()


def apply_letter(f: Forest | Tree | str, u: str) -> WordSum:
    f = as_forest(f)
    if not f:
        raise DomainError("apply_letter needs a non-empty forest")
    if u not in ("x", "y"):
        raise DomainError(f"not a letter: {u!r}")
    return WordSum(_letter(f, u))


def apply_letter_in_order(f: Forest | Tree | str, u: str, order: Sequence[int]) -> WordSum:
    """Letter action of a product forest composing its trees in a given order.

    ``order`` is a permutation of ``range(len(f.trees))``; the action is
    ``t[order[0]](t[order[1]](...))``.  Used to check order independence.
    """
    f = as_forest(f)
    trees = [f.trees[i] for i in order]
    if sorted(order) != list(range(len(f.trees))):
        raise ValueError("order must be a permutation of the tree indices")
    return WordSum(_compose(trees, u))


def _forest_terms(f: ForestSum | Forest | Tree | str) -> Mapping[Forest, Scalar]:
    if isinstance(f, ForestSum):
        return dict(f.items())
    return {as_forest(f): 1}


def apply(f: ForestSum | Forest | Tree | str, w: WordSum | str) -> WordSum:
    """Action of the tree map of ``f`` on ``w``, linear in both arguments."""
    out: dict[str, Scalar] = {}
    for g, cg in _forest_terms(f).items():
        for word, cw in as_word_sum(w).items():
            add_into(out, _word(g, word), cg * cw)
    return WordSum._wrap(out)


def apply_split(f: Forest | Tree | str, v: str, w: str) -> WordSum:
    """M(Delta(f)(v (x) w)), the action on ``v w`` computed by splitting after ``v``."""
    f = as_forest(f)
    out: dict[str, Scalar] = {}
    for (left, right), c in forest_coproduct(f).items():
        lv = _word(left, check_word(v))
        if not lv:
            continue
        rw = _word(right, check_word(w))
        for a, ca in lv.items():
            for b, cb in rw.items():
                add_into(out, {a + b: 1}, c * ca * cb)
    return WordSum._wrap(out)


@lru_cache(maxsize=None)
def _partial_letter(n: int, u: str) -> Terms:
    sign = 1 if u == "x" else -1
    return {"x" + "".join(mid) + "y": sign for mid in product("xy", repeat=n - 1)}


def partial_n(n: int, w: WordSum | str) -> WordSum:
    """The derivation with x -> x(x+y)^(n-1)y and y -> -x(x+y)^(n-1)y."""
    if n < 1:
        raise DomainError("partial_n needs n >= 1")
    out: dict[str, Scalar] = {}
    for word, c in as_word_sum(w).items():
        for i, u in enumerate(word):
            pre, post = word[:i], word[i + 1:]
            for img, s in _partial_letter(n, u).items():
                add_into(out, {pre + img + post: 1}, c * s)
    return WordSum._wrap(out)


def ladder_composition_sum(n: int, weight) -> ForestSum:
    """sum over compositions (m1..md) of n of weight(d) * lambda_m1 ... lambda_md."""
    out: dict[Forest, Scalar] = {}
    for comp in compositions(n):
        add_into(out, {ladder_product(comp): 1}, weight(len(comp)))
    return ForestSum._wrap(out)


def partial_as_forest_sum(n: int) -> ForestSum:
    """partial_n written as a combination of products of ladder trees."""
    if n < 1:
        raise DomainError("partial_as_forest_sum needs n >= 1")
    scale = Fraction(n, 2**n - 1)
    return ladder_composition_sum(n, lambda d: scale * Fraction((-1) ** (d + 1), d))

