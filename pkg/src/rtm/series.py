"""Truncated power series in u with coefficients in Q<x,y> or in the forest algebra.

``EndoSeries`` describes an algebra endomorphism of Q<x,y>[[u]] fixing u by
the images of x and y.  Everything is truncated at a fixed order N.

The endomorphism ``delta_u(a, N)`` sends x to ``x (1 + a y u)^(-1)`` and y to
``(x + y) - x (1 + a y u)^(-1)``, so that x + y is fixed and u = 0 gives the
identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from rtm.errors import DomainError
from rtm.forest import EMPTY, ForestSum
from rtm.hopf import ladder
from rtm.linear import Scalar, as_scalar
from rtm.tree_maps import apply, partial_n
from rtm.words import WordSum, as_word_sum


def _zero_coeffs(order: int) -> list[WordSum]:
    return [WordSum.zero() for _ in range(order + 1)]


@dataclass(frozen=True)
class PolySeries:
    """c_0 + c_1 u + ... + c_N u^N with WordSum coefficients."""

    coeffs: tuple[WordSum, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def constant(cls, p: WordSum | str, order: int) -> PolySeries:
        cs = _zero_coeffs(order)
        cs[0] = as_word_sum(p)
        return cls(tuple(cs))

    @classmethod
    def from_list(cls, coeffs: Sequence[WordSum | str | int], order: int | None = None) -> PolySeries:
        order = len(coeffs) - 1 if order is None else order
        cs = _zero_coeffs(order)
        for i, c in enumerate(coeffs[: order + 1]):
            cs[i] = as_word_sum(c)
        return cls(tuple(cs))

    def __getitem__(self, n: int) -> WordSum:
        return self.coeffs[n] if 0 <= n <= self.order else WordSum.zero()

    def __add__(self, other: PolySeries) -> PolySeries:
        _same_order(self, other)
        return PolySeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: PolySeries) -> PolySeries:
        _same_order(self, other)
        return PolySeries(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, c: Scalar) -> PolySeries:
        return PolySeries(tuple(a.scale(c) for a in self.coeffs))

    def __mul__(self, other: PolySeries) -> PolySeries:
        _same_order(self, other)
        n = self.order
        out = _zero_coeffs(n)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(n - i + 1):
                b = other.coeffs[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return PolySeries(tuple(out))

    def map(self, fn: Callable[[WordSum], WordSum]) -> PolySeries:
        return PolySeries(tuple(fn(c) for c in self.coeffs))

    def __str__(self) -> str:
        return format_series(self.coeffs)


def _same_order(a, b) -> None:
    if a.order != b.order:
        raise DomainError(f"truncation orders differ: {a.order} vs {b.order}")


def format_series(coeffs) -> str:
    parts = []
    for n, c in enumerate(coeffs):
        if not c and n:
            continue
        if n == 0:
            parts.append(str(c))
        elif n == 1:
            parts.append(f"({c})·u")
        else:
            parts.append(f"({c})·u^{n}")
    return " + ".join(parts)


@dataclass(frozen=True)
class EndoSeries:
    """Endomorphism of Q<x,y>[[u]] fixing u, given by the images of x and y."""

    x_image: PolySeries
    y_image: PolySeries

    def __post_init__(self):
        _same_order(self.x_image, self.y_image)

    @property
    def order(self) -> int:
        return self.x_image.order

    @classmethod
    def identity(cls, order: int) -> EndoSeries:
        return cls(PolySeries.constant("x", order), PolySeries.constant("y", order))

    def image(self, letter: str) -> PolySeries:
        return self.x_image if letter == "x" else self.y_image

    def is_identity_at_zero(self) -> bool:
        return self.x_image[0] == WordSum.of("x") and self.y_image[0] == WordSum.of("y")

    def __eq__(self, other) -> bool:
        if not isinstance(other, EndoSeries):
            return NotImplemented
        return self.x_image == other.x_image and self.y_image == other.y_image

    def __hash__(self):
        return hash((self.x_image, self.y_image))

    def __str__(self) -> str:
        return f"x ↦ {self.x_image}\ny ↦ {self.y_image}"


def delta_u(scale: Scalar | str, order: int) -> EndoSeries:
    """x -> x (1 + a y u)^(-1), y -> (x + y) - image of x, truncated at ``order``."""
    if order < 0:
        raise DomainError("order must be non-negative")
    a = as_scalar(scale)
    xs = [WordSum.of("x" + "y" * k, (-a) ** k) for k in range(order + 1)]
    x_img = PolySeries(tuple(xs))
    ys = [WordSum.zero() for _ in range(order + 1)]
    ys[0] = WordSum.of("x") + WordSum.of("y")
    y_img = PolySeries(tuple(ys)) - x_img
    return EndoSeries(x_img, y_img)


def endo_apply(e: EndoSeries, p: WordSum | str | PolySeries) -> PolySeries:
    """Image of a polynomial (or a truncated series) under ``e``."""
    if isinstance(p, PolySeries):
        _same_order(e.x_image, p)
        out = PolySeries(tuple(_zero_coeffs(e.order)))
        for n, c in enumerate(p.coeffs):
            if not c:
                continue
            img = _apply_poly(e, c)
            shifted = (WordSum.zero(),) * n + img.coeffs[: e.order + 1 - n]
            out = out + PolySeries(shifted)
        return out
    return _apply_poly(e, as_word_sum(p))


def _apply_poly(e: EndoSeries, p: WordSum) -> PolySeries:
    n = e.order
    out = _zero_coeffs(n)
    cache: dict[str, PolySeries] = {}
    for word, c in p.items():
        img = cache.get(word)
        if img is None:
            img = PolySeries.constant(WordSum.of(""), n)
            for letter in word:
                img = img * e.image(letter)
            cache[word] = img
        for k in range(n + 1):
            if img.coeffs[k]:
                out[k] = out[k] + img.coeffs[k].scale(c)
    return PolySeries(tuple(out))


def endo_compose(e1: EndoSeries, e2: EndoSeries) -> EndoSeries:
    """e1 o e2 (apply e2 first)."""
    _same_order(e1.x_image, e2.x_image)
    return EndoSeries(endo_apply(e1, e2.x_image), endo_apply(e1, e2.y_image))


def endo_inverse(e: EndoSeries) -> EndoSeries:
    """Two-sided inverse to order N, solved coefficient by coefficient."""
    if not e.is_identity_at_zero():
        raise DomainError("endomorphism is not the identity at u = 0; not invertible in this class")
    n = e.order
    inv = EndoSeries.identity(n)
    for k in range(1, n + 1):
        # e(f_k u^k) = f_k u^k + higher order, so subtracting the order-k defect fixes order k
        comp = endo_compose(e, inv)
        fx = list(inv.x_image.coeffs)
        fy = list(inv.y_image.coeffs)
        fx[k] = fx[k] - comp.x_image[k]
        fy[k] = fy[k] - comp.y_image[k]
        inv = EndoSeries(PolySeries(tuple(fx)), PolySeries(tuple(fy)))
    return inv


def derivation_series_apply(coeffs: Callable[[int], Scalar], p: PolySeries) -> PolySeries:
    """A(p) with A = sum_n coeffs(n) partial_n u^n (n >= 1)."""
    n = p.order
    out = _zero_coeffs(n)
    for m, c in enumerate(p.coeffs):
        if not c:
            continue
        for j in range(1, n - m + 1):
            a = as_scalar(coeffs(j))
            if a:
                out[m + j] = out[m + j] + partial_n(j, c).scale(a)
    return PolySeries(tuple(out))


def exp_derivation_series(coeffs: Callable[[int], Scalar], target: WordSum | str, order: int) -> PolySeries:
    """exp(sum_n coeffs(n) partial_n u^n) applied to ``target``, truncated at ``order``.

    The series A raises the u-order, so A^k vanishes to order N for k > N and the
    exponential is the finite sum of A^k(target)/k!.
    """
    term = PolySeries.constant(target, order)
    total = term
    for k in range(1, order + 1):
        # term holds A^k(target)/k!
        term = derivation_series_apply(coeffs, term).scale(Fraction(1, k))
        total = total + term
    return total


def ladder_letter_series(letter: str, order: int) -> PolySeries:
    """sum_n lambda_n(letter) u^n as a word-level series."""
    return PolySeries(tuple(apply(ladder(n), letter) if n else as_word_sum(letter) for n in range(order + 1)))


def geometric_ladder_image(order: int) -> PolySeries:
    """x + sum_{n>=1} x (x+2y)^(n-1) y u^n."""
    step = WordSum.of("x") + WordSum.of("y", 2)
    cs = [WordSum.of("x")]
    mid = WordSum.of("x")
    for _ in range(1, order + 1):
        cs.append(mid * WordSum.of("y"))
        mid = mid * step
    return PolySeries(tuple(cs))


@dataclass(frozen=True)
class HSeries:
    """Truncated series with ForestSum coefficients (commutative coefficient ring)."""

    coeffs: tuple[ForestSum, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> ForestSum:
        return self.coeffs[n] if 0 <= n <= self.order else ForestSum.zero()

    def __add__(self, other: HSeries) -> HSeries:
        _same_order(self, other)
        return HSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, c: Scalar) -> HSeries:
        return HSeries(tuple(a.scale(c) for a in self.coeffs))

    def __mul__(self, other: HSeries) -> HSeries:
        _same_order(self, other)
        n = self.order
        out = [ForestSum.zero() for _ in range(n + 1)]
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(n - i + 1):
                if other.coeffs[j]:
                    out[i + j] = out[i + j] + a * other.coeffs[j]
        return HSeries(tuple(out))

    def __str__(self) -> str:
        return format_series(self.coeffs)


def lambda_series(order: int) -> HSeries:
    """sum_{n>=0} lambda_n u^n."""
    return HSeries(tuple(ForestSum.of(ladder(n)) for n in range(order + 1)))


def hseries_log(a: HSeries) -> HSeries:
    """log(1 + B) = sum_d (-1)^(d+1) B^d / d, where B is ``a`` minus its constant term 1."""
    if a[0] != ForestSum.of(EMPTY):
        raise DomainError("log needs constant coefficient equal to the empty forest")
    n = a.order
    b = HSeries((ForestSum.zero(),) + a.coeffs[1:])
    power = b
    total = HSeries(tuple(ForestSum.zero() for _ in range(n + 1)))
    for d in range(1, n + 1):
        total = total + power.scale(Fraction((-1) ** (d + 1), d))
        power = power * b
    return total
