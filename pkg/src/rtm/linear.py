"""Sparse linear combinations with exact rational coefficients.

A :class:`Combination` maps hashable basis elements to nonzero scalars.  Scalars
are ``int`` or :class:`fractions.Fraction`; integral fractions are stored as
``int`` so that the common integer case stays fast.  Floats are refused.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Iterable, Iterator, Mapping, Union

Scalar = Union[int, Fraction]


def as_scalar(c: Any) -> Scalar:
    if isinstance(c, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, str):
        return as_scalar(Fraction(c))
    raise TypeError(f"exact rational scalar required, got {type(c).__name__}")


def is_scalar(c: Any) -> bool:
    return isinstance(c, (int, Fraction)) and not isinstance(c, bool)


def format_scalar(c: Scalar) -> str:
    return str(c)


class Combination:
    """Finitely supported map basis -> scalar with eager zero removal.

    Subclasses set ``_product`` for the multiplication of two basis elements
    (returning a mapping basis -> scalar) and may override ``_coerce`` to lift
    bare basis elements.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Any, Any] | Iterable[tuple[Any, Any]] | None = None):
        data: dict[Any, Scalar] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for key, c in items:
                c = as_scalar(c)
                if c:
                    data[key] = data.get(key, 0) + c
        self._terms = {k: _norm(c) for k, c in data.items() if c}

    @classmethod
    def _wrap(cls, data: dict):
        # trusted constructor: data must already be zero-free
        obj = cls.__new__(cls)
        obj._terms = data
        return obj

    @classmethod
    def zero(cls):
        return cls._wrap({})

    @classmethod
    def _coerce(cls, other: Any):
        if isinstance(other, cls):
            return other
        return NotImplemented

    # mapping-like access
    def items(self) -> Iterator[tuple[Any, Scalar]]:
        return iter(self._terms.items())

    def support(self) -> list:
        return list(self._terms)

    def coefficient(self, key: Any) -> Scalar:
        return self._terms.get(key, 0)

    def as_dict(self) -> dict:
        return dict(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def __contains__(self, key: Any) -> bool:
        return key in self._terms

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        other = type(self)._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash((type(self).__name__, frozenset(self._terms.items())))

    # linear structure
    def __add__(self, other: Any):
        other = type(self)._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return type(self)._wrap(add_into(dict(self._terms), other._terms))

    __radd__ = __add__

    def __neg__(self):
        return type(self)._wrap({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: Any):
        other = type(self)._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return type(self)._wrap(add_into(dict(self._terms), other._terms, -1))

    def __rsub__(self, other: Any):
        return (-self) + other

    def scale(self, c: Any):
        c = as_scalar(c)
        if not c:
            return type(self).zero()
        return type(self)._wrap({k: _norm(v * c) for k, v in self._terms.items()})

    def __mul__(self, other: Any):
        if is_scalar(other):
            return self.scale(other)
        other = type(self)._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict = {}
        for a, ca in self._terms.items():
            for b, cb in other._terms.items():
                add_into(out, type(self)._product(a, b), ca * cb)
        return type(self)._wrap(out)

    def __rmul__(self, other: Any):
        if is_scalar(other):
            return self.scale(other)
        other = type(self)._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self

    def __truediv__(self, c: Any):
        return self.scale(Fraction(1) / as_scalar(c))

    @staticmethod
    def _product(a: Any, b: Any) -> Mapping[Any, Scalar]:
        raise TypeError("no product defined")


def _norm(c: Scalar) -> Scalar:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def add_into(acc: dict, terms: Mapping[Any, Scalar], factor: Scalar = 1) -> dict:
    """Accumulate ``factor * terms`` into ``acc`` in place, dropping zeros."""
    for k, c in terms.items():
        v = acc.get(k, 0) + factor * c
        if v:
            acc[k] = _norm(v)
        else:
            acc.pop(k, None)
    return acc
