"""Linear relations among multiple zeta values, as exact rational row vectors.

A row records ``Z(f(w)) = 0`` (tree-map rows) or ``Z(partial_n(w)) = 0``
(derivation rows) in the z-basis: columns of a weight block are the admissible
z-indices of that weight in lexicographic order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from pathlib import Path
from typing import Iterable, Iterator, Sequence, TextIO

from rtm.errors import ConsistencyError, DimensionError, DomainError
from rtm.forest import Forest, Tree, as_forest, enumerate_forests, format_terms
from rtm.tree_maps import apply, partial_n
from rtm.words import (
    WordSum,
    ZIndex,
    admissible_indices,
    admissible_words,
    check_word,
    format_zindex,
    is_admissible_word,
    parse_zindex,
    word_order,
    z_decode,
    z_encode,
)

FORMAT_VERSION = 1


@dataclass(frozen=True)
class RelationRow:
    weight: int
    forest: str | None  # canonical key; None for derivation rows
    word: str
    coeffs: tuple[tuple[ZIndex, Fraction], ...]
    derivation: int | None = None

    def as_dict(self) -> dict[ZIndex, Fraction]:
        return dict(self.coeffs)

    def word_sum(self) -> WordSum:
        return WordSum({z_decode(k): c for k, c in self.coeffs})

    def vector(self, columns: Sequence[ZIndex]) -> list[Fraction]:
        d = self.as_dict()
        return [d.get(k, Fraction(0)) for k in columns]

    def sort_key(self) -> tuple:
        if self.derivation is None:
            return (self.weight, 0, self.forest, word_order(self.word))
        return (self.weight, 1, self.derivation, word_order(self.word))

    @property
    def source(self) -> str:
        if self.derivation is not None:
            return f"d{self.derivation}({self.word})"
        return f"{self.forest}({self.word})"

    def to_json(self) -> str:
        rec = {
            "weight": self.weight,
            "forest": self.forest,
            "word": self.word or "1",
            "coeffs": [[format_zindex(k), str(c.numerator), str(c.denominator)] for k, c in self.coeffs],
        }
        if self.derivation is not None:
            rec["derivation"] = self.derivation
        return json.dumps(rec, separators=(",", ":"))

    @classmethod
    def from_json(cls, line: str) -> RelationRow:
        rec = json.loads(line)
        coeffs = tuple((parse_zindex(k), Fraction(int(n), int(d))) for k, n, d in rec["coeffs"])
        word = "" if rec["word"] == "1" else check_word(rec["word"])
        return cls(int(rec["weight"]), rec["forest"], word, coeffs, rec.get("derivation"))

    def to_text(self) -> str:
        body = format_terms((format_zindex(k), c) for k, c in self.coeffs)
        return f"w={self.weight} {self.source}: {body}"


def _row_from_image(weight: int, forest: str | None, word: str, image: WordSum,
                    derivation: int | None = None) -> RelationRow:
    coeffs: dict[ZIndex, Fraction] = {}
    for w, c in image.items():
        if not is_admissible_word(w) or len(w) != weight:
            raise ConsistencyError(f"image word {w!r} of {forest or derivation}({word}) is not admissible of weight {weight}")
        coeffs[z_encode(w)] = Fraction(c)
    return RelationRow(weight, forest, word, tuple(sorted(coeffs.items())), derivation)


def _check_admissible_input(w: str) -> str:
    w = check_word(w)
    if not w:
        raise DomainError("the empty word gives only the trivial relation")
    if not is_admissible_word(w):
        raise DomainError(f"word {w!r} is not admissible")
    return w


def relation_from(f: Forest | Tree | str, w: str) -> RelationRow:
    """The relation Z(f(w)) = 0 in the z-basis."""
    f = as_forest(f)
    if not f:
        raise DomainError("relation_from needs a non-empty forest")
    w = _check_admissible_input(w)
    return _row_from_image(f.degree + len(w), f.key, w, apply(f, w))


def derivation_relation_from(n: int, w: str) -> RelationRow:
    """The relation Z(partial_n(w)) = 0, computed from the derivation directly."""
    if n < 1:
        raise DomainError("derivation index must be >= 1")
    w = _check_admissible_input(w)
    return _row_from_image(n + len(w), None, w, partial_n(n, w), derivation=n)


@dataclass(frozen=True)
class RunConfig:
    max_degree: int
    max_weight: int
    derivations: bool = False
    eps: Fraction = Fraction(1, 10**30)
    out: str | None = None
    format: str = "jsonl"

    def __post_init__(self):
        if self.max_degree < 1 or self.max_weight < 1:
            raise DomainError("max degree and max weight must be >= 1")
        if self.format not in ("jsonl", "text"):
            raise DomainError(f"unknown format {self.format!r}")


@dataclass
class RelationSet:
    rows: list[RelationRow]
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        self.rows = sorted(self.rows, key=RelationRow.sort_key)

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self) -> Iterator[RelationRow]:
        return iter(self.rows)

    def weights(self) -> list[int]:
        return sorted({r.weight for r in self.rows})

    def at_weight(self, weight: int) -> list[RelationRow]:
        return [r for r in self.rows if r.weight == weight]

    def tree_rows(self) -> RelationSet:
        return RelationSet([r for r in self.rows if r.derivation is None], dict(self.metadata))

    def derivation_rows(self) -> RelationSet:
        return RelationSet([r for r in self.rows if r.derivation is not None], dict(self.metadata))


def tree_map_rows(max_degree: int, max_weight: int) -> Iterator[RelationRow]:
    for weight in range(3, max_weight + 1):
        for d in range(1, min(max_degree, weight - 2) + 1):
            for f in enumerate_forests(d):
                for w in admissible_words(weight - d):
                    yield relation_from(f, w)


def derivation_rows(max_weight: int) -> Iterator[RelationRow]:
    for weight in range(3, max_weight + 1):
        for n in range(1, weight - 1):
            for w in admissible_words(weight - n):
                yield derivation_relation_from(n, w)


def generate(cfg: RunConfig) -> RelationSet:
    rows = list(tree_map_rows(cfg.max_degree, cfg.max_weight))
    if cfg.derivations:
        rows.extend(derivation_rows(cfg.max_weight))
    meta = {
        "format_version": FORMAT_VERSION,
        "max_degree": cfg.max_degree,
        "max_weight": cfg.max_weight,
        "derivations": cfg.derivations,
    }
    return RelationSet(rows, meta)


def write_relations(rs: RelationSet, stream: TextIO, fmt: str = "jsonl") -> None:
    if fmt == "jsonl":
        for r in rs.rows:
            stream.write(r.to_json() + "\n")
    elif fmt == "text":
        meta = " ".join(f"{k}={v}" for k, v in sorted(rs.metadata.items()))
        stream.write(f"# relations {meta}\n")
        for r in rs.rows:
            stream.write(r.to_text() + "\n")
    else:
        raise DomainError(f"unknown format {fmt!r}")


def read_relations(path: str | Path) -> RelationSet:
    rows = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                rows.append(RelationRow.from_json(line))
            except (ValueError, KeyError, TypeError) as exc:
                raise DomainError(f"{path}:{lineno}: bad relation record ({exc})") from exc
    return RelationSet(rows, {"source": str(path)})


# exact linear algebra

def _integer_rows(rows: Iterable[Sequence[Fraction | int]]) -> list[list[int]]:
    out = []
    width = None
    for row in rows:
        row = [Fraction(c) for c in row]
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise DimensionError(f"ragged matrix: row of length {len(row)} where {width} expected")
        m = lcm(*(c.denominator for c in row)) if row else 1
        out.append([int(c * m) for c in row])
    return out


def bareiss_echelon(matrix: list[list[int]]) -> tuple[int, list[list[int]]]:
    """Fraction-free elimination; returns (rank, the nonzero echelon rows).

    Pivots are taken from the first column with a nonzero entry at or below the
    current row.  Every division is exact; a remainder signals a bug.
    """
    a = [row[:] for row in matrix]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    rank = 0
    prev = 1
    for col in range(ncols):
        if rank == nrows:
            break
        piv = next((i for i in range(rank, nrows) if a[i][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][col]
        prow = a[rank]
        for i in range(rank + 1, nrows):
            row = a[i]
            f = row[col]
            for j in range(col + 1, ncols):
                q, r = divmod(p * row[j] - f * prow[j], prev)
                if r:
                    raise ConsistencyError("inexact division in Bareiss elimination")
                row[j] = q
            row[col] = 0
        prev = p
        rank += 1
    return rank, a[:rank]


def _matrix_of(rows) -> list[list[int]]:
    rows = list(rows)
    if rows and isinstance(rows[0], RelationRow):
        weights = {r.weight for r in rows}
        if len(weights) > 1:
            raise DimensionError(f"rows of mixed weights {sorted(weights)}")
        cols = admissible_indices(rows[0].weight)
        return _integer_rows(r.vector(cols) for r in rows)
    return _integer_rows(rows)


def rank_exact(rows: RelationSet | Iterable[RelationRow] | Iterable[Sequence[Fraction | int]]) -> int:
    """Rank over Q of a rational matrix or of a single-weight block of relation rows."""
    m = _matrix_of(rows)
    return bareiss_echelon(m)[0] if m else 0


@dataclass(frozen=True)
class SpanResult:
    included: bool
    witness: RelationRow | None
    ranks: dict[int, tuple[int, int]]  # weight -> (rank of sub rows, rank of sup rows)

    def __bool__(self) -> bool:
        return self.included


def span_inclusion(sub: Iterable[RelationRow], sup: Iterable[RelationRow]) -> SpanResult:
    """Is every row of ``sub`` in the row space of ``sup`` (weight by weight)?"""
    sub_rows = list(sub)
    sup_rows = list(sup)
    ranks: dict[int, tuple[int, int]] = {}
    for weight in sorted({r.weight for r in sub_rows}):
        cols = admissible_indices(weight)
        block = [r for r in sup_rows if r.weight == weight]
        sup_rank, basis = bareiss_echelon(_integer_rows(r.vector(cols) for r in block)) if block else (0, [])
        mine = [r for r in sub_rows if r.weight == weight]
        for r in mine:
            v = _integer_rows([r.vector(cols)])[0]
            if bareiss_echelon(basis + [v])[0] > sup_rank:
                return SpanResult(False, r, ranks)
        ranks[weight] = (rank_exact(mine), sup_rank)
    return SpanResult(True, None, ranks)
