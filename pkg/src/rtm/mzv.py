"""Multiple zeta values with rigorous absolute error bounds.

Every admissible word ``w = a_1 ... a_n`` is evaluated by the Hoelder
convolution at 1/2,

    zeta(w) = sum_{j=0}^{n} Li(dual(a_1 ... a_j); 1/2) * Li(a_{j+1} ... a_n; 1/2),

where ``Li(v; 1/2)`` is the multiple polylogarithm at 1/2 of a word ending in
y.  Each factor is a nested sum whose terms decay like 2^-m, and every factor
lies in [0, 1], which keeps the error propagation simple.

Bounds are exact rationals: truncation tail plus an allowance for floating
point rounding at the working precision.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import mpmath

from rtm.errors import ConsistencyError, DomainError
from rtm.forest import EMPTY, Forest, ForestSum, Tree, as_forest
from rtm.tree_maps import apply
from rtm.words import WordSum, as_word_sum, check_word, dual, is_admissible, is_admissible_word, z_decode, z_encode

DEFAULT_EPS = Fraction(1, 10**30)


@dataclass(frozen=True)
class PrecisionConfig:
    eps: Fraction = DEFAULT_EPS
    guard_bits: int = 64

    def __post_init__(self):
        object.__setattr__(self, "eps", Fraction(self.eps))
        if self.eps <= 0:
            raise DomainError("target error must be positive")

    @property
    def working_bits(self) -> int:
        return 2 * _log2_ceil(1 / self.eps) + self.guard_bits

    def with_eps(self, eps: Fraction) -> PrecisionConfig:
        return PrecisionConfig(eps, self.guard_bits)


def to_fraction(x) -> Fraction:
    """Exact rational value of a binary floating point number (rationals pass through)."""
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    man, exp = mpmath.mpf(x).man_exp
    return Fraction(man) * Fraction(2) ** exp if exp >= 0 else Fraction(man, 2 ** -exp)


def from_fraction(q: Fraction) -> mpmath.mpf:
    q = Fraction(q)
    return mpmath.mpf(q.numerator) / q.denominator


def _log2_ceil(q: Fraction) -> int:
    # smallest k with 2^k >= q, for q > 0
    k = max(q.numerator.bit_length() - q.denominator.bit_length() - 1, 0)
    while Fraction(2) ** k < q:
        k += 1
    return k


def _pow2_below(q: Fraction) -> Fraction:
    """Largest power of two not exceeding q (q > 0); used to share cache entries."""
    return Fraction(1, 2 ** _log2_ceil(1 / q))


@dataclass(frozen=True)
class EvalResult:
    value: mpmath.mpf
    bound: Fraction = field(default=Fraction(0))

    def __str__(self) -> str:
        return f"{mpmath.nstr(self.value, 17)} ± {float(self.bound):.1g}"

    def contains(self, x, slack: Fraction = Fraction(0)) -> bool:
        return abs(to_fraction(self.value) - to_fraction(x)) <= self.bound + slack


def _tail_cutoff(depth: int, eps: Fraction) -> tuple[int, Fraction]:
    """Least cutoff M whose tail bound is <= eps, and that bound.

    Terms with leading summation index m are at most b_m = 2^-m m^(depth-1).
    For m > M the ratio b_(m+1)/b_m is at most q = (1 + 1/M)^(depth-1) / 2,
    so the tail is at most b_(M+1) / (1 - q) once q < 1.
    """
    return _tail_cutoff_cached(depth, eps)


@lru_cache(maxsize=None)
def _tail_cutoff_cached(depth: int, eps: Fraction) -> tuple[int, Fraction]:
    m = max(1, 2 * depth)
    while True:
        q = Fraction(m + 1, m) ** (depth - 1) / 2
        if q <= Fraction(3, 4):
            tail = Fraction((m + 1) ** (depth - 1), 2 ** (m + 1)) / (1 - q)
            if tail <= eps:
                return m, tail
        m += 1


@lru_cache(maxsize=4096)
def _li_half(word: str, eps: Fraction, bits: int) -> EvalResult:
    if not word:
        return EvalResult(mpmath.mpf(1), Fraction(0))
    index = z_encode(word)
    depth = len(index)
    cutoff, tail = _tail_cutoff(depth, eps / 2)
    with mpmath.workprec(bits):
        one = mpmath.mpf(1)
        # inner[m] = sum over m > m_j > ... > m_r >= 1 of the inner factors
        inner = [one] * (cutoff + 1)
        for k in reversed(index[1:]):
            acc = mpmath.mpf(0)
            nxt = [mpmath.mpf(0)] * (cutoff + 1)
            for m in range(1, cutoff + 1):
                nxt[m] = acc
                acc += inner[m] / mpmath.mpf(m) ** k
            inner = nxt
        half = mpmath.mpf(1) / 2
        weight = one
        total = mpmath.mpf(0)
        k1 = index[0]
        for m in range(1, cutoff + 1):
            weight *= half
            total += weight * inner[m] / mpmath.mpf(m) ** k1
    # positive terms, ~6 roundings per (level, m); the sum is at most 1
    ops = 6 * (depth + 1) * cutoff
    rounding = Fraction(4 * ops, 2**bits)
    bound = tail + rounding
    if bound > eps:
        raise ConsistencyError(f"li_half bound {float(bound)} exceeds target {float(eps)}")
    return EvalResult(total, bound)


def li_half(w: str, cfg: PrecisionConfig = PrecisionConfig()) -> EvalResult:
    """Multiple polylogarithm at 1/2 of a word ending in y (the empty word gives 1)."""
    w = check_word(w)
    if w and not w.endswith("y"):
        raise DomainError(f"li_half needs a word ending in y, got {w!r}")
    return _li_half(w, cfg.eps, cfg.working_bits)


@lru_cache(maxsize=4096)
def _zeta_word(w: str, eps: Fraction, guard_bits: int) -> EvalResult:
    n = len(w)
    piece = PrecisionConfig(eps / (4 * (n + 1)), guard_bits)
    bits = PrecisionConfig(eps, guard_bits).working_bits
    value = mpmath.mpf(0)
    bound = Fraction(0)
    with mpmath.workprec(bits):
        for j in range(n + 1):
            a = li_half(dual(w[:j]), piece)
            b = li_half(w[j:], piece)
            value += a.value * b.value
            bound += a.bound + b.bound + a.bound * b.bound
    # n+1 products and sums of numbers in [0, 1 + eps]
    bound += Fraction(8 * (n + 1) ** 2, 2**bits)
    if bound > eps:
        raise ConsistencyError(f"zeta bound {float(bound)} exceeds target {float(eps)}")
    return EvalResult(value, bound)


def zeta_num(w: str | tuple[int, ...], cfg: PrecisionConfig = PrecisionConfig()) -> EvalResult:
    """zeta of an admissible non-empty word (or of an admissible z-index tuple)."""
    if isinstance(w, tuple):
        w = z_decode(w)
    w = check_word(w)
    if not w or not is_admissible_word(w):
        raise DomainError(f"zeta needs an admissible non-empty word, got {w or '1'!r}; the sum diverges")
    return _zeta_word(w, cfg.eps, cfg.guard_bits)


def z_eval(p: WordSum | str, cfg: PrecisionConfig = PrecisionConfig()) -> EvalResult:
    """The linear map Z on an admissible combination of words."""
    p = as_word_sum(p)
    if not is_admissible(p):
        bad = next(w for w in p if not is_admissible_word(w))
        raise DomainError(f"Z is only defined on admissible words; {bad!r} is not")
    mass = sum((abs(Fraction(c)) for w, c in p.items() if w), Fraction(0))
    bits = cfg.working_bits
    if not mass:
        with mpmath.workprec(bits):
            c = Fraction(p.coefficient(""))
            return EvalResult(from_fraction(c), abs(c) / 2 ** (bits - 1))
    piece = cfg.with_eps(_pow2_below(cfg.eps / (2 * mass)))
    bits = max(bits, piece.working_bits)
    value = mpmath.mpf(0)
    bound = Fraction(0)
    with mpmath.workprec(bits):
        for w, c in p.sorted_items():
            c = Fraction(c)
            if not w:
                value += mpmath.mpf(c.numerator) / c.denominator
                continue
            r = zeta_num(w, piece)
            value += r.value * c.numerator / c.denominator
            bound += abs(c) * r.bound
    # values are below 2; each term costs a few roundings
    bound += Fraction(16 * (len(p) + 1), 2**bits) * (mass + abs(Fraction(p.coefficient(""))) + 1)
    return EvalResult(value, bound)


@dataclass(frozen=True)
class KernelReport:
    forest: str
    word: str
    image: WordSum
    value: mpmath.mpf
    bound: Fraction
    eps: Fraction

    @property
    def passed(self) -> bool:
        return abs(to_fraction(self.value)) <= self.bound + self.eps

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"{status} Z({self.forest or '1'}({self.word})) = {mpmath.nstr(self.value, 5)} "
                f"(bound {float(self.bound):.1g}, eps {float(self.eps):.1g})")


def kernel_check(f: ForestSum | Forest | Tree | str, w: str,
                 cfg: PrecisionConfig = PrecisionConfig()) -> KernelReport:
    """Numerically confirm Z(f(w)) = 0 for a non-empty forest f and an admissible word w."""
    fs = f if isinstance(f, ForestSum) else ForestSum.of(as_forest(f))
    if not fs or fs.coefficient(EMPTY):
        raise DomainError("the kernel statement needs a non-empty forest (no empty-forest component)")
    w = check_word(w)
    if not is_admissible_word(w):
        raise DomainError(f"word {w!r} is not admissible")
    image = apply(fs, w)
    if not is_admissible(image):
        raise ConsistencyError(f"image of admissible word {w!r} is not admissible: {image}")
    r = z_eval(image, cfg)
    label = str(fs) if isinstance(f, ForestSum) else as_forest(f).key
    return KernelReport(label, w, image, r.value, r.bound, cfg.eps)


def reference_bits(cfg: PrecisionConfig) -> int:
    """Precision for closed-form comparisons (pi, log 2, zeta(3))."""
    return cfg.working_bits + 32


def closed_form(name: str, cfg: PrecisionConfig = PrecisionConfig()) -> mpmath.mpf:
    with mpmath.workprec(reference_bits(cfg)):
        table = {
            "zeta2": mpmath.pi**2 / 6,
            "zeta3": mpmath.zeta(3),
            "zeta4": mpmath.pi**4 / 90,
            "log2": mpmath.log(2),
            "li2_half": mpmath.pi**2 / 12 - mpmath.log(2) ** 2 / 2,
        }
        return +table[name]

