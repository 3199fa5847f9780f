"""Exact verification routines behind ``rtm verify`` and the acceptance suite.

Each check computes both sides of an identity along independent routes and
returns a :class:`CheckResult` carrying the first counterexample, if any.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from rtm import forest, hopf, mzv, tree_maps
from rtm.forest import ForestSum, TensorSum, forests_up_to
from rtm.hopf import (
    antipode,
    compositions,
    coproduct,
    dynkin,
    hopf_axiom_failures,
    is_cocommutative,
    ladder,
    ladder_product,
)
from rtm.series import (
    delta_u,
    endo_apply,
    endo_compose,
    endo_inverse,
    exp_derivation_series,
    geometric_ladder_image,
    hseries_log,
    ladder_letter_series,
    lambda_series,
)
from rtm.tree_maps import apply, partial_as_forest_sum, partial_n
from rtm.words import WordSum, words_of_weight


@dataclass
class CheckResult:
    name: str
    passed: bool
    checked: int
    witness: str | None = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f" -- first failure: {self.witness}" if self.witness else ""
        return f"{status} {self.name} ({self.checked} cases){tail}"


def _result(name: str, failures: list[str], checked: int) -> CheckResult:
    return CheckResult(name, not failures, checked, failures[0] if failures else None)


def hopf_axioms(max_degree: int) -> CheckResult:
    forests = forests_up_to(max_degree)
    failures = [f"{axiom} at {key or '1'}" for axiom, key in hopf_axiom_failures(forests)]
    return _result(f"hopf axioms, degree <= {max_degree}", failures, len(forests))


def main_theorem(n_max: int, max_word_weight: int) -> CheckResult:
    """D(lambda_n)(w) = (2^n - 1) partial_n(w) on all words, and the ForestSum form."""
    failures = []
    checked = 0
    for n in range(1, n_max + 1):
        d = dynkin(ladder(n))
        if partial_as_forest_sum(n).scale(2**n - 1) != d:
            failures.append(f"forest-sum form at n={n}")
        for length in range(1, max_word_weight + 1):
            for w in words_of_weight(length):
                checked += 1
                if apply(d, w) != partial_n(n, w).scale(2**n - 1):
                    failures.append(f"n={n}, w={w}")
    return _result(f"main theorem, n <= {n_max}, words of weight <= {max_word_weight}", failures, checked)


def composition_sum(n: int, weight) -> ForestSum:
    out = ForestSum.zero()
    for comp in compositions(n):
        out = out + ForestSum.of(ladder_product(comp), weight(len(comp)))
    return out


def ladder_identities(n_max: int) -> CheckResult:
    """Closed forms for the coproduct, antipode and Dynkin operator of ladders."""
    failures = []
    for n in range(1, n_max + 1):
        expected_delta = TensorSum({(ladder(j), ladder(n - j)): 1 for j in range(n + 1)})
        if coproduct(ladder(n)) != expected_delta:
            failures.append(f"coproduct at n={n}")
        if antipode(ladder(n)) != composition_sum(n, lambda d: (-1) ** d):
            failures.append(f"antipode at n={n}")
        if dynkin(ladder(n)) != composition_sum(n, lambda d: n * Fraction((-1) ** (d + 1), d)):
            failures.append(f"dynkin at n={n}")
    return _result(f"ladder closed forms, n <= {n_max}", failures, 3 * n_max)


def ladder_recursion(n_max: int, max_word_weight: int) -> CheckResult:
    """n lambda_n = sum_j (2^j - 1) lambda_(n-j) o partial_j as operators."""
    failures = []
    checked = 0
    for n in range(1, n_max + 1):
        for length in range(0, max_word_weight + 1):
            for w in words_of_weight(length):
                checked += 1
                lhs = apply(ladder(n), w).scale(n)
                rhs = sum((apply(ladder(n - j), partial_n(j, w)).scale(2**j - 1) for j in range(1, n + 1)),
                          start=WordSum.zero())
                if lhs != rhs:
                    failures.append(f"n={n}, w={w or '1'}")
    return _result(f"ladder recursion, n <= {n_max}, words of weight <= {max_word_weight}", failures, checked)


def series_identities(order: int, log_order: int = 8) -> CheckResult:
    failures = []
    target = geometric_ladder_image(order)
    composite = endo_compose(delta_u(-2, order), endo_inverse(delta_u(-1, order)))
    if endo_apply(composite, "x") != target:
        failures.append("Delta_{-2u} o Delta_{-u}^{-1} on x")
    for w in ("x", "y"):
        if endo_apply(delta_u(1, order), w) != exp_derivation_series(lambda n: Fraction((-1) ** n, n), w, order):
            failures.append(f"Delta_u = exp(sum (-1)^n partial_n u^n / n) on {w}")
    if exp_derivation_series(lambda n: Fraction(2**n - 1, n), "x", order) != target:
        failures.append("exp(sum (2^n - 1) partial_n u^n / n)(x)")
    if ladder_letter_series("x", order) != target:
        failures.append("sum lambda_n(x) u^n")
    log = hseries_log(lambda_series(log_order))
    for n in range(1, log_order + 1):
        if log[n] != dynkin(ladder(n)).scale(Fraction(1, n)):
            failures.append(f"log Lambda_u at u^{n}")
    return _result(f"series identities, order {order} (log to {log_order})", failures, 5 + log_order)


def cocommutative_ladders(n_max: int) -> CheckResult:
    failures = []
    for n in range(1, n_max + 1):
        if not is_cocommutative(ladder(n)):
            failures.append(f"lambda_{n}")
        if not is_cocommutative(ladder_product([1] * n)):
            failures.append(f"lambda_1^{n}")
        if n >= 2 and dynkin(ladder_product([1] * n)):
            failures.append(f"D(lambda_1^{n}) != 0")
    return _result(f"cocommutativity of ladders, n <= {n_max}", failures, 3 * n_max)


def all_checks(quick: bool = False) -> list[CheckResult]:
    return [
        hopf_axioms(4 if quick else 5),
        ladder_identities(6 if quick else 8),
        main_theorem(4 if quick else 6, 5 if quick else 7),
        ladder_recursion(4 if quick else 5, 5 if quick else 6),
        series_identities(4 if quick else 6, 6 if quick else 8),
        cocommutative_ladders(5),
    ]


def reset_caches() -> None:
    """Drop every memo table, so timings start cold."""
    for fn in (forest.trees_of_degree, forest.enumerate_forests, hopf._tree_coproduct, hopf.forest_coproduct,
               hopf._tree_antipode, hopf.forest_antipode, hopf._ladder_tree, mzv._tail_cutoff_cached,
               mzv._li_half, mzv._zeta_word):
        fn.cache_clear()
    tree_maps.clear_caches()
