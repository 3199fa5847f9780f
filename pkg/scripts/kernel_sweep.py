"""Numerically evaluate Z(f(w)) for every non-empty forest f and admissible word w.

Prints one line per case and a summary of the largest residual relative to its
certified bound.

    python3 scripts/kernel_sweep.py --max-degree 3 --max-total 6 --eps 1e-30
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from fractions import Fraction

from rtm.forest import forests_up_to
from rtm.mzv import PrecisionConfig, kernel_check, to_fraction
from rtm.words import admissible_words


@dataclass
class KernelSweepConfig:
    max_degree: int = 3
    max_total: int = 6
    eps: Fraction = Fraction(1, 10**30)
    quiet: bool = False


def run(cfg: KernelSweepConfig) -> int:
    prec = PrecisionConfig(eps=cfg.eps)
    failures = 0
    worst = Fraction(0)
    count = 0
    for f in forests_up_to(cfg.max_degree):
        if not f:
            continue
        for weight in range(2, cfg.max_total - f.degree + 1):
            for w in admissible_words(weight):
                report = kernel_check(f, w, prec)
                count += 1
                worst = max(worst, abs(to_fraction(report.value)))
                failures += not report.passed
                if not cfg.quiet:
                    print(report)
    print(f"{count} cases, {failures} failures, largest |Z| = {float(worst):.2e}")
    return 1 if failures else 0


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--max-degree", type=int, default=3)
    p.add_argument("--max-total", type=int, default=6, help="bound on degree + word weight")
    p.add_argument("--eps", type=Fraction, default=Fraction(1, 10**30))
    p.add_argument("--quiet", action="store_true")
    args = p.parse_args()
    raise SystemExit(run(KernelSweepConfig(args.max_degree, args.max_total, args.eps, args.quiet)))


if __name__ == "__main__":
    main()
