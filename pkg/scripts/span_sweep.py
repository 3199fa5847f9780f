"""Rank of tree-map relations versus derivation relations, weight by weight.

    python3 scripts/span_sweep.py --max-weight 8 --max-degree 6
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from rtm.relations import derivation_rows, span_inclusion, tree_map_rows
from rtm.words import admissible_indices


@dataclass
class SweepConfig:
    max_weight: int = 8
    max_degree: int = 6


def run(cfg: SweepConfig) -> None:
    start = time.perf_counter()
    tree = list(tree_map_rows(cfg.max_degree, cfg.max_weight))
    deriv = list(derivation_rows(cfg.max_weight))
    res = span_inclusion(deriv, tree)
    print(f"{'weight':>6} {'dim':>5} {'rows':>6} {'rank(tree)':>10} {'rank(deriv)':>11}")
    for weight, (sub, sup) in sorted(res.ranks.items()):
        rows = sum(1 for r in tree if r.weight == weight)
        print(f"{weight:>6} {len(admissible_indices(weight)):>5} {rows:>6} {sup:>10} {sub:>11}")
    status = "included" if res.included else f"NOT included (first witness {res.witness.source})"
    print(f"derivation rows {status}; {time.perf_counter() - start:.1f}s")


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--max-weight", type=int, default=SweepConfig.max_weight)
    p.add_argument("--max-degree", type=int, default=SweepConfig.max_degree)
    args = p.parse_args()
    run(SweepConfig(args.max_weight, args.max_degree))


if __name__ == "__main__":
    main()
