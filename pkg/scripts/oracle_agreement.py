#!/usr/bin/env python3
"""Cross-check the structural classifier against the exhaustive module-search
oracles on small quivers over F_2, printing one line per vertex idempotent.

Usage: python scripts/oracle_agreement.py [--max-vertices N] [--max-dim N]
       [--count N]
"""

import argparse
import sys
from itertools import combinations
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from pathidem.algebra import vertex_idempotent
from pathidem.classify import is_left_special, is_left_split
from pathidem.oracle import (
    OracleBudget,
    check_special_by_modules,
    check_split_by_sequences,
)
from pathidem.rings import Ring
from pathidem.sweep import sweep_quivers


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-vertices", type=int, default=3)
    parser.add_argument("--max-dim", type=int, default=2)
    parser.add_argument("--count", type=int, default=20)
    args = parser.parse_args(argv)

    ring = Ring("Fp", 2)
    budget = OracleBudget(max_total_dim=args.max_dim)
    disagreements = 0
    for qi, q in enumerate(
        sweep_quivers(args.max_vertices, args.max_vertices, args.count)
    ):
        for k in range(len(q.vertices) + 1):
            for c in combinations(q.vertices, k):
                s = frozenset(c)
                e = vertex_idempotent(q, ring, s)
                structural = is_left_special(e)
                verdict = check_special_by_modules(e, q, ring, budget)
                agree = verdict.is_counterexample == (not structural)
                line = (
                    f"quiver {qi:3d} S={sorted(s)!s:24} "
                    f"special={structural!s:5} oracle={verdict.kind}"
                )
                if structural:
                    spl = is_left_split(e)
                    v2 = check_split_by_sequences(e, q, ring, budget)
                    agree = agree and v2.is_counterexample == (not spl)
                    line += f" split={spl!s:5} oracle={v2.kind}"
                if not agree:
                    disagreements += 1
                    line += "  <-- DISAGREEMENT"
                print(line)
    print(f"\ndisagreements: {disagreements}")
    return 1 if disagreements else 0


if __name__ == "__main__":
    raise SystemExit(main())
