#!/usr/bin/env python3
"""Desk-scale reproduction: run every shipped manifest, the two emptiness
refutations, and the growth-rate comparison, printing one consolidated report.

Usage: python3 scripts/reproduce.py [--manifest-dir manifests] [--budget-nodes N]
"""

import argparse
import os
import sys
import time

from wordlab.characterize import load_manifest, verify_characterization
from wordlab.constraints import load_constraints, parse_constraints
from wordlab.search import count_by_length, longest_word_search

HERE = os.path.dirname(os.path.abspath(__file__))
DEFAULT_MANIFESTS = os.path.join(os.path.dirname(HERE), "manifests")


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--manifest-dir", default=DEFAULT_MANIFESTS)
    ap.add_argument("--budget-nodes", type=int, default=100_000_000)
    args = ap.parse_args()

    failures = 0
    names = sorted(n for n in os.listdir(args.manifest_dir) if "." not in n)
    for name in names:
        t0 = time.time()
        report = verify_characterization(
            load_manifest(os.path.join(args.manifest_dir, name)),
            budget_nodes=args.budget_nodes,
        )
        for line in report.lines():
            print(line)
        print(f"  ({time.time() - t0:.1f}s)")
        failures += 0 if report.passed else 1

    print("refutation searches")
    for label, text in (
        ("binary square-free", "alphabet 2\nforbid-formula AA\n"),
        (
            "period-doubling localizer",
            "alphabet 2\nforbid-formula AA.ABAB.BB\nforbid-factor 11 1010\n",
        ),
    ):
        out = longest_word_search(parse_constraints(text), 10_000, args.budget_nodes)
        print(
            f"  {label}: {out.kind} max_length={out.max_length} "
            f"witness={out.witness} nodes={out.tree_nodes}"
        )
        failures += 0 if out.kind == "exhausted" else 1

    print("growth comparison (words per length)")
    b3 = load_constraints(os.path.join(args.manifest_dir, "b3.cons"))
    counts = count_by_length(b3, 40)
    free = count_by_length(parse_constraints("alphabet 2\n"), 16)
    print("  constrained ternary:", " ".join(map(str, counts)))
    print("  unconstrained binary:", " ".join(map(str, free)))

    print("FAILURES:", failures)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
