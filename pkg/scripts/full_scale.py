#!/usr/bin/env python3
"""Full-scale runs beyond the desk defaults.

  extendable   two-sided extendable sets at length 100 against the 100k-prefix
               factors, for the four-squares language (and optionally the
               five- and twelve-squares languages)
  eleven       exhaustive search for binary words with at most 11 distinct
               squares and at most two overlaps among 10101/1001001/0110110
  walks        5/3+-free walk on the 4-cycle out to length 10000

Usage: python3 scripts/full_scale.py extendable --name g4-four-squares
       python3 scripts/full_scale.py eleven
       python3 scripts/full_scale.py walks
"""

import argparse
import os
import sys
import time

from wordlab.characterize import load_manifest
from wordlab.constraints import load_constraints
from wordlab.morphisms import fixed_point_prefix, morphic_prefix
from wordlab.search import extendable_set, longest_word_search
from wordlab.words import factors

HERE = os.path.dirname(os.path.abspath(__file__))
MANIFESTS = os.path.join(os.path.dirname(HERE), "manifests")


def run_extendable(name: str, length: int, budget: int) -> int:
    manifest = load_manifest(os.path.join(MANIFESTS, name))
    t0 = time.time()
    if manifest.outer is not None:
        prefix = morphic_prefix(manifest.outer, manifest.inner, 100_000)
    else:
        prefix = fixed_point_prefix(manifest.inner, 100_000)
    ext = extendable_set(manifest.constraints, length, length, budget_nodes=budget)
    fact = set(factors(prefix, length))
    print(
        f"{name}: |S^{length}|={len(ext)} |Fact_{length}|={len(fact)} "
        f"equal={ext == fact} ({time.time() - t0:.0f}s)"
    )
    return 0 if ext == fact else 1


def run_eleven(budget: int) -> int:
    c = load_constraints(os.path.join(MANIFESTS, "sq11-ov2.cons"))
    t0 = time.time()
    out = longest_word_search(c, 10_000, budget)
    print(
        f"eleven-squares/two-overlaps: {out.kind} max_length={out.max_length} "
        f"nodes={out.tree_nodes} ({time.time() - t0:.0f}s)"
    )
    print("witness:", out.witness)
    return 0 if out.kind == "exhausted" else 1


def run_walks(budget: int) -> int:
    from fractions import Fraction

    from wordlab.constraints import parse_constraints
    from wordlab.repetitions import is_exponent_free

    c4 = parse_constraints("alphabet 4\ngraph C4\nexponent-cap 5/3 strict\n")
    t0 = time.time()
    out = longest_word_search(c4, 10_000, budget)
    ok = is_exponent_free(out.witness, Fraction(5, 3), True) is None
    print(
        f"C4 walk: {out.kind} length={out.max_length} 5/3+-free={ok} "
        f"nodes={out.tree_nodes} ({time.time() - t0:.0f}s)"
    )
    return 0 if out.kind == "reached_budget" and ok else 1


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    sub = ap.add_subparsers(dest="cmd", required=True)
    e = sub.add_parser("extendable")
    e.add_argument("--name", default="g4-four-squares")
    e.add_argument("--length", type=int, default=100)
    e.add_argument("--budget-nodes", type=int, default=500_000_000)
    v = sub.add_parser("eleven")
    v.add_argument("--budget-nodes", type=int, default=500_000_000)
    w = sub.add_parser("walks")
    w.add_argument("--budget-nodes", type=int, default=500_000_000)
    args = ap.parse_args()
    if args.cmd == "extendable":
        return run_extendable(args.name, args.length, args.budget_nodes)
    if args.cmd == "eleven":
        return run_eleven(args.budget_nodes)
    return run_walks(args.budget_nodes)


if __name__ == "__main__":
    sys.exit(main())
