"""Command-line interface.

Exit codes: 0 verified/ok, 1 refuted or violation found, 2 usage/parse
error, 3 resource budget exceeded. Machine-readable output is deterministic:
no timestamps, factors sorted lexicographically.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import characterize, constraints, formulas, morphisms, repetitions, search, words
from .errors import DomainError, ParseError, ResourceBudgetError, WordlabError

ENV_NODE_BUDGET = "WORDLAB_NODE_BUDGET"
ENV_LETTER_BUDGET = "WORDLAB_LETTER_BUDGET"


def _default_node_budget() -> int:
    return int(os.environ.get(ENV_NODE_BUDGET, search.DEFAULT_NODE_BUDGET))


def _default_letter_budget() -> int:
    return int(os.environ.get(ENV_LETTER_BUDGET, morphisms.DEFAULT_LETTER_BUDGET))


def _read_word(args) -> str:
    if getattr(args, "stdin", False):
        text = sys.stdin.read()
    else:
        if not args.input:
            raise ParseError("either --input FILE or --stdin is required")
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
    return words.parse_word("".join(text.split()))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wordlab", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="print a prefix of a (possibly coded) fixed point")
    g.add_argument("--morphism", required=True, help="inner morphism, e.g. 012/02/1")
    g.add_argument("--outer", help="optional outer morphism applied to the fixed point")
    g.add_argument("--length", type=int, required=True)

    for name, help_ in (
        ("squares", "print the distinct-square inventory"),
        ("overlaps", "print the minimal-overlap inventory"),
        ("exponent", "print the maximum exponent and a witness factor"),
    ):
        q = sub.add_parser(name, help=help_)
        q.add_argument("--input")
        q.add_argument("--stdin", action="store_true")

    m = sub.add_parser("match", help="list occurrences of a formula")
    m.add_argument("--formula", required=True)
    m.add_argument("--input")
    m.add_argument("--stdin", action="store_true")
    m.add_argument("--cap", type=int, help="max variable image length (default: word length)")

    c = sub.add_parser("check", help="check a word against a constraint file")
    c.add_argument("--constraints", required=True)
    c.add_argument("--input")
    c.add_argument("--stdin", action="store_true")

    s = sub.add_parser("search", help="longest word satisfying a constraint file")
    s.add_argument("--constraints", required=True)
    s.add_argument("--budget-length", type=int, required=True)
    s.add_argument("--budget-nodes", type=int, default=None)

    e = sub.add_parser("extendable", help="two-sidedly extendable words of one length")
    e.add_argument("--constraints", required=True)
    e.add_argument("--length", type=int, required=True)
    e.add_argument("--horizon", type=int, default=None)
    e.add_argument("--budget-nodes", type=int, default=None)

    n = sub.add_parser("counts", help="number of good words per length")
    n.add_argument("--constraints", required=True)
    n.add_argument("--max", type=int, required=True)
    n.add_argument("--budget-nodes", type=int, default=None)

    v = sub.add_parser("verify", help="run one theorem manifest")
    v.add_argument("--manifest", required=True)
    v.add_argument("--budget-nodes", type=int, default=None)

    va = sub.add_parser("verify-all", help="run every manifest in a directory")
    va.add_argument("--dir", required=True)
    va.add_argument("--budget-nodes", type=int, default=None)
    return p


def _cmd_generate(args) -> int:
    inner = morphisms.parse_morphism(args.morphism)
    budget = _default_letter_budget()
    if args.outer:
        outer = morphisms.parse_morphism(args.outer)
        word = morphisms.morphic_prefix(outer, inner, args.length, max_letters=budget)
    else:
        word = morphisms.fixed_point_prefix(inner, args.length, max_letters=budget)
    print(word)
    return 0


def _cmd_inventory(args) -> int:
    w = _read_word(args)
    if args.command == "squares":
        for u in sorted(repetitions.distinct_squares(w)):
            print(u)
        return 0
    if args.command == "overlaps":
        for u in sorted(repetitions.distinct_min_overlaps(w)):
            print(u)
        return 0
    exp, witness = repetitions.max_exponent(w)
    print(f"{repetitions.format_exponent(exp)}\t{witness.factor_of(w)}")
    return 0


def _cmd_match(args) -> int:
    w = _read_word(args)
    f = formulas.parse_formula(args.formula)
    cap = args.cap if args.cap is not None else max(1, len(w))
    occs = formulas.find_occurrences(w, f, cap)
    for t in sorted(occs):
        print(formulas.format_assignment(t))
    return 0


def _cmd_check(args) -> int:
    w = _read_word(args)
    c = constraints.load_constraints(args.constraints)
    violation = constraints.check(w, c)
    if violation is None:
        print("ok")
        return 0
    print(f"violation {violation}")
    return 1


def _cmd_search(args) -> int:
    c = constraints.load_constraints(args.constraints)
    nodes = args.budget_nodes if args.budget_nodes is not None else _default_node_budget()
    outcome = search.longest_word_search(c, args.budget_length, nodes)
    print(
        f"{outcome.kind} max_length={outcome.max_length} "
        f"witness={outcome.witness or '(empty)'} nodes={outcome.tree_nodes}"
    )
    return 0


def _cmd_extendable(args) -> int:
    c = constraints.load_constraints(args.constraints)
    nodes = args.budget_nodes if args.budget_nodes is not None else _default_node_budget()
    out = search.extendable_set(c, args.length, args.horizon, budget_nodes=nodes)
    for w in sorted(out):
        print(w)
    return 0


def _cmd_counts(args) -> int:
    c = constraints.load_constraints(args.constraints)
    nodes = args.budget_nodes if args.budget_nodes is not None else _default_node_budget()
    counts = search.count_by_length(c, args.max, budget_nodes=nodes)
    for n, count in enumerate(counts, 1):
        print(f"{n}\t{count}")
    return 0


def _cmd_verify(args) -> int:
    manifest = characterize.load_manifest(args.manifest)
    nodes = args.budget_nodes if args.budget_nodes is not None else _default_node_budget()
    report = characterize.verify_characterization(manifest, budget_nodes=nodes)
    for line in report.lines():
        print(line)
    return 0 if report.passed else 1


def _cmd_verify_all(args) -> int:
    paths = sorted(
        os.path.join(args.dir, name)
        for name in os.listdir(args.dir)
        if "." not in name and not name.startswith("_")
    )
    if not paths:
        raise ParseError(f"no manifest files found in {args.dir!r}")
    nodes = args.budget_nodes if args.budget_nodes is not None else _default_node_budget()
    all_pass = True
    for path in paths:
        manifest = characterize.load_manifest(path)
        report = characterize.verify_characterization(manifest, budget_nodes=nodes)
        for line in report.lines():
            print(line)
        all_pass = all_pass and report.passed
    return 0 if all_pass else 1


_DISPATCH = {
    "generate": _cmd_generate,
    "squares": _cmd_inventory,
    "overlaps": _cmd_inventory,
    "exponent": _cmd_inventory,
    "match": _cmd_match,
    "check": _cmd_check,
    "search": _cmd_search,
    "extendable": _cmd_extendable,
    "counts": _cmd_counts,
    "verify": _cmd_verify,
    "verify-all": _cmd_verify_all,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 2
    try:
        return _DISPATCH[args.command](args)
    except ResourceBudgetError as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return 3
    except (ParseError, DomainError, FileNotFoundError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except WordlabError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
