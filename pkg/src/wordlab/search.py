"""Pruned depth-first enumeration of constrained factorial languages.

The DFS appends letters in ascending order and prunes on violations that
complete at the appended letter. Factor, square, overlap, graph and exponent
constraints are suffix-local; formula and occurrence-budget constraints are
re-checked through suffix-anchored occurrence search, which is exact because
every prefix on the current branch already passed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .constraints import ConstraintSet, check as full_check
from .errors import DomainError, ResourceBudgetError, WordlabError
from .formulas import new_assignments, new_occurrence_exists

DEFAULT_NODE_BUDGET = 100_000_000


@dataclass(frozen=True)
class SearchOutcome:
    kind: str  # "exhausted" | "reached_budget"
    max_length: int
    witness: str | None
    tree_nodes: int


class BranchChecker:
    """Incremental constraint checker over one growing/shrinking word."""

    def __init__(self, c: ConstraintSet, max_length: int):
        self.c = c
        self.buf = bytearray(max_length + 1)
        self.n = 0
        self.adj = c.graph.adjacency() if c.graph is not None else None
        self.factor_lens = sorted({len(f) for f in c.forbidden_factors})
        self.factor_sets = {
            l: frozenset(f.encode() for f in c.forbidden_factors if len(f) == l)
            for l in self.factor_lens
        }
        self.sq_min = c.sq_min_period
        self.allowed_squares = (
            frozenset(s.encode() for s in c.allowed_squares)
            if c.allowed_squares is not None
            else None
        )
        self.max_sq = c.max_square_count
        self.allowed_overlaps = (
            frozenset(s.encode() for s in c.allowed_overlaps)
            if c.allowed_overlaps is not None
            else None
        )
        self.max_ov = c.max_overlap_count
        self.scan_squares = (
            self.sq_min is not None or self.allowed_squares is not None or self.max_sq is not None
        )
        self.scan_overlaps = self.allowed_overlaps is not None or self.max_ov is not None
        if c.exponent_cap is not None:
            e, strict = c.exponent_cap
            self.exp = (e.numerator, e.denominator, strict)
        else:
            self.exp = None
        self.formulas = c.forbidden_formulas
        self.occ = c.occurrence_budget
        self.seen_squares: set[bytes] = set()
        self.seen_overlaps: set[bytes] = set()
        self.seen_assignments: set[tuple[str, ...]] = set()
        self._sq_stack: list[tuple[bytes, ...]] = []
        self._ov_stack: list[tuple[bytes, ...]] = []
        self._occ_stack: list[tuple[tuple[str, ...], ...]] = []

    def word(self) -> str:
        return self.buf[: self.n].decode("ascii")

    def push(self, letter: int) -> str | None:
        """Append a letter; None if still violation-free, else the violation kind."""
        buf = self.buf
        buf[self.n] = 48 + letter
        n = self.n + 1
        self.n = n

        if self.adj is not None and n >= 2:
            if not self.adj[buf[n - 2] - 48][buf[n - 1] - 48]:
                self.n = n - 1
                return "graph"
        for l in self.factor_lens:
            if l <= n and bytes(buf[n - l : n]) in self.factor_sets[l]:
                self.n = n - 1
                return "factor"

        new_sq: list[bytes] = []
        if self.scan_squares:
            sq_min = self.sq_min
            for p in range(1, n // 2 + 1):
                if buf[n - 2 * p : n - p] == buf[n - p : n]:
                    if sq_min is not None and p >= sq_min:
                        self.n = n - 1
                        return "square-period"
                    fct = bytes(buf[n - 2 * p : n])
                    if self.allowed_squares is not None and fct not in self.allowed_squares:
                        self.n = n - 1
                        return "square-not-allowed"
                    if self.max_sq is not None and fct not in self.seen_squares:
                        if fct not in new_sq:
                            new_sq.append(fct)
                            if len(self.seen_squares) + len(new_sq) > self.max_sq:
                                self.n = n - 1
                                return "square-count"
        new_ov: list[bytes] = []
        if self.scan_overlaps:
            for p in range(1, (n - 1) // 2 + 1):
                if buf[n - 2 * p - 1 : n - p] == buf[n - p - 1 : n]:
                    fct = bytes(buf[n - 2 * p - 1 : n])
                    if self.allowed_overlaps is not None and fct not in self.allowed_overlaps:
                        self.n = n - 1
                        return "overlap-not-allowed"
                    if self.max_ov is not None and fct not in self.seen_overlaps:
                        if fct not in new_ov:
                            new_ov.append(fct)
                            if len(self.seen_overlaps) + len(new_ov) > self.max_ov:
                                self.n = n - 1
                                return "overlap-count"
        if self.exp is not None:
            num, den, strict = self.exp
            for p in range(1, n):
                need = (num * p) // den + 1 if strict else -((-num * p) // den)
                if need <= n and buf[n - need : n - p] == buf[n - need + p : n]:
                    self.n = n - 1
                    return "exponent"

        wb: bytes | None = None
        if self.formulas:
            wb = bytes(buf[:n])
            for f in self.formulas:
                if new_occurrence_exists(wb, f):
                    self.n = n - 1
                    return "formula"
        new_occ: list[tuple[str, ...]] = []
        if self.occ is not None:
            if wb is None:
                wb = bytes(buf[:n])
            f, budget = self.occ
            for a in new_assignments(wb, f):
                if a not in self.seen_assignments:
                    new_occ.append(a)
            if len(self.seen_assignments) + len(new_occ) > budget:
                self.n = n - 1
                return "occurrence-budget"

        if self.scan_squares and self.max_sq is not None:
            self.seen_squares.update(new_sq)
            self._sq_stack.append(tuple(new_sq))
        if self.scan_overlaps and self.max_ov is not None:
            self.seen_overlaps.update(new_ov)
            self._ov_stack.append(tuple(new_ov))
        if self.occ is not None:
            self.seen_assignments.update(new_occ)
            self._occ_stack.append(tuple(new_occ))
        return None

    def pop(self) -> None:
        if self.n == 0:
            raise WordlabError("pop on empty checker")
        self.n -= 1
        if self.scan_squares and self.max_sq is not None:
            for fct in self._sq_stack.pop():
                self.seen_squares.discard(fct)
        if self.scan_overlaps and self.max_ov is not None:
            for fct in self._ov_stack.pop():
                self.seen_overlaps.discard(fct)
        if self.occ is not None:
            for a in self._occ_stack.pop():
                self.seen_assignments.discard(a)


class _Stop(Exception):
    pass


def _run_dfs(c, max_depth, node_budget, on_good, letter_order=None, partial=None):
    """DFS over good words up to max_depth; on_good may return False to stop.

    Returns the number of attempted letter placements (tree nodes).
    """
    if max_depth < 0:
        raise DomainError("search depth must be non-negative")
    checker = BranchChecker(c, max_depth)
    letters = list(letter_order) if letter_order is not None else list(range(c.alphabet_size))
    if sorted(letters) != list(range(c.alphabet_size)):
        raise DomainError("letter order must be a permutation of the alphabet")
    nodes = 0
    if max_depth == 0:
        return 0
    stack = [0]  # stack[d] = next letter index to try at depth d
    try:
        while stack:
            i = stack[-1]
            if i == len(letters):
                stack.pop()
                if stack:
                    checker.pop()
                continue
            stack[-1] += 1
            nodes += 1
            if nodes > node_budget:
                raise ResourceBudgetError(
                    f"search exceeded node budget {node_budget}",
                    partial=partial(nodes) if partial is not None else None,
                )
            if checker.push(letters[i]) is None:
                if on_good(checker) is False:
                    raise _Stop
                if checker.n < max_depth:
                    stack.append(0)
                else:
                    checker.pop()
    except _Stop:
        pass
    return nodes


def longest_word_search(
    c: ConstraintSet,
    budget_length: int,
    budget_nodes: int = DEFAULT_NODE_BUDGET,
    letter_order=None,
) -> SearchOutcome:
    """Longest word in the language, exactly, or a witness of reaching budget_length.

    kind == "exhausted" means no good word of max_length+1 exists at all.
    """
    if budget_length < 1 or budget_nodes < 1:
        raise DomainError("budgets must be positive")
    best = {"len": 0, "word": ""}
    reached = {"hit": False}

    def on_good(checker: BranchChecker):
        if checker.n > best["len"]:
            best["len"] = checker.n
            best["word"] = checker.word()
            if checker.n >= budget_length:
                reached["hit"] = True
                return False
        return True

    def partial(nodes):
        return SearchOutcome("node-budget-exceeded", best["len"], best["word"], nodes)

    nodes = _run_dfs(c, budget_length, budget_nodes, on_good, letter_order, partial)
    kind = "reached_budget" if reached["hit"] else "exhausted"
    return SearchOutcome(kind, best["len"], best["word"] if best["len"] else "", nodes)


def extendable_set(
    c: ConstraintSet,
    length: int,
    horizon: int | None = None,
    budget_nodes: int = DEFAULT_NODE_BUDGET,
) -> set[str]:
    """Words v of the given length with a good extension p v s, |p|=|s|=horizon.

    Computed by enumerating all good words of length ``length + 2*horizon``
    and collecting middles; one witness per middle is re-verified against the
    batch checker.
    """
    if length < 1:
        raise DomainError("extendable-set length must be >= 1")
    h = horizon if horizon is not None else length
    if h < 0:
        raise DomainError("horizon must be >= 0")
    total = length + 2 * h
    middles: dict[str, str] = {}

    def on_good(checker: BranchChecker):
        if checker.n == total:
            word = checker.word()
            middles.setdefault(word[h : h + length], word)
        return True

    _run_dfs(c, total, budget_nodes, on_good, partial=lambda nodes: set(middles))
    for mid, witness in middles.items():
        if full_check(witness, c) is not None:
            raise WordlabError(
                f"internal disagreement: incremental search emitted {witness} "
                "but the batch checker rejects it"
            )
    return set(middles)


def count_by_length(
    c: ConstraintSet,
    n_max: int,
    budget_nodes: int = DEFAULT_NODE_BUDGET,
) -> list[int]:
    """counts[i] = number of good words of length i+1, for i+1 = 1..n_max."""
    if n_max < 1:
        raise DomainError("n_max must be >= 1")
    counts = [0] * (n_max + 1)

    def on_good(checker: BranchChecker):
        counts[checker.n] += 1
        return True

    _run_dfs(c, n_max, budget_nodes, on_good, partial=lambda nodes: counts[1:])
    return counts[1:]
