"""Declarative avoidance constraint sets, file format, and whole-word checking.

Constraint files are line-oriented: ``alphabet 2``, ``forbid-factor 010``,
``forbid-formula AA.ABAB.BB``, ``forbid-squares-min-period 4``,
``allow-squares 00 11``, ``allow-overlaps 01010``, ``max-distinct-squares 11``,
``max-distinct-overlaps 2``, ``max-occurrences ABBA 8``,
``exponent-cap 5/3 strict``, ``graph P5`` / ``graph-edges 0-1 1-2 2-2``.
Blank lines and ``#`` comments are ignored; unknown directives are errors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import AlphabetError, DomainError, ParseError
from .formulas import (
    MAX_PATTERN_VARIABLES,
    Formula,
    find_occurrences,
    format_assignment,
    has_occurrence,
    parse_formula,
)
from .graphs import LabelledGraph, builtin_graph, graph_from_edges
from .repetitions import _as_array, _violation_length, period_runs
from .words import validate_word

_KIND_PRIORITY = {
    "factor": 0,
    "graph": 1,
    "square-period": 2,
    "square-not-allowed": 3,
    "square-count": 4,
    "overlap-not-allowed": 5,
    "overlap-count": 6,
    "exponent": 7,
    "formula": 8,
    "occurrence-budget": 9,
}


def _is_square(u: str) -> bool:
    half = len(u) // 2
    return len(u) >= 2 and len(u) % 2 == 0 and u[:half] == u[half:]


def _is_min_overlap(u: str) -> bool:
    if len(u) < 3 or len(u) % 2 == 0:
        return False
    p = (len(u) - 1) // 2
    return u[: p + 1] == u[p:]


@dataclass(frozen=True)
class ConstraintSet:
    alphabet_size: int
    forbidden_factors: frozenset[str] = frozenset()
    forbidden_formulas: tuple[Formula, ...] = ()
    sq_min_period: int | None = None
    allowed_squares: frozenset[str] | None = None
    allowed_overlaps: frozenset[str] | None = None
    max_square_count: int | None = None
    max_overlap_count: int | None = None
    occurrence_budget: tuple[Formula, int] | None = None
    exponent_cap: tuple[Fraction, bool] | None = None  # (cap, strict)
    graph: LabelledGraph | None = None

    def __post_init__(self):
        if not 1 <= self.alphabet_size <= 10:
            raise AlphabetError(f"alphabet size must be 1..10, got {self.alphabet_size}")
        for fct in self.forbidden_factors:
            if not fct:
                raise ParseError("forbidden factor must be non-empty")
            validate_word(fct, self.alphabet_size)
        for f in self.forbidden_formulas:
            if f.variable_count > MAX_PATTERN_VARIABLES:
                raise DomainError(
                    f"formula {f} has too many variables; use forbid-squares-min-period "
                    "or a localizer reduction instead"
                )
        if self.sq_min_period is not None and self.sq_min_period < 1:
            raise DomainError("square period threshold must be >= 1")
        if self.allowed_squares is not None:
            for u in self.allowed_squares:
                validate_word(u, self.alphabet_size)
                if not _is_square(u):
                    raise ParseError(f"allow-squares entry {u!r} is not a square")
        if self.allowed_overlaps is not None:
            for u in self.allowed_overlaps:
                validate_word(u, self.alphabet_size)
                if not _is_min_overlap(u):
                    raise ParseError(f"allow-overlaps entry {u!r} is not a minimal overlap")
        for bound in (self.max_square_count, self.max_overlap_count):
            if bound is not None and bound < 0:
                raise DomainError("distinct repetition bounds must be >= 0")
        if self.occurrence_budget is not None and self.occurrence_budget[1] < 0:
            raise DomainError("occurrence budget must be >= 0")
        if self.exponent_cap is not None and self.exponent_cap[0] <= 1:
            raise DomainError("exponent cap must exceed 1")
        if self.graph is not None and self.graph.vertex_count != self.alphabet_size:
            raise DomainError("graph vertex count must equal the alphabet size")


@dataclass(frozen=True)
class Violation:
    kind: str
    start: int
    end: int  # index one past the completing letter
    witness: str
    detail: str = ""

    def __str__(self) -> str:
        msg = f"{self.kind} {self.witness} at {self.start}..{self.end}"
        return f"{msg} ({self.detail})" if self.detail else msg


def parse_constraints(text: str) -> ConstraintSet:
    alphabet: int | None = None
    factors: set[str] = set()
    formulas: list[Formula] = []
    sq_min: int | None = None
    allow_sq: set[str] | None = None
    allow_ov: set[str] | None = None
    max_sq: int | None = None
    max_ov: int | None = None
    occ: tuple[Formula, int] | None = None
    exp: tuple[Fraction, bool] | None = None
    graph: LabelledGraph | None = None

    for ln, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        key, args = parts[0], parts[1:]
        try:
            if key == "alphabet":
                (tok,) = args
                alphabet = int(tok)
            elif key == "forbid-factor":
                if not args:
                    raise ParseError("forbid-factor needs at least one factor")
                factors.update(args)
            elif key == "forbid-formula":
                if not args:
                    raise ParseError("forbid-formula needs at least one formula")
                formulas.extend(parse_formula(a) for a in args)
            elif key == "forbid-squares-min-period":
                (tok,) = args
                sq_min = int(tok)
            elif key == "allow-squares":
                allow_sq = set(args) if allow_sq is None else allow_sq | set(args)
            elif key == "allow-overlaps":
                allow_ov = set(args) if allow_ov is None else allow_ov | set(args)
            elif key == "max-distinct-squares":
                (tok,) = args
                max_sq = int(tok)
            elif key == "max-distinct-overlaps":
                (tok,) = args
                max_ov = int(tok)
            elif key == "max-occurrences":
                ftok, ntok = args
                occ = (parse_formula(ftok), int(ntok))
            elif key == "exponent-cap":
                if len(args) == 1:
                    etok, mode = args[0], "strict"
                else:
                    etok, mode = args
                if mode not in ("strict", "weak"):
                    raise ParseError("exponent-cap mode must be 'strict' or 'weak'")
                num, den = etok.split("/") if "/" in etok else (etok, "1")
                exp = (Fraction(int(num), int(den)), mode == "strict")
            elif key == "graph":
                (tok,) = args
                graph = builtin_graph(tok)
            elif key == "graph-edges":
                pairs = []
                for tok in args:
                    a, b = tok.split("-")
                    pairs.append((int(a), int(b)))
                top = max(max(a, b) for a, b in pairs) + 1
                graph = graph_from_edges(max(top, alphabet or 0), pairs)
            else:
                raise ParseError(f"unknown directive {key!r}")
        except (ValueError, ParseError) as e:
            raise ParseError(f"constraint file line {ln}: {e}") from e
    if alphabet is None:
        raise ParseError("constraint file must declare 'alphabet K'")
    if graph is not None and graph.vertex_count < alphabet:
        graph = LabelledGraph(alphabet, graph.edges)
    return ConstraintSet(
        alphabet_size=alphabet,
        forbidden_factors=frozenset(factors),
        forbidden_formulas=tuple(formulas),
        sq_min_period=sq_min,
        allowed_squares=frozenset(allow_sq) if allow_sq is not None else None,
        allowed_overlaps=frozenset(allow_ov) if allow_ov is not None else None,
        max_square_count=max_sq,
        max_overlap_count=max_ov,
        occurrence_budget=occ,
        exponent_cap=exp,
        graph=graph,
    )


def load_constraints(path) -> ConstraintSet:
    with open(path, encoding="utf-8") as fh:
        return parse_constraints(fh.read())


# ---------------------------------------------------------------------------
# whole-word checking (earliest-completing violation)


def _earliest_formula_end(w: str, f: Formula) -> int:
    lo, hi = 1, len(w)  # has_occurrence(w[:hi]) is true; find least such prefix
    while lo < hi:
        mid = (lo + hi) // 2
        if has_occurrence(w[:mid], f):
            hi = mid
        else:
            lo = mid + 1
    return lo


def _first_assignment(w: str, f: Formula) -> str:
    from .formulas import _Engine  # local import to keep the module surface small

    eng = _Engine(w, f, len(w), None)
    eng.solve(list(range(len(eng.frags))), [None] * eng.nvars, first_only=True)
    for t in eng.decoded_results():
        return format_assignment(t)
    return ""


def check(w: str, c: ConstraintSet) -> Violation | None:
    """The earliest-completing violation of ``w`` against ``c``, or None.

    Ordered by completion index, then a fixed kind priority, then start.
    """
    validate_word(w, c.alphabet_size)
    n = len(w)
    cands: list[Violation] = []

    for fct in sorted(c.forbidden_factors):
        i = w.find(fct)
        if i >= 0:
            cands.append(Violation("factor", i, i + len(fct), fct))

    if c.graph is not None and n >= 2:
        adj = c.graph.adjacency()
        if n >= 512:
            arr_g = _as_array(w) - ord("0")
            ok = np.array(adj, dtype=bool)[arr_g[:-1], arr_g[1:]]
            bad = np.flatnonzero(~ok)
            if bad.size:
                i = int(bad[0])
                cands.append(Violation("graph", i, i + 2, w[i : i + 2]))
        else:
            for i in range(n - 1):
                if not adj[int(w[i])][int(w[i + 1])]:
                    cands.append(Violation("graph", i, i + 2, w[i : i + 2]))
                    break

    arr = _as_array(w) if n >= 96 else None

    if c.sq_min_period is not None or c.allowed_squares is not None or c.max_square_count is not None:
        sq_first: dict[str, int] = {}  # factor -> earliest end (for counting)
        best_period: tuple[int, int] | None = None  # (end, start) for sq_min
        best_not_allowed: tuple[int, int] | None = None
        for p in range(1, n // 2 + 1):
            for s, run in period_runs(w, p, arr, min_len=p):
                if c.sq_min_period is not None and p >= c.sq_min_period:
                    cand = (s + 2 * p, s)
                    if best_period is None or cand < best_period:
                        best_period = cand
                if c.allowed_squares is not None or c.max_square_count is not None:
                    for i in range(s, s + min(p, run - p + 1)):
                        fct = w[i : i + 2 * p]
                        if (
                            c.allowed_squares is not None
                            and fct not in c.allowed_squares
                        ):
                            cand = (i + 2 * p, i)
                            if best_not_allowed is None or cand < best_not_allowed:
                                best_not_allowed = cand
                            break
                        sq_first.setdefault(fct, i + 2 * p)
                if best_not_allowed is not None and c.max_square_count is None:
                    break
        if best_period is not None:
            e, s = best_period
            cands.append(Violation("square-period", s, e, w[s:e]))
        if best_not_allowed is not None:
            e, s = best_not_allowed
            cands.append(Violation("square-not-allowed", s, e, w[s:e]))
        if c.max_square_count is not None and len(sq_first) > c.max_square_count:
            by_end = sorted((e, fct) for fct, e in sq_first.items())
            e, fct = by_end[c.max_square_count]
            cands.append(
                Violation(
                    "square-count", e - len(fct), e, fct,
                    f"more than {c.max_square_count} distinct squares",
                )
            )

    if c.allowed_overlaps is not None or c.max_overlap_count is not None:
        ov_first: dict[str, int] = {}
        best_ov: tuple[int, int] | None = None
        for p in range(1, (n - 1) // 2 + 1):
            for s, run in period_runs(w, p, arr, min_len=p + 1):
                for i in range(s, s + min(p, run - p)):
                    fct = w[i : i + 2 * p + 1]
                    if c.allowed_overlaps is not None and fct not in c.allowed_overlaps:
                        cand = (i + 2 * p + 1, i)
                        if best_ov is None or cand < best_ov:
                            best_ov = cand
                        break
                    ov_first.setdefault(fct, i + 2 * p + 1)
        if best_ov is not None:
            e, s = best_ov
            cands.append(Violation("overlap-not-allowed", s, e, w[s:e]))
        if c.max_overlap_count is not None and len(ov_first) > c.max_overlap_count:
            by_end = sorted((e, fct) for fct, e in ov_first.items())
            e, fct = by_end[c.max_overlap_count]
            cands.append(
                Violation(
                    "overlap-count", e - len(fct), e, fct,
                    f"more than {c.max_overlap_count} distinct overlaps",
                )
            )

    if c.exponent_cap is not None:
        e_cap, strict = c.exponent_cap
        best_exp: tuple[int, int, int] | None = None  # (end, start, length)
        for p in range(1, n):
            need = _violation_length(e_cap, p, strict)
            if need > n:
                continue
            for s, run in period_runs(w, p, arr, min_len=need - p):
                cand = (s + need, s, need)
                if best_exp is None or cand < best_exp:
                    best_exp = cand
                break
        if best_exp is not None:
            e, s, L = best_exp
            cands.append(
                Violation("exponent", s, e, w[s:e], f"exponent {'>' if strict else '>='} {e_cap}")
            )

    for f in c.forbidden_formulas:
        if has_occurrence(w, f):
            end = _earliest_formula_end(w, f)
            cands.append(Violation("formula", 0, end, str(f), _first_assignment(w[:end], f)))

    if c.occurrence_budget is not None:
        f, budget = c.occurrence_budget
        count = len(find_occurrences(w, f, cap=max(1, n)))
        if count > budget:
            lo, hi = 1, n
            while lo < hi:
                mid = (lo + hi) // 2
                if len(find_occurrences(w[:mid], f, cap=max(1, mid))) > budget:
                    hi = mid
                else:
                    lo = mid + 1
            cands.append(
                Violation(
                    "occurrence-budget", 0, lo, str(f),
                    f"{count} distinct occurrences, budget {budget}",
                )
            )

    if not cands:
        return None
    return min(cands, key=lambda v: (v.end, _KIND_PRIORITY[v.kind], v.start))
