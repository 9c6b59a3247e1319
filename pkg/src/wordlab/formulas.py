"""Patterns and formulas over variables A..Z: parsing and occurrence search.

A formula is dot-separated fragments; an occurrence is a non-erasing
assignment of words to variables making every fragment image a factor of the
searched word. Occurrences are identified by the tuple of variable images.

The search classifies each fragment by its repetition structure (variable
powers, periodic blocks such as ABAB or ABABA, doubled blocks uu) and
enumerates candidate images from period runs of the word instead of blindly
iterating image lengths; fragments with no usable structure fall back to
position-anchored backtracking.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError, ParseError, ResourceBudgetError
from .repetitions import period_runs

# Larger patterns blow up combinatorially; use find_sq_t or a localizer
# reduction instead of SQ_7+ as a literal pattern.
MAX_PATTERN_VARIABLES = 6
DEFAULT_STEP_BUDGET = 200_000_000
_POWER_INDEX_MAX = 4_000_000


@dataclass(frozen=True)
class Formula:
    """Dot-separated fragments; a pattern is a formula with one fragment."""

    fragments: tuple[str, ...]

    def __post_init__(self):
        if not self.fragments:
            raise ParseError("formula needs at least one fragment")
        for frag in self.fragments:
            if not frag:
                raise ParseError("formula has an empty fragment")
            for ch in frag:
                if not "A" <= ch <= "Z":
                    raise ParseError(f"formula contains invalid character {ch!r}")

    @property
    def variable_count(self) -> int:
        return len({ch for frag in self.fragments for ch in frag})

    def __str__(self) -> str:
        return ".".join(self.fragments)


def parse_formula(text: str) -> Formula:
    """Parse and normalize: variables renamed to A, B, ... by first occurrence."""
    if not text:
        raise ParseError("empty formula")
    for ch in text:
        if ch != "." and not "A" <= ch <= "Z":
            raise ParseError(f"formula contains invalid character {ch!r}")
    parts = text.split(".")
    if any(not p for p in parts):
        raise ParseError("formula has an empty fragment")
    rename: dict[str, str] = {}
    for ch in text:
        if ch != "." and ch not in rename:
            rename[ch] = chr(ord("A") + len(rename))
    return Formula(tuple("".join(rename[ch] for ch in p) for p in parts))


def is_doubled(f: Formula) -> bool:
    """True iff no variable occurs exactly once across all fragments."""
    counts: dict[str, int] = {}
    for frag in f.fragments:
        for ch in frag:
            counts[ch] = counts.get(ch, 0) + 1
    return all(c >= 2 for c in counts.values())


def format_assignment(assignment: tuple[str, ...]) -> str:
    return ", ".join(f"{chr(ord('A') + i)}={img}" for i, img in enumerate(assignment))


# ---------------------------------------------------------------------------
# compiled fragment structure


@dataclass(frozen=True)
class _Frag:
    occs: tuple[int, ...]  # variable ids in occurrence order
    var_ids: frozenset
    kind: str  # distinct | power | periodic | vsquare | generic
    d: int = 0  # periodic: distinct block size; power: 1
    q: int = 0  # periodic: full block repeats
    r: int = 0  # periodic: leftover occurrences
    runlen: tuple[int, ...] = ()  # adjacent same-variable run length at each occurrence


def _classify(occs: tuple[int, ...]) -> _Frag:
    m = len(occs)
    vars_ = frozenset(occs)
    d = len(vars_)
    runlen = [1] * m
    for j in range(m - 2, -1, -1):
        if occs[j] == occs[j + 1]:
            runlen[j] = runlen[j + 1] + 1
    runs = tuple(runlen)
    if d == m:
        return _Frag(occs, vars_, "distinct", runlen=runs)
    if d == 1:
        return _Frag(occs, vars_, "power", d=1, q=m, r=0, runlen=runs)
    if len(set(occs[:d])) == d and all(occs[i] == occs[i % d] for i in range(m)):
        return _Frag(occs, vars_, "periodic", d=d, q=m // d, r=m % d, runlen=runs)
    if m % 2 == 0 and occs[: m // 2] == occs[m // 2 :]:
        return _Frag(occs, vars_, "vsquare", runlen=runs)
    return _Frag(occs, vars_, "generic", runlen=runs)


@lru_cache(maxsize=512)
def _compiled(f: Formula) -> tuple[_Frag, ...]:
    return tuple(_classify(tuple(ord(ch) - ord("A") for ch in frag)) for frag in f.fragments)


# ---------------------------------------------------------------------------
# search engine


class _Engine:
    def __init__(self, w, f: Formula, cap: int, budget: int | None):
        self.w: bytes = w.encode("ascii") if isinstance(w, str) else bytes(w)
        self.n = len(self.w)
        self.frags = _compiled(f)
        self.nvars = f.variable_count
        self.budget = budget if budget is not None else DEFAULT_STEP_BUDGET
        self.steps = 0
        self.results: set[tuple[bytes, ...]] = set()
        self._power_index: dict[int, dict[int, list[int]] | None] = {}
        self._runs: dict[tuple[int, int], list[tuple[int, int]]] = {}
        self._roots: dict[int, frozenset[bytes]] = {}
        self._arr = None
        # per-variable cap: other occurrences in a fragment need >= 1 letter each
        caps = [cap] * self.nvars
        for frag in self.frags:
            m = len(frag.occs)
            for v in frag.var_ids:
                cnt = sum(1 for u in frag.occs if u == v)
                caps[v] = min(caps[v], (self.n - (m - cnt)) // cnt)
        self.caps = caps
        self._lengths: list[frozenset[int] | None] | None = None

    def _step(self, k: int = 1) -> None:
        self.steps += k
        if self.steps > self.budget:
            raise ResourceBudgetError(
                "occurrence search exceeded its step budget (partial results attached)",
                partial={tuple(img.decode() for img in t) for t in self.results},
            )

    def _period_runs(self, p: int, min_len: int = 1) -> list[tuple[int, int]]:
        key = (p, min_len)
        runs = self._runs.get(key)
        if runs is None:
            if self._arr is None and self.n >= 96:
                import numpy as np

                self._arr = np.frombuffer(self.w, dtype=np.uint8)
            runs = period_runs(self.w.decode("ascii"), p, self._arr, min_len)
            self._runs[key] = runs
        return runs

    def _powers(self, k: int) -> dict[int, list[int]] | None:
        """pos -> periods g such that w[pos:pos+k*g] is a k-power; None if too big."""
        if k in self._power_index:
            return self._power_index[k]
        index: dict[int, list[int]] = {}
        pairs = 0
        for g in range(1, self.n // k + 1):
            for s, run in self._period_runs(g, (k - 1) * g):
                span = run - (k - 1) * g
                pairs += span + 1
                if pairs > _POWER_INDEX_MAX:
                    self._power_index[k] = None
                    return None
                for i in range(s, s + span + 1):
                    index.setdefault(i, []).append(g)
        self._power_index[k] = index
        return index

    def _kpower_roots(self, k: int) -> frozenset[bytes]:
        """All x such that x^k is a factor of w."""
        roots = self._roots.get(k)
        if roots is None:
            found: set[bytes] = set()
            for g in range(1, self.n // k + 1):
                for s, run in self._period_runs(g, (k - 1) * g):
                    span = run - (k - 1) * g
                    for i in range(s, s + min(g, span + 1)):
                        found.add(self.w[i : i + g])
            roots = frozenset(found)
            self._roots[k] = roots
        return roots

    def _power_lengths(self, k: int) -> frozenset[int]:
        """Periods g for which some k-power of period g occurs in w."""
        return frozenset(
            g
            for g in range(1, self.n // k + 1)
            if self._period_runs(g, (k - 1) * g)
        )

    def lengths(self, v: int) -> frozenset[int] | None:
        """Allowed image lengths for variable v, from its adjacent runs.

        If v occurs as an adjacent k-run in some fragment, its image x must
        satisfy x^k in Fact(w), so |x| is restricted to k-power periods.
        None means unconstrained.
        """
        if self._lengths is None:
            sets: list[frozenset[int] | None] = [None] * self.nvars
            for frag in self.frags:
                j = 0
                while j < len(frag.occs):
                    k = frag.runlen[j]
                    if k >= 2:
                        u = frag.occs[j]
                        allowed = self._power_lengths(k)
                        sets[u] = allowed if sets[u] is None else sets[u] & allowed
                    j += max(k, 1)
            self._lengths = sets
        return self._lengths[v]

    def _length_candidates(self, v: int, lo: int, hi: int):
        allowed = self.lengths(v)
        if allowed is None:
            return range(lo, hi + 1)
        return [g for g in sorted(allowed) if lo <= g <= hi]

    def _assigned_fragment_ok(self, frag: _Frag, assign) -> bool:
        """Membership of a fully-assigned fragment image, using power-root sets
        to avoid repeated full-text scans for x^k-shaped images."""
        self._step()
        if frag.kind == "power":
            return assign[frag.occs[0]] in self._kpower_roots(len(frag.occs))
        if frag.kind == "vsquare":
            half = b"".join(assign[v] for v in frag.occs[: len(frag.occs) // 2])
            return half in self._kpower_roots(2)
        if frag.kind == "periodic" and frag.r == 0:
            block = b"".join(assign[v] for v in frag.occs[: frag.d])
            return block in self._kpower_roots(frag.q)
        img = b"".join(assign[v] for v in frag.occs)
        return self.w.find(img) >= 0

    # -- fragment matchers ------------------------------------------------

    def _rest_min(self, occs, j, assign) -> int:
        return sum(1 if assign[v] is None else len(assign[v]) for v in occs[j:])

    def _match_at(self, frag: _Frag, j: int, pos: int, assign):
        """Match occurrences j.. of the fragment starting at pos; yields assigns."""
        self._step()
        occs = frag.occs
        if j == len(occs):
            yield assign
            return
        w = self.w
        v = occs[j]
        img = assign[v]
        if img is not None:
            L = len(img)
            if w[pos : pos + L] == img:
                yield from self._match_at(frag, j + 1, pos + L, assign)
            return
        k = frag.runlen[j]
        rest = self._rest_min(occs, j + k, assign)
        maxlen = min(self.caps[v], (self.n - pos - rest) // k)
        if maxlen < 1:
            return
        if k >= 2:
            index = self._powers(k)
            if index is not None:
                for g in index.get(pos, ()):
                    if g > maxlen:
                        break
                    assign2 = list(assign)
                    assign2[v] = w[pos : pos + g]
                    yield from self._match_at(frag, j + k, pos + k * g, assign2)
                return
        if k == 1 and j + 1 < len(occs) and assign[occs[j + 1]] is not None:
            # jump straight to the occurrences of the known following image
            nxt = assign[occs[j + 1]]
            allowed = self.lengths(v)
            t = w.find(nxt, pos + 1)
            while t != -1 and t - pos <= maxlen:
                self._step()
                if allowed is None or t - pos in allowed:
                    assign2 = list(assign)
                    assign2[v] = w[pos:t]
                    yield from self._match_at(frag, j + 1, t, assign2)
                t = w.find(nxt, t + 1)
            return
        for L in self._length_candidates(v, 1, maxlen):
            self._step()
            if k >= 2 and w[pos : pos + (k - 1) * L] != w[pos + L : pos + k * L]:
                continue
            assign2 = list(assign)
            assign2[v] = w[pos : pos + L]
            yield from self._match_at(frag, j + k, pos + k * L, assign2)

    def _match_exact(self, occs, j: int, pos: int, end: int, assign):
        """Match occurrences j.. exactly filling [pos, end)."""
        self._step()
        if j == len(occs):
            if pos == end:
                yield assign
            return
        w = self.w
        v = occs[j]
        img = assign[v]
        if img is not None:
            L = len(img)
            if pos + L <= end and w[pos : pos + L] == img:
                yield from self._match_exact(occs, j + 1, pos + L, end, assign)
            return
        rest = self._rest_min(occs, j + 1, assign)
        maxlen = min(self.caps[v], end - pos - rest)
        for L in self._length_candidates(v, 1, maxlen):
            assign2 = list(assign)
            assign2[v] = w[pos : pos + L]
            yield from self._match_exact(occs, j + 1, pos + L, end, assign2)

    def _position_matches(self, frag: _Frag, assign):
        total_min = self._rest_min(frag.occs, 0, assign)
        first = frag.occs[0]
        img = assign[first]
        if img is not None:
            # jump between occurrences of the known leading image
            pos = self.w.find(img)
            while 0 <= pos <= self.n - total_min:
                yield from self._match_at(frag, 0, pos, assign)
                pos = self.w.find(img, pos + 1)
            return
        for pos in range(self.n - total_min + 1):
            yield from self._match_at(frag, 0, pos, assign)

    def _power_matches(self, frag: _Frag, assign):
        v = frag.occs[0]
        k = len(frag.occs)
        seen: set[bytes] = set()
        for g in self._length_candidates(v, 1, min(self.caps[v], self.n // k)):
            for s, run in self._period_runs(g, (k - 1) * g):
                span = run - (k - 1) * g
                for i in range(s, s + min(g, span + 1)):
                    self._step()
                    img = self.w[i : i + g]
                    if img in seen:
                        continue
                    if g <= 256 or len(seen) < 100_000:
                        seen.add(img)  # dedup is best-effort; results dedup at the end
                    assign2 = list(assign)
                    assign2[v] = img
                    yield assign2

    def _splits(self, total: int, caps: list[int], lensets):
        """Compositions of total into positive parts bounded by caps and length sets."""
        if len(caps) == 1:
            if 1 <= total <= caps[0] and (lensets[0] is None or total in lensets[0]):
                yield (total,)
            return
        head, allowed = caps[0], lensets[0]
        rest, rest_sets = caps[1:], lensets[1:]
        lo = max(1, total - sum(rest))
        hi = min(head, total - len(rest))
        firsts = range(lo, hi + 1) if allowed is None else [g for g in sorted(allowed) if lo <= g <= hi]
        for first in firsts:
            self._step()
            for tail in self._splits(total - first, rest, rest_sets):
                yield (first,) + tail

    def _periodic_matches(self, frag: _Frag, assign):
        d, q, r = frag.d, frag.q, frag.r
        block = frag.occs[:d]
        caps = [self.caps[v] for v in block]
        lensets = [self.lengths(v) for v in block]
        g_hi = min(sum(caps), (self.n - r) // q if r else self.n // q)
        seen: set[tuple[bytes, ...]] = set()
        for G in range(d, g_hi + 1):
            L_min = q * G + r
            for s, run in self._period_runs(G, max(L_min - G, 1)):
                count = run + G - L_min + 1  # valid start positions from s
                avail_base = s + run + G
                for i in range(s, s + min(G, count)):
                    avail = avail_base - i
                    for split in self._splits(G, caps, lensets):
                        if r and q * G + sum(split[:r]) > avail:
                            continue
                        images = []
                        off = i
                        for L in split:
                            images.append(self.w[off : off + L])
                            off += L
                        key = tuple(images)
                        if key in seen:
                            continue
                        if G <= 256 or len(seen) < 100_000:
                            seen.add(key)  # best-effort dedup
                        assign2 = list(assign)
                        for v, img in zip(block, images):
                            assign2[v] = img
                        yield assign2

    def _vsquare_matches(self, frag: _Frag, assign):
        half = frag.occs[: len(frag.occs) // 2]
        for P in range(len(half), self.n // 2 + 1):
            for s, run in self._period_runs(P, P):
                for i in range(s, s + min(P, run - P + 1)):
                    yield from self._match_exact(half, 0, i, i + P, assign)

    def _frag_matches(self, frag: _Frag, assign):
        unassigned = [v for v in frag.var_ids if assign[v] is None]
        if not unassigned:
            if self._assigned_fragment_ok(frag, assign):
                yield assign
            return
        if len(unassigned) == len(frag.var_ids):
            if frag.kind == "power":
                yield from self._power_matches(frag, assign)
                return
            if frag.kind == "periodic":
                yield from self._periodic_matches(frag, assign)
                return
            if frag.kind == "vsquare":
                yield from self._vsquare_matches(frag, assign)
                return
        yield from self._position_matches(frag, assign)

    # -- joint solving ----------------------------------------------------

    def _pick(self, remaining, assign) -> int:
        def key(fi):
            frag = self.frags[fi]
            unassigned = sum(1 for v in frag.var_ids if assign[v] is None)
            if unassigned == 0:
                return (0, 0, 0)  # cheap verification, do first
            # run-based enumeration only applies with no variable pinned yet;
            # prefer it, and prefer pinning many variables at once
            if frag.kind in ("power", "periodic", "vsquare") and unassigned == len(frag.var_ids):
                return (1, -unassigned, -len(frag.occs))
            return (2, unassigned, -len(frag.occs))

        return min(remaining, key=key)

    def solve(self, remaining, assign, first_only: bool) -> bool:
        if not remaining:
            self.results.add(tuple(assign))
            return True
        fi = self._pick(remaining, assign)
        rest = [x for x in remaining if x != fi]
        found = False
        for assign2 in self._frag_matches(self.frags[fi], assign):
            if self.solve(rest, assign2, first_only):
                found = True
                if first_only:
                    return True
        return found

    def _anchored(self, frag: _Frag, j: int, end: int, assign):
        """Match occurrences ..j of the fragment so its image ends at ``end``."""
        self._step()
        if j < 0:
            yield assign
            return
        w = self.w
        v = frag.occs[j]
        img = assign[v]
        if img is not None:
            L = len(img)
            if end >= L and w[end - L : end] == img:
                yield from self._anchored(frag, j - 1, end - L, assign)
            return
        rest = self._rest_min(frag.occs[:j], 0, assign)
        maxlen = min(self.caps[v], end - rest)
        for L in self._length_candidates(v, 1, maxlen):
            assign2 = list(assign)
            assign2[v] = w[end - L : end]
            yield from self._anchored(frag, j - 1, end - L, assign2)

    def solve_anchored(self, first_only: bool) -> bool:
        """Occurrences where at least one fragment image is a suffix of w."""
        found = False
        for fi, frag in enumerate(self.frags):
            rest = [x for x in range(len(self.frags)) if x != fi]
            empty = [None] * self.nvars
            if len(self.frags) == 1 and frag.kind in ("power", "periodic") and first_only:
                if self._suffix_special(frag):
                    return True
                continue
            for assign in self._anchored(frag, len(frag.occs) - 1, self.n, empty):
                if self.solve(rest, assign, first_only):
                    found = True
                    if first_only:
                        return True
        return found

    def _suffix_special(self, frag: _Frag) -> bool:
        """Existence-only suffix check for power/periodic single fragments."""
        w, n = self.w, self.n
        if frag.kind == "power":
            k = len(frag.occs)
            for g in range(1, min(self.caps[frag.occs[0]], n // k) + 1):
                self._step()
                if w[n - k * g : n - g] == w[n - (k - 1) * g : n]:
                    return True
            return False
        d, q, r = frag.d, frag.q, frag.r
        caps = [self.caps[v] for v in frag.occs[:d]]
        g_hi = min(sum(caps), (n - r) // q if r else n // q)
        for G in range(d, g_hi + 1):
            self._step()
            L = q * G + r
            if L <= n and w[n - L : n - G] == w[n - L + G : n]:
                return True
        return False

    def decoded_results(self) -> set[tuple[str, ...]]:
        return {tuple(img.decode("ascii") for img in t) for t in self.results}


def _guard_variables(f: Formula) -> None:
    if f.variable_count > MAX_PATTERN_VARIABLES:
        raise DomainError(
            f"formula has {f.variable_count} variables (> {MAX_PATTERN_VARIABLES}); "
            "use find_sq_t or a localizer reduction for wide square patterns"
        )


def find_occurrences(w: str, f: Formula, cap: int, step_budget: int | None = None) -> set[tuple[str, ...]]:
    """All assignments (image tuple per variable, A first) with images of length <= cap."""
    _guard_variables(f)
    if cap < 1:
        raise DomainError("image length cap must be >= 1")
    eng = _Engine(w, f, cap, step_budget)
    eng.solve(list(range(len(eng.frags))), [None] * eng.nvars, first_only=False)
    return eng.decoded_results()


def has_occurrence(w: str, f: Formula, step_budget: int | None = None) -> bool:
    _guard_variables(f)
    if len(w) == 0:
        return False
    eng = _Engine(w, f, len(w), step_budget)
    return eng.solve(list(range(len(eng.frags))), [None] * eng.nvars, first_only=True)


def avoids(w: str, f: Formula, step_budget: int | None = None) -> bool:
    """True iff w contains no occurrence of f (image lengths implicitly <= |w|)."""
    return not has_occurrence(w, f, step_budget)


def new_occurrence_exists(w, f: Formula, step_budget: int | None = None) -> bool:
    """Occurrence with >= 1 fragment image ending at the last position.

    When every proper prefix of ``w`` avoids ``f``, this decides whether ``w``
    still avoids it; used for incremental checking during search.
    """
    _guard_variables(f)
    if len(w) == 0:
        return False
    eng = _Engine(w, f, len(w), step_budget)
    return eng.solve_anchored(first_only=True)


def new_assignments(w, f: Formula, step_budget: int | None = None) -> set[tuple[str, ...]]:
    """All assignments with >= 1 fragment image ending at the last position."""
    _guard_variables(f)
    if len(w) == 0:
        return set()
    eng = _Engine(w, f, len(w), step_budget)
    eng.solve_anchored(first_only=False)
    return eng.decoded_results()
