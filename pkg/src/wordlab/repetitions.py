"""Repetition detection: squares, overlaps, bounded-period squares, exact exponents.

A repetition is a factor r with w[i] == w[i+p] throughout, p its period and
len(r)/p its exponent (an exact rational). All scans are quadratic
period-by-period passes; long inputs go through vectorized equality masks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError

# Below this length plain loops beat array setup.
_NUMPY_MIN = 96


@dataclass(frozen=True)
class Repetition:
    start: int
    period: int
    length: int

    @property
    def exponent(self) -> Fraction:
        return Fraction(self.length, self.period)

    def factor_of(self, w: str) -> str:
        return w[self.start : self.start + self.length]


def format_exponent(e: Fraction) -> str:
    return f"{e.numerator}/{e.denominator}"


def _as_array(w: str) -> np.ndarray:
    return np.frombuffer(w.encode("ascii"), dtype=np.uint8)


def _run_bounds(mask: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    m = mask.view(np.int8)
    d = np.diff(m)
    starts = np.flatnonzero(d == 1) + 1
    ends = np.flatnonzero(d == -1) + 1
    if m[0]:
        starts = np.concatenate(([0], starts))
    if m[-1]:
        ends = np.concatenate((ends, [m.size]))
    return starts, ends


def _true_runs(mask: np.ndarray, min_len: int = 1) -> list[tuple[int, int]]:
    """Maximal runs of True of length >= min_len, as (start, length)."""
    if mask.size == 0 or not mask.any():
        return []
    starts, ends = _run_bounds(mask)
    lengths = ends - starts
    if min_len > 1:
        keep = lengths >= min_len
        starts, lengths = starts[keep], lengths[keep]
    return list(zip(starts.tolist(), lengths.tolist()))


def period_runs(
    w: str, p: int, arr: np.ndarray | None = None, min_len: int = 1
) -> list[tuple[int, int]]:
    """Maximal runs (start, length >= min_len) of positions i with w[i] == w[i+p].

    A run of length r starting at s means w[s : s+p+r] has period p.
    """
    n = len(w)
    min_len = max(min_len, 1)
    if p < 1 or p >= n:
        return []
    if n < _NUMPY_MIN and arr is None:
        runs = []
        start = None
        for i in range(n - p):
            if w[i] == w[i + p]:
                if start is None:
                    start = i
            elif start is not None:
                if i - start >= min_len:
                    runs.append((start, i - start))
                start = None
        if start is not None and n - p - start >= min_len:
            runs.append((start, n - p - start))
        return runs
    if arr is None:
        arr = _as_array(w)
    return _true_runs(arr[p:] == arr[: n - p], min_len)


def longest_period_run(
    w: str, p: int, arr: np.ndarray | None = None
) -> tuple[int, int] | None:
    """Earliest longest run for one period, or None if w[i] != w[i+p] throughout."""
    n = len(w)
    if p < 1 or p >= n:
        return None
    if n < _NUMPY_MIN and arr is None:
        best_s = -1
        best_run = 0
        start = -1
        for i in range(n - p):
            if w[i] == w[i + p]:
                if start < 0:
                    start = i
            elif start >= 0:
                if i - start > best_run:
                    best_s, best_run = start, i - start
                start = -1
        if start >= 0 and n - p - start > best_run:
            best_s, best_run = start, n - p - start
        return (best_s, best_run) if best_run else None
    if arr is None:
        arr = _as_array(w)
    mask = arr[p:] == arr[: n - p]
    if not mask.any():
        return None
    starts, ends = _run_bounds(mask)
    lengths = ends - starts
    i = int(np.argmax(lengths))
    return int(starts[i]), int(lengths[i])


def distinct_squares(w: str) -> set[str]:
    """All distinct factors of the form uu, u non-empty."""
    n = len(w)
    out: set[str] = set()
    arr = _as_array(w) if n >= _NUMPY_MIN else None
    for p in range(1, n // 2 + 1):
        for s, run in period_runs(w, p, arr, min_len=p):
            # windows repeat with stride p inside a periodic run
            for i in range(s, s + min(p, run - p + 1)):
                out.add(w[i : i + 2 * p])
    return out


def distinct_min_overlaps(w: str) -> set[str]:
    """Distinct minimal overlap witnesses: factors of length 2p+1 with period p."""
    n = len(w)
    out: set[str] = set()
    arr = _as_array(w) if n >= _NUMPY_MIN else None
    for p in range(1, (n - 1) // 2 + 1):
        for s, run in period_runs(w, p, arr, min_len=p + 1):
            for i in range(s, s + min(p, run - p)):
                out.add(w[i : i + 2 * p + 1])
    return out


def find_sq_t(w: str, t: int) -> Repetition | None:
    """Leftmost (then shortest-period) square uu with |u| >= t, if any."""
    if t < 1:
        raise DomainError("square period threshold must be >= 1")
    n = len(w)
    arr = _as_array(w) if n >= _NUMPY_MIN else None
    best: tuple[int, int] | None = None
    for p in range(t, n // 2 + 1):
        for s, run in period_runs(w, p, arr, min_len=p):
            if best is None or (s, p) < best:
                best = (s, p)
            break  # later runs of this period start further right
    if best is None:
        return None
    return Repetition(best[0], best[1], 2 * best[1])


def max_exponent(w: str) -> tuple[Fraction, Repetition]:
    """Maximum exponent over all repetition factors, with a witness.

    Ties pick the smallest start, then the smallest period.
    """
    n = len(w)
    if n < 2:
        raise DomainError("max_exponent needs a word of length >= 2")
    arr = _as_array(w) if n >= _NUMPY_MIN else None
    num, den = 1, 1  # best exponent as a raw ratio, compared by cross-multiplication
    witness = Repetition(0, 1, 1)
    for p in range(1, n):
        top = longest_period_run(w, p, arr)
        if top is None:
            continue
        at, run = top
        lhs = (p + run) * den
        rhs = num * p
        if lhs > rhs or (lhs == rhs and (at, p) < (witness.start, witness.period)):
            num, den = p + run, p
            witness = Repetition(at, p, p + run)
    return Fraction(num, den), witness


def _violation_length(e: Fraction, p: int, strict: bool) -> int:
    """Smallest factor length of period p whose exponent beats the cap."""
    if strict:
        return (e.numerator * p) // e.denominator + 1  # length/p > e
    return -((-e.numerator * p) // e.denominator)  # length/p >= e


def is_exponent_free(w: str, e: Fraction, strict: bool) -> Repetition | None:
    """None iff no repetition has exponent > e (strict) or >= e (not strict).

    Otherwise a violating witness of minimal offending length, smallest start
    then smallest period.
    """
    e = Fraction(e)
    if e <= 1:
        raise DomainError("exponent threshold must exceed 1")
    n = len(w)
    arr = _as_array(w) if n >= _NUMPY_MIN else None
    best: tuple[int, int, int] | None = None  # (start, period, length)
    for p in range(1, n):
        need = _violation_length(e, p, strict)
        if need > n:
            continue
        for s, run in period_runs(w, p, arr, min_len=need - p):
            if best is None or (s, p) < (best[0], best[1]):
                best = (s, p, need)
            break
    if best is None:
        return None
    return Repetition(best[0], best[1], best[2])
