"""Saturation checks and the greedy smallest-letter, leftmost-gap construction."""

from __future__ import annotations

import enum
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import _kernels
from .core import Pattern, Seq, contains, is_r_sparse, parse_pattern
from .errors import AlphabetTooSmall, GapOutOfRange, LetterOutOfAlphabet


class Verdict(str, enum.Enum):
    SATURATED = "Saturated"
    SEMISATURATED_ONLY = "SemisaturatedOnly"
    NOT_SEMISATURATED = "NotSemisaturated"
    CONTAINS_FORBIDDEN = "ContainsForbidden"
    NOT_SPARSE = "NotSparse"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class SaturationReport:
    """Outcome of :func:`verify`.

    ``counterexample`` is the least ``(letter, gap)`` whose insertion keeps
    the sequence r-sparse without creating a copy of the pattern through the
    new letter.  ``copy`` holds 1-based positions of a copy already present.
    ``sparsity_violation`` is the 1-based position of the first letter that
    repeats inside an r-window.
    """

    verdict: Verdict
    counterexample: tuple[int, int] | None = None
    copy: tuple[int, ...] | None = None
    sparsity_violation: int | None = None

    @property
    def saturated(self) -> bool:
        return self.verdict is Verdict.SATURATED

    @property
    def semisaturated(self) -> bool:
        return self.verdict in (Verdict.SATURATED, Verdict.SEMISATURATED_ONLY)

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "counterexample": (
                None
                if self.counterexample is None
                else {"letter": self.counterexample[0], "gap": self.counterexample[1]}
            ),
            "copy": None if self.copy is None else list(self.copy),
            "sparsity_violation": self.sparsity_violation,
        }


def _as_pattern(u) -> Pattern:
    if isinstance(u, Pattern):
        return u
    if isinstance(u, str):
        return parse_pattern(u)
    return Pattern(tuple(u))


def _alphabet(s, n):
    if n is not None:
        return n
    if isinstance(s, Seq):
        return s.n
    return max(s, default=0)


def can_properly_insert(s: Sequence[int], x: int, gap: int, u, n: int | None = None) -> bool:
    """True iff inserting ``x`` before ``s[gap]`` leaves an r-sparse, u-free sequence."""
    u = _as_pattern(u)
    n = _alphabet(s, n)
    if not 1 <= x <= n:
        raise LetterOutOfAlphabet(f"letter {x} outside alphabet 1..{n}")
    if not 0 <= gap <= len(s):
        raise GapOutOfRange(f"gap {gap} outside 0..{len(s)}")
    t = list(s[:gap]) + [x] + list(s[gap:])
    if not is_r_sparse(t, u.r):
        return False
    if len(t) < len(u):
        return True
    if _kernels.copy_through(t, u.letters, gap):
        return False
    return contains(s, u) is None


def _first_bad_window(s: Sequence[int], r: int) -> int | None:
    for i in range(len(s)):
        if s[i] in s[max(0, i - r + 1):i]:
            return i + 1
    return None


def verify(s: Sequence[int], n: int | None, u) -> SaturationReport:
    """Classify ``s`` against pattern ``u`` over the alphabet ``[n]``.

    An insertion is blocked when it breaks r-sparsity or creates a copy of
    ``u`` that uses the inserted letter.
    """
    u = _as_pattern(u)
    n = _alphabet(s, n)
    s = list(s)
    if s and max(s) > n:
        raise LetterOutOfAlphabet(f"letter {max(s)} outside alphabet 1..{n}")
    bad = _first_bad_window(s, u.r)
    if bad is not None:
        return SaturationReport(Verdict.NOT_SPARSE, sparsity_violation=bad)
    copy = contains(s, u)
    free = _kernels.first_insertion(s, u.letters, u.r, n)
    if free is None:
        if copy is None:
            return SaturationReport(Verdict.SATURATED)
        return SaturationReport(Verdict.SEMISATURATED_ONLY, copy=copy)
    if copy is None:
        return SaturationReport(Verdict.NOT_SEMISATURATED, counterexample=tuple(free))
    return SaturationReport(Verdict.CONTAINS_FORBIDDEN, counterexample=tuple(free), copy=copy)


@dataclass
class GreedyRun:
    """Final greedy output plus the state seen just before each letter's first insertion."""

    seq: Seq
    before_first: dict[int, tuple[int, ...]] = field(default_factory=dict)
    insertions: int = 0


def greedy_run(n: int, u, check: bool = False) -> GreedyRun:
    u = _as_pattern(u)
    r = u.r
    if n < r - 1:
        raise AlphabetTooSmall(f"need n >= r - 1 = {r - 1}, got {n}")
    s = list(range(1, r))
    before_first: dict[int, tuple[int, ...]] = {}
    seen = set(s)
    steps = 0
    while True:
        found = _kernels.first_insertion(s, u.letters, r, n)
        if found is None:
            break
        x, g = found
        if x not in seen:
            before_first[x] = tuple(s)
            seen.add(x)
        s.insert(g, x)
        steps += 1
        if check:
            assert is_r_sparse(s, r), s
            assert contains(s, u) is None, s
    return GreedyRun(Seq(tuple(s), n), before_first, steps)


def greedy_saturate(n: int, u, check: bool = False) -> Seq:
    """Insert the smallest letter at the leftmost proper gap until none remains.

    Starts from ``1, ..., r-1`` and restarts the letter scan from 1 after
    every insertion.
    """
    return greedy_run(n, u, check=check).seq


@dataclass(frozen=True)
class ScanRecord:
    n: int
    length: int
    delta: int
    prefix_ok: bool


@dataclass(frozen=True)
class Periodicity:
    period: int
    preperiod: int
    start_n: int  # first n from which delta is periodic
    values: tuple[int, ...]  # one period of delta


@dataclass
class ScanResult:
    pattern: Pattern
    records: list[ScanRecord]
    periodicity: Periodicity | None

    @property
    def lengths(self) -> list[int]:
        return [rec.length for rec in self.records]

    @property
    def deltas(self) -> list[int]:
        return [rec.delta for rec in self.records]

    def describe_periodicity(self) -> str:
        p = self.periodicity
        if p is None:
            return "aperiodic within horizon"
        return f"period {p.period} from n={p.start_n} (values {list(p.values)})"

    def to_csv(self) -> str:
        lines = ["n,length,delta,prefix_ok"]
        lines += [
            f"{rec.n},{rec.length},{rec.delta},{str(rec.prefix_ok).lower()}"
            for rec in self.records
        ]
        return "\n".join(lines) + "\n"


def find_periodicity(values: Sequence[int], min_repeats: int = 3) -> tuple[int, int] | None:
    """Smallest period ``p`` (then smallest preperiod ``q``) of an eventually periodic tail.

    The tail ``values[q:]`` must cover at least ``min_repeats`` full periods.
    """
    values = list(values)
    m = len(values)
    for p in range(1, m // min_repeats + 1):
        q = m - min_repeats * p
        # extend the periodic tail leftwards as far as it holds
        if any(values[i] != values[i + p] for i in range(q, m - p)):
            continue
        while q > 0 and values[q - 1] == values[q - 1 + p]:
            q -= 1
        return p, q
    return None


def _greedy_pair(args):
    n, letters = args
    run = greedy_run(n, Pattern(letters))
    return n, run.seq.letters, run.before_first.get(n)


def scan(u, n_max: int, threads: int = 1) -> ScanResult:
    u = _as_pattern(u)
    r = u.r
    ns = list(range(r - 1, n_max + 1))
    jobs = [(n, u.letters) for n in ns]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_greedy_pair, jobs))
    else:
        results = [_greedy_pair(job) for job in jobs]
    out = {n: (seq, before) for n, seq, before in results}
    records = []
    for n in range(r, n_max + 1):
        seq, before = out[n]
        prev = out[n - 1][0]
        prefix = before if before is not None else seq
        records.append(ScanRecord(n, len(seq), len(seq) - len(prev), prefix == prev))
    found = find_periodicity([rec.delta for rec in records])
    periodicity = None
    if found is not None:
        p, q = found
        periodicity = Periodicity(p, q, r + q, tuple(rec.delta for rec in records[q:q + p]))
    return ScanResult(u, records, periodicity)
