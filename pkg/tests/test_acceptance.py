"""Acceptance gate: one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py`` (lines appear in the terminal
summary) or ``python tests/test_acceptance.py``.
"""

import json
import sys
import time
from itertools import product
from pathlib import Path


sys.path.insert(0, str(Path(__file__).parent))

from seqsat.constructions import (  # noqa: E402
    alternation_family,
    block_construction,
    closed_form_abcacbc,
    infinite_analogue,
    is_irreducible,
    s3_length_formula,
    s_bracket,
    s_r,
    satisfies_thm_3letter,
)
from seqsat.core import Pattern, canonical  # noqa: E402
from seqsat.errors import PreconditionFailed  # noqa: E402
from seqsat.exact import build_ilp, sat_exact, search_sat, solve_ilp  # noqa: E402
from seqsat.saturation import Verdict, greedy_run, greedy_saturate, scan  # noqa: E402

GOLDEN = json.loads((Path(__file__).parent / "data" / "golden_scatter.json").read_text())

RESULTS: dict[int, tuple[bool, str]] = {}

TABLE = [
    ("aba", 2, 2), ("aba", 3, 3), ("aba", 4, 4),
    ("abab", 2, 3),
    ("aabb", 2, 5), ("aabb", 3, 7),
    ("aaab", 2, 5), ("aaab", 3, 7),
    ("ababa", 2, 4), ("ababa", 3, 7),
    ("ababb", 2, 5), ("ababb", 3, 7),
    ("abca", 3, 3),
    ("abcb", 4, 5),
    ("abcc", 3, 5), ("abcc", 4, 6),
    ("abcba", 4, 5),
]
TABLE_PATTERNS = sorted({u for u, _, _ in TABLE}, key=lambda u: (len(u), u))
SCAN_PATTERNS = ["abcacbc", "abbacac", "abcacba", "abcabcabc"]


def record(number: int, ok: bool, detail: str):
    RESULTS[number] = (ok, detail)
    assert ok, detail


def summary_lines() -> list[str]:
    return [
        f"criterion {k}: {'PASS' if ok else 'FAIL'} - {detail}"
        for k, (ok, detail) in sorted(RESULTS.items())
    ]


def canonical_patterns(max_len, letters=3, min_len=1):
    for length in range(min_len, max_len + 1):
        for w in product(range(1, letters + 1), repeat=length):
            if canonical(w) == w:
                yield Pattern(w)


_ENGINE_RUNS: dict = {}


def _engine_runs():
    """Both engines on every table instance, computed once and shared by 1 and 2."""
    if _ENGINE_RUNS:
        return _ENGINE_RUNS
    search_time = ilp_sub_time = 0.0
    for text, n, _ in TABLE:
        u = Pattern.parse(text)
        t0 = time.perf_counter()
        value, witness = search_sat(n, u)
        search_time += time.perf_counter() - t0
        N = len(greedy_saturate(n, u)) + 1
        t0 = time.perf_counter()
        try:
            ilp = solve_ilp(build_ilp(n, N, u), time_limit=600).objective
        except Exception as exc:  # recorded, judged by criterion 2
            ilp = exc
        spent = time.perf_counter() - t0
        if len(u) <= 4 and N <= 8:
            ilp_sub_time += spent
        _ENGINE_RUNS[text, n] = (value, witness, ilp, N)
    _ENGINE_RUNS["_times"] = (search_time, ilp_sub_time)
    return _ENGINE_RUNS


def test_criterion_1_table_values():
    runs = _engine_runs()
    search_time, ilp_time = runs["_times"]
    wrong = []
    for text, n, expected in TABLE:
        value, witness, ilp, _ = runs[text, n]
        if value != expected:
            wrong.append(f"{text} n={n}: expected {expected}, got {value} ({witness})")
    ok = not wrong and search_time < 60 and ilp_time < 600
    detail = (
        f"{len(TABLE) - len(wrong)}/{len(TABLE)} rows match; search {search_time:.1f}s, "
        f"ILP subset {ilp_time:.1f}s"
    )
    if wrong:
        detail += "; mismatches: " + "; ".join(wrong)
    record(1, ok, detail)


def test_criterion_2_engine_agreement():
    runs = _engine_runs()
    bad, finished = [], 0
    for text, n, _ in TABLE:
        value, _, ilp, _ = runs[text, n]
        if isinstance(ilp, Exception):
            continue
        finished += 1
        if ilp != value:
            bad.append(f"{text} n={n}: search {value}, ILP {ilp}")
    record(2, not bad, f"{finished}/{len(TABLE)} instances finished by the ILP, "
           + ("all agree" if not bad else "; ".join(bad)))


def test_criterion_3_n_equals_r_identity():
    bad = []
    for text in TABLE_PATTERNS:
        u = Pattern.parse(text)
        res = sat_exact(u.r, u)
        if res.value != len(s_r(u)) or not res.engines_agree:
            bad.append(f"{text}: Sat={res.value}, |s_r|={len(s_r(u))}")
    record(3, not bad, f"{len(TABLE_PATTERNS)} distinct patterns ({', '.join(TABLE_PATTERNS)}) "
           + ("all equal |s_r(u)|" if not bad else "; ".join(bad)))


def test_criterion_4_golden_scatters():
    bad, slowest = [], 0.0
    for key, golden in GOLDEN.items():
        t0 = time.perf_counter()
        seq = greedy_saturate(golden["n"], golden["pattern"])
        spent = time.perf_counter() - t0
        slowest = max(slowest, spent)
        points = [(i + 1, x) for i, x in enumerate(seq)]
        if points != [tuple(p) for p in golden["points"]] or spent >= 5:
            bad.append(key)
    sizes = ", ".join(f"{k}:{len(v['points'])}" for k, v in GOLDEN.items())
    record(4, not bad, f"6 scatters exact ({sizes}); slowest {slowest:.2f}s"
           + (f"; mismatched {bad}" if bad else ""))


def test_criterion_5_construction_sweep():
    t0 = time.perf_counter()
    problems, notes = [], []
    for n in range(6, 16):
        if closed_form_abcacbc(n).verdict is not Verdict.SATURATED:
            problems.append(f"abcacbc closed form n={n}")
    for variant in ("plain", "plus_a", "plus_ab"):
        for t in (2, 3, 4):
            for n in range(6, 13):
                if alternation_family(n, t, variant).verdict is not Verdict.SATURATED:
                    problems.append(f"alternation {variant} t={t} n={n}")
    block_ok = 0
    for text in ("aabacbb", "aabcabb", "aabcacc"):
        u = Pattern.parse(text)
        assert is_irreducible(u)
        good, skipped = True, []
        for n in range(u.r, 4 * u.r + 4):
            try:
                res = block_construction(n, u)
            except PreconditionFailed:
                skipped.append(n)
                continue
            good &= res.verdict is Verdict.SATURATED
        block_ok += good
        if skipped:
            notes.append(f"{text} undefined at n={skipped}")
    if block_ok < 3:
        problems.append(f"only {block_ok} block patterns saturated")
    count = 0
    for u in canonical_patterns(7):
        if u.r != 3:
            continue
        for n in range(3, 7):
            count += 1
            if not s_bracket(n, u).report.semisaturated:
                problems.append(f"s[{n}] for {u} not semisaturated")
    for text in ("abcacbcabca", "abcbabcabc"):
        for n in range(3, 9):
            if s_bracket(n, text).verdict is not Verdict.SATURATED:
                problems.append(f"s[{n}] for {text}")
    spent = time.perf_counter() - t0
    ok = not problems and spent < 600
    detail = (f"closed form, 63 alternation cases, {block_ok} block patterns, {count} s[n] "
              f"semisaturation checks, dominant-forward examples to n=8; {spent:.1f}s")
    if notes:
        detail += " (" + "; ".join(notes) + ")"
    if problems:
        detail += "; failures: " + "; ".join(problems[:5])
    record(5, ok, detail)


def test_criterion_6_length_identity():
    checked, bad = 0, []
    for u in canonical_patterns(10, min_len=6):
        if not satisfies_thm_3letter(u):
            continue
        checked += 1
        if s3_length_formula(u).length != len(s_r(u)):
            bad.append(str(u))
    f = s3_length_formula("abcaabc")
    note = f"abcaabc: |s_3|={len(s_r('abcaabc'))}, formula {f.length}, single-f2 variant {f.single_f2}"
    record(6, not bad and checked > 0,
           f"identity holds on all {checked} qualifying patterns with length <= 10; {note}"
           + (f"; failures {bad[:5]}" if bad else ""))


def test_criterion_7_prefix_invariant():
    bad, checked = [], 0
    for text in SCAN_PATTERNS:
        u = Pattern.parse(text)
        for n in range(u.r, 13):
            run = greedy_run(n, u)
            checked += 1
            if run.before_first.get(n) != tuple(greedy_saturate(n - 1, u)):
                bad.append(f"{text} n={n}")
    record(7, not bad, f"{checked} (pattern, n) pairs" + (f"; failures {bad}" if bad else ", all exact"))


def test_criterion_8_periodic_deltas():
    parts, ok = [], True
    for text in SCAN_PATTERNS:
        res = scan(text, 20)
        per = res.periodicity
        ok &= per is not None
        parts.append(f"{text}: {res.describe_periodicity()}, max delta {max(res.deltas)}")
        if text == "abcacbc":
            ok &= all(r.delta == 5 for r in res.records if r.n >= 10)
    record(8, ok, "; ".join(parts))


def test_criterion_9_infinite_analogue():
    t0 = time.perf_counter()
    parts, ok = [], True
    for text in ("abab", "abcabc"):
        res = infinite_analogue(10, text)
        d = res.details
        ok &= d["p"] == 1 and d["padding_stable"] and d["middle_blocked"]
        parts.append(f"{text}: p={d['p']}, stable={d['padding_stable']}, middle blocked from k0={d['k0']}")
    spent = time.perf_counter() - t0
    record(9, ok and spent < 60, "; ".join(parts) + f"; {spent:.1f}s")


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                pass
    print("\n".join(summary_lines()))
    sys.exit(0 if all(ok for ok, _ in RESULTS.values()) else 1)
