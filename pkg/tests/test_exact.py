import os
import tempfile
from itertools import product
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_sat
from seqsat.constructions import s_r
from seqsat.core import Pattern, canonical
from seqsat.errors import AlphabetTooSmall, BadParameters, BoundExceeded, GridTooSmall, Infeasible, ResourceLimit
from seqsat.exact import (
    Kind,
    build_ilp,
    decode,
    encode,
    enumerate_pattern_matrices,
    enumerate_placements,
    export_lp,
    sat_exact,
    search_sat,
    solve_ilp,
    violated,
)
from seqsat.saturation import greedy_saturate, verify

P = Pattern.parse


def test_u_matrices_for_aba():
    mats = enumerate_pattern_matrices(P("aba"), Kind.U)
    assert sorted(m.reading() for m in mats) == [(1, 2, 1), (2, 1, 2)]


def test_displayed_plus_and_minus_matrices():
    plus = {frozenset(m.ones) for m in enumerate_pattern_matrices(P("abcac"), Kind.UPLUS)}
    minus = {frozenset(m.ones) for m in enumerate_pattern_matrices(P("abcac"), Kind.UMINUS)}
    shown_plus = frozenset({(3, 1), (2, 2), (1, 2), (3, 3), (1, 4)})
    shown_minus = frozenset({(3, 1), (2, 2), (1, 3), (3, 3), (1, 4)})
    assert shown_plus in plus and shown_minus in minus
    assert not plus & minus


@pytest.mark.parametrize("u", ["aba", "abcac", "aabb", "abcb", "ababa"])
def test_matrix_readings_are_copies(u):
    pat = P(u)
    for kind in Kind:
        for m in enumerate_pattern_matrices(pat, kind):
            assert canonical(m.reading()) == pat.letters
            cols = [c for _, c in m.ones]
            assert cols == sorted(cols) and set(cols) == set(range(1, m.cols + 1))
            if kind is Kind.U:
                assert m.cols == len(pat) and m.doubled is None
            else:
                assert m.cols == len(pat) - 1 and cols.count(m.doubled) == 2
                first, second = [row for row, c in m.ones if c == m.doubled]
                assert (first > second) == (kind is Kind.UPLUS)


def test_placement_counts():
    assert len(enumerate_placements(2, 3, P("aba"), Kind.U)) == 2
    assert len(enumerate_placements(2, 4, P("aba"), Kind.U)) == 8
    with pytest.raises(GridTooSmall):
        enumerate_placements(1, 3, P("aba"), Kind.U)


@pytest.mark.parametrize("u, n, N", [("aba", 3, 5), ("abcb", 4, 6), ("aabb", 3, 6), ("abcac", 3, 6)])
def test_placement_counts_closed_form(u, n, N):
    pat = P(u)
    for kind in Kind:
        placements = enumerate_placements(n, N, pat, kind)
        mats = enumerate_pattern_matrices(pat, kind)
        expected = sum(comb(n, m.rows) * comb(N, m.cols) for m in mats)
        assert len(placements) == expected == len(set(placements))
        assert all(len(p.cells) == len(pat) for p in placements)


def test_model_dimensions():
    m = build_ilp(2, 4, P("aba"))
    assert sum(name.startswith("x_") for name in m.names) == 8
    assert m.num_vars == 8 + len(m.placements)
    used = {v for c in m.constraints for v, _ in c.terms}
    assert used <= set(range(m.num_vars))
    with pytest.raises(GridTooSmall):
        build_ilp(1, 4, P("aba"))


@pytest.mark.parametrize(
    "n, N, u, value, seq",
    [(2, 3, "aba", 2, (1, 2)), (2, 4, "abab", 3, (1, 2, 1)), (2, 6, "aabb", 5, (1, 2, 1, 2, 1))],
)
def test_solve_examples(n, N, u, value, seq):
    sol = solve_ilp(build_ilp(n, N, P(u)))
    assert sol.objective == value and sol.seq == seq


def test_solve_abca():
    assert solve_ilp(build_ilp(3, 6, P("abca"))).objective == 3


def test_solve_reports_infeasible_when_grid_too_narrow():
    with pytest.raises(Infeasible):
        solve_ilp(build_ilp(2, 4, P("aabb")))


def test_solve_resource_limit():
    with pytest.raises(ResourceLimit):
        solve_ilp(build_ilp(3, 8, P("aabb")), max_nodes=3)


def test_swapped_pairing_is_infeasible_on_aba():
    with pytest.raises(Infeasible):
        solve_ilp(build_ilp(2, 3, P("aba"), pairing="swapped"))


def test_lp_export_shape():
    m = build_ilp(2, 3, P("aba"))
    text = export_lp(m)
    lines = text.splitlines()
    assert " anchor_1: x_1_1 = 1" in lines
    obj = text.split("Subject To")[0]
    for i in range(1, 3):
        for j in range(1, 4):
            assert f"x_{i}_{j}" in obj
    assert lines[1] == "Minimize"
    assert "Binaries" in lines and lines[-1] == "End"
    assert text == export_lp(build_ilp(2, 3, P("aba")))


@pytest.mark.parametrize("u, n, N, value", [("aba", 2, 3, 2), ("aabb", 3, 8, 7), ("abcc", 4, 7, 6)])
def test_lp_export_round_trips_through_highs(u, n, N, value):
    highspy = pytest.importorskip("highspy")
    m = build_ilp(n, N, P(u))
    with tempfile.NamedTemporaryFile("w", suffix=".lp", delete=False) as fh:
        fh.write(export_lp(m))
    try:
        h = highspy.Highs()
        h.setOptionValue("output_flag", False)
        h.readModel(fh.name)
        h.run()
        assert h.getModelStatus() == highspy.HighsModelStatus.kOptimal
        assert round(h.getInfo().objective_function_value) == value
        assert h.getLp().num_col_ == m.num_vars
        assert h.getLp().num_row_ == m.num_constraints
    finally:
        os.unlink(fh.name)


@pytest.mark.parametrize("u, n, N", [("aba", 2, 5), ("abab", 2, 5), ("aabb", 2, 6), ("abcb", 3, 5), ("abca", 3, 5)])
def test_encoding_feasible_exactly_for_saturated(u, n, N):
    pat = P(u)
    model = build_ilp(n, N, pat)
    anchor = tuple(range(1, pat.r))
    checked = 0
    for length in range(len(anchor), N + 1):
        for tail in product(range(1, n + 1), repeat=length - len(anchor)):
            s = anchor + tail
            values = encode(model, s)
            assert decode(model, values) == s
            feasible = not violated(model, values)
            assert feasible == verify(s, n, pat).saturated, s
            checked += 1
    assert checked > 10


@pytest.mark.parametrize(
    "n, u, value, witness",
    [(2, "aba", 2, [1, 2]), (3, "abcc", 5, [1, 2, 3, 1, 2]), (3, "abcb", 4, [1, 2, 3, 1])],
)
def test_search_examples(n, u, value, witness):
    v, w = search_sat(n, P(u))
    assert v == value and list(w) == witness


def test_search_aabb():
    v, w = search_sat(3, P("aabb"))
    assert v == 7 and len(w) == 7 and verify(w, 3, "aabb").saturated


def test_search_errors():
    with pytest.raises(BoundExceeded):
        search_sat(3, P("aabb"), max_len=6)
    with pytest.raises(AlphabetTooSmall):
        search_sat(2, P("abc"))


@pytest.mark.parametrize("n, u, value", [(3, "aaab", 7), (3, "ababa", 7), (4, "abcc", 6)])
def test_sat_exact_examples(n, u, value):
    res = sat_exact(n, P(u))
    assert res.value == value and res.engines_agree
    assert res.N == len(greedy_saturate(n, u)) + 1


def test_sat_exact_single_engines():
    a = sat_exact(3, P("abcc"), engine="search")
    b = sat_exact(3, P("abcc"), engine="ilp")
    assert a.value == b.value == 5 and a.engines_agree is None
    assert list(b.witness) == list(a.witness)
    assert "elapsed_ms" not in a.to_dict(timing=False)


small = st.lists(st.integers(1, 2), min_size=2, max_size=4).map(Pattern).filter(lambda u: u.r == 2)


def test_single_letter_patterns_use_search_only():
    with pytest.raises(BadParameters):
        build_ilp(2, 5, P("aaa"))
    res = sat_exact(2, P("aaa"))
    assert res.engine == "search" and res.engines_agree is None
    assert res.value == 4 == brute_sat(2, (1, 1, 1), 6)[0]


@settings(max_examples=25, deadline=None)
@given(small, st.integers(0, 1))
def test_engines_match_brute_force(u, extra):
    n = u.r + extra
    greedy_len = len(greedy_saturate(n, u))
    res = sat_exact(n, u)
    assert u.r - 1 <= res.value <= greedy_len
    assert res.value == brute_sat(n, u.letters, greedy_len)[0]
    if n == u.r:
        assert res.value == len(s_r(u))


@settings(max_examples=20, deadline=None)
@given(st.lists(st.integers(1, 3), min_size=3, max_size=5).map(Pattern).filter(lambda u: u.r >= 2))
def test_search_witness_satisfies_model(u):
    n = u.r
    value, witness = search_sat(n, u)
    model = build_ilp(n, value + 1, u)
    assert violated(model, encode(model, witness)) == []


def test_1212313_is_not_ababb_saturated():
    rep = verify([1, 2, 1, 2, 3, 1, 3], 3, "ababb")
    assert rep.counterexample == (3, 0)
    assert brute_sat(3, (1, 2, 1, 2, 2), 8)[0] == 8


def test_12341_is_not_abcba_saturated():
    rep = verify([1, 2, 3, 4, 1], 4, "abcba")
    assert rep.counterexample == (2, 5)
    value, witness = search_sat(4, P("abcba"))
    assert value == 8 and solve_ilp(build_ilp(4, 9, P("abcba"))).objective == 8
