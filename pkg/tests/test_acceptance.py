"""Acceptance suite: one pass/fail line per criterion.

Run with pytest (the lines appear in the output even without ``-s``) or
directly with ``python3 tests/test_acceptance.py``.
"""

import sys
import time

import pytest

from linegame import catalog as cat
from linegame.cli import whitney_collisions
from linegame.enumeration import graphs_up_to, isofree_graphs
from linegame.game import (
    AA,
    ALICE,
    ALL_VARIANTS,
    A_,
    BA,
    BB,
    BOB,
    B_,
    GameState,
    GameVariant,
    chromatic_index,
    game_chromatic_index,
    solve,
    solve_graph,
    solve_vertex_game,
)
from linegame.graph import build_graph, canonical_form, components, delete_edge, line_graph, omega_line
from linegame.recognizer import (
    SPECIAL_KINDS,
    ComponentClass,
    check_forbidden,
    classify_component,
    is_line_perfect,
    is_line_xy_perfect_definitional,
    is_line_xy_perfect_structural,
    line_perfect_maffray,
    line_perfect_trotter,
)
from linegame.strategies import SCRIPTED_KINDS, StrategyKind, validate_strategy
from linegame.subgraph import is_line_graph

NET = build_graph(6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (2, 5)])


def line(n, ok, detail):
    return f"criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}"


# --- 1: forbidden configurations --------------------------------------------------

FORBIDDEN = [
    ("P5", BB), ("C4", A_), ("P6", AA), ("C5", AA), ("F1", BA), ("F2", AA), ("F3", AA),
    ("F1uF1", AA), ("P5uP2", B_), ("C4uP2", B_), ("Bull", B_), ("Diamond", B_),
]


def check_1():
    wrong, slowest = [], (0.0, "")
    for name, v in FORBIDDEN:
        g = cat.make_named(name)
        t = time.time()
        if solve_graph(g, v, omega_line(g)) is not BOB:
            wrong.append(f"{name} {v.code}")
        slowest = max(slowest, (time.time() - t, name))
    for name, v in (("F1_1", BA), ("F3_1", AA)):
        pc = cat.make_precoloured(name)
        s = GameState.precoloured(pc.graph, pc.k, pc.colouring, ALICE)
        if solve(s, v) is not BOB:
            wrong.append(name)
    detail = f"{len(FORBIDDEN)} configurations and 2 precoloured starts are Bob wins at omega(L)"
    if wrong:
        detail = f"not Bob wins: {wrong}"
    return not wrong, f"{detail} (slowest {slowest[1]} {slowest[0]:.1f}s)"


# --- 2: permitted shapes ------------------------------------------------------------


def check_2(max_edges=9):
    grid = cat.permitted_grid(max_edges)
    bad, scripted = [], 0
    for p in grid:
        g = cat.make_permitted(p)
        v = GameVariant.parse(cat.HOME_GAME[p.kind])
        if solve_graph(g, v, omega_line(g)) is not ALICE:
            bad.append(f"{p} solve")
            continue
        if p.kind in SCRIPTED_KINDS:
            # the shape's own script, even when the recogniser would name the
            # graph differently; Bob may use every colour
            cls = ComponentClass(p, special=v == AA and p.kind in SPECIAL_KINDS)
            scripted += 1
            if not validate_strategy(g, v, StrategyKind.EXPLICIT, cls=cls, budget=10**8).valid:
                bad.append(f"{p} script")
    return not bad, f"{len(grid)} instances with <= {max_edges} edges solved, {scripted} scripts validated, failures {bad}"


# --- 3: three deciders ----------------------------------------------------------------


def disagreements(max_vertices, amended):
    out = []
    for g in graphs_up_to(max_vertices):
        for v in ALL_VARIANTS:
            d = is_line_xy_perfect_definitional(g, v, budget=g.m)
            f = check_forbidden(g, v).perfect
            s = is_line_xy_perfect_structural(g, v, amended=amended)
            if not d == f == s:
                out.append((g, v))
    return out


def check_3():
    literal = disagreements(6, amended=False)
    amended = disagreements(6, amended=True)
    shown = [f"{list(g.edges)} {v.code}" for g, v in literal]
    detail = (f"literal structural list: {len(literal)} disagreement(s) {shown}; "
              f"with (m,1)-satellites admitted under [B,A]: {len(amended)}")
    return not literal, detail, literal, amended


# --- 4: index chains and class inclusions ----------------------------------------


CHAINS = (("AA", "A-", "AB", "BB"), ("AA", "BA", "B-", "BB"))
INCLUSIONS = (("BB", "AB"), ("AB", "A-"), ("A-", "AA"), ("BB", "B-"), ("B-", "BA"), ("BA", "AA"))


def check_4():
    bad, count = [], 0
    for g in graphs_up_to(6):
        count += 1
        idx = {v.code: game_chromatic_index(g, v, full_profile=False).index for v in ALL_VARIANTS}
        low = [omega_line(g), chromatic_index(g)]
        for chain in CHAINS:
            seq = low + [idx[c] for c in chain]
            if any(a > b for a, b in zip(seq, seq[1:])):
                bad.append(f"{list(g.edges)} chain {chain}")
        perfect = {v.code: is_line_xy_perfect_definitional(g, v, budget=g.m) for v in ALL_VARIANTS}
        for a, b in INCLUSIONS:
            if perfect[a] and not perfect[b]:
                bad.append(f"{list(g.edges)} {a} in {b}")
        if perfect["AA"] and not is_line_perfect(g):
            bad.append(f"{list(g.edges)} AA in line perfect")
        if not perfect["BB"] == perfect["AB"] == perfect["A-"]:
            bad.append(f"{list(g.edges)} BB/AB/A- differ")
    return not bad, f"{count} graphs, violations {bad[:5]}"


# --- 5: edge game versus vertex game on the line graph ---------------------------


def check_5():
    bad, count = [], 0
    for g in isofree_graphs(7):
        lg = line_graph(g)[0]
        for v in ALL_VARIANTS:
            for k in range(1, 6):
                count += 1
                if solve_graph(g, v, k) is not solve_vertex_game(lg, v, k):
                    bad.append(f"{list(g.edges)} {v.code} k={k}")
    return not bad, f"{count} (graph, game, k) triples, mismatches {bad[:5]}"


# --- 6: line-perfect routes -----------------------------------------------------------


def check_6():
    bad, count = [], 0
    for g in graphs_up_to(7):
        count += 1
        if line_perfect_trotter(g) != line_perfect_maffray(g):
            bad.append(list(g.edges))
    named = (not is_line_perfect(cat.cycle(5)), is_line_perfect(cat.complete(4)), is_line_perfect(cat.triangular_book(3)))
    ok = not bad and all(named)
    return ok, f"{count} graphs, route mismatches {bad[:5]}; C5 false, K4 true, K1,1,3 true: {all(named)}"


# --- 7: heredity ----------------------------------------------------------------------


def check_7(max_edges=9):
    bad, count = [], 0
    for p in cat.permitted_grid(max_edges):
        g = cat.make_permitted(p)
        for v in ALL_VARIANTS:
            if not classify_component(g, v).permitted:
                continue
            for e in range(g.m):
                count += 1
                classes = [classify_component(c.graph, v) for c in components(delete_edge(g, e))]
                if not all(c.permitted for c in classes):
                    bad.append(f"{p} {v.code} minus edge {e}")
                if v == AA and sum(c.special for c in classes) > 1:
                    bad.append(f"{p} AA minus edge {e}: two special components")
    return not bad, f"{count} single-edge deletions in every game where the instance is permitted, failures {bad[:5]}"


# --- 8: Whitney and Beineke -------------------------------------------------------------


def check_8():
    cols = whitney_collisions(6)
    expected = sorted([canonical_form(cat.complete(3)), canonical_form(cat.star(3))])
    whitney = [sorted(canonical_form(g) for g in grp) for grp in cols] == [expected]
    not_passing = [list(g.edges) for g in graphs_up_to(6) if g.m and not is_line_graph(line_graph(g)[0])[0]]
    passing_n = [name for name, g in cat.beineke_graphs().items() if is_line_graph(g)[0]]
    ok = whitney and not not_passing and not passing_n
    return ok, (f"collisions {len(cols)} (only K3/K1,3: {whitney}); line graphs rejected {len(not_passing)}; "
                f"N1..N9 accepted {passing_n}")


CHECKS = {1: check_1, 2: check_2, 3: check_3, 4: check_4, 5: check_5, 6: check_6, 7: check_7, 8: check_8}


# --- pytest wrappers ----------------------------------------------------------------


@pytest.fixture
def say(capsys):
    def _say(text):
        with capsys.disabled():
            print("\n" + text)
    return _say


def test_criterion_1(say):
    ok, detail = check_1()
    say(line(1, ok, detail))
    assert ok


@pytest.mark.slow
def test_criterion_2(say):
    ok, detail = check_2()
    say(line(2, ok, detail))
    assert ok


def test_criterion_3(say):
    ok, detail, literal, amended = check_3()
    say(line(3, ok, detail))
    # the literal list is known to miss exactly the net under [B,A]; this is
    # recorded as a failed criterion, and pinned here so any other change shows
    assert [(canonical_form(g), v) for g, v in literal] == [(canonical_form(NET), BA)]
    assert amended == []


@pytest.mark.slow
def test_criterion_4(say):
    ok, detail = check_4()
    say(line(4, ok, detail))
    assert ok


def test_criterion_5(say):
    ok, detail = check_5()
    say(line(5, ok, detail))
    assert ok


def test_criterion_6(say):
    ok, detail = check_6()
    say(line(6, ok, detail))
    assert ok


def test_criterion_7(say):
    ok, detail = check_7()
    say(line(7, ok, detail))
    assert ok


def test_criterion_8(say):
    ok, detail = check_8()
    say(line(8, ok, detail))
    assert ok


if __name__ == "__main__":
    wanted = [int(a) for a in sys.argv[1:]] or list(CHECKS)
    for n in wanted:
        t = time.time()
        ok, detail = CHECKS[n]()[:2]
        print(line(n, ok, detail) + f" [{time.time() - t:.0f}s]", flush=True)
