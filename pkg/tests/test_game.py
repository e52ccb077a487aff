import io
import random

import pytest
from reference import naive_alice_wins

from linegame import catalog as cat
from linegame.enumeration import isofree_graphs
from linegame.game import (
    AA,
    AB,
    ALICE,
    ALL_VARIANTS,
    A_,
    BA,
    BB,
    BOB,
    PASS,
    BudgetExceeded,
    ColourMove,
    GameState,
    GameVariant,
    IllegalMoveError,
    Solver,
    chromatic_index,
    game_chromatic_index,
    legal_moves,
    play_move,
    read_transcript,
    replay,
    solve,
    solve_graph,
    solve_vertex_game,
    terminal,
    write_transcript,
)
from linegame.graph import build_graph, empty_graph, line_graph, max_degree, omega_line


def test_six_variants():
    assert len(set(ALL_VARIANTS)) == 6
    assert {v.code for v in ALL_VARIANTS} == {"AA", "A-", "AB", "BA", "B-", "BB"}
    for v in ALL_VARIANTS:
        assert GameVariant.parse(v.code) == v
        assert GameVariant.parse(v.name) == v
    assert GameVariant.parse("[A,−]") == A_
    with pytest.raises(ValueError):
        GameVariant.parse("AC")


def test_legal_moves_single_edge():
    g = cat.path(2)
    s = GameState.initial(g, 1, AA)
    assert legal_moves(s, AA) == [ColourMove(0, 1), PASS]
    assert legal_moves(s, A_) == [ColourMove(0, 1)]
    assert legal_moves(GameState.initial(g, 1, BA), BA) == [ColourMove(0, 1)]


def test_legal_moves_blocked_edge():
    s = GameState.precoloured(cat.path(3), 1, (1, 0), ALICE)
    assert legal_moves(s, AA) == []


def test_legal_moves_after_e0_on_f1():
    g = cat.make_named("F1")
    col = [0] * g.m
    col[cat.F1_EDGES.index("e0")] = 1
    s = GameState.precoloured(g, 3, col, ALICE)
    moves = legal_moves(s, BA)
    assert ColourMove(cat.F1_EDGES.index("e1"), 2) in moves
    assert ColourMove(cat.F1_EDGES.index("f11"), 1) in moves
    assert ColourMove(cat.F1_EDGES.index("e1"), 1) not in moves


def test_terminal_examples():
    g = cat.path(4)
    assert terminal(GameState.precoloured(g, 2, (1, 2, 1), ALICE)) is ALICE
    assert terminal(GameState.precoloured(g, 2, (1, 0, 2), ALICE)) is BOB
    assert terminal(GameState.precoloured(g, 2, (1, 0, 1), ALICE)) is None
    star = cat.star(3)
    s = GameState.precoloured(star, 2, (1, 2, 0), ALICE)
    assert terminal(s) is BOB


def test_terminal_shortcut_only_with_flag():
    g = build_graph(5, [(0, 1), (0, 2), (0, 3), (3, 4)])
    s = GameState.precoloured(g, 2, (1, 2, 0, 0), BOB)
    assert terminal(s) is None
    assert terminal(s, dead_edge_shortcut=True) is BOB


def test_solve_examples():
    assert solve_graph(cat.path(5), BB, 2) is BOB
    assert solve_graph(cat.path(6), AA, 2) is BOB
    for g in (cat.make_named("F1"), cat.complete(4), cat.make_permitted(cat.Satellite(1, 2))):
        for v in ALL_VARIANTS:
            assert solve_graph(g, v, 2 * max_degree(g) - 1) is ALICE


def test_budget_is_an_error_not_a_guess():
    with pytest.raises(BudgetExceeded):
        solve_graph(cat.complete(5), BB, 5, budget=10)


def test_negative_palette_rejected():
    with pytest.raises(ValueError):
        solve(GameState(cat.path(2), -1, (0,), ALICE), AA)


def test_game_chromatic_index_examples():
    for n in range(1, 6):
        for v in ALL_VARIANTS:
            assert game_chromatic_index(cat.star(n), v).index == n
    res = game_chromatic_index(cat.path(6), AA)
    assert res.index == 3 and res.profile == {2: BOB, 3: ALICE}
    assert game_chromatic_index(cat.cycle(5), AA).index == 3
    assert game_chromatic_index(empty_graph(3), AA).index == 0


def test_early_stop_profile():
    g = cat.make_named("F1")
    full = game_chromatic_index(g, BA)
    short = game_chromatic_index(g, BA, full_profile=False)
    assert full.index == short.index
    assert max(short.profile) == short.index
    assert all(full.profile[k] is w for k, w in short.profile.items())


def test_vertex_game_examples():
    assert solve_vertex_game(line_graph(cat.path(5))[0], BB, 2) is BOB
    for n in range(1, 5):
        for v in ALL_VARIANTS:
            assert solve_vertex_game(cat.complete(n), v, n) is ALICE
    assert solve_vertex_game(empty_graph(0), AA, 0) is ALICE


def test_play_move():
    g = cat.path(3)
    s = GameState.initial(g, 2, AA)
    t = play_move(s, ColourMove(0, 1), AA)
    assert t.colouring == (1, 0) and t.to_move is BOB
    u = play_move(s, PASS, AA)
    assert u.colouring == s.colouring and u.to_move is BOB
    with pytest.raises(IllegalMoveError):
        play_move(t, ColourMove(1, 1), AA)
    with pytest.raises(IllegalMoveError):
        play_move(t, ColourMove(0, 2), AA)
    with pytest.raises(IllegalMoveError):
        play_move(t, PASS, AA)  # Bob may not pass in [A,A]


def test_precoloured_state_is_checked():
    with pytest.raises(ValueError):
        GameState.precoloured(cat.path(3), 2, (1, 1), ALICE)
    with pytest.raises(ValueError):
        GameState.precoloured(cat.path(3), 2, (3, 0), ALICE)


def test_determinism():
    g = cat.make_named("Bull")
    first = [game_chromatic_index(g, v).profile for v in ALL_VARIANTS]
    again = [game_chromatic_index(g, v).profile for v in ALL_VARIANTS]
    assert first == again


def test_against_naive_solver():
    for g in isofree_graphs(5):
        lo = omega_line(g)
        for v in ALL_VARIANTS:
            for k in range(lo, min(2 * max_degree(g) - 1, 5) + 1):
                expect = ALICE if naive_alice_wins(g, v, k) else BOB
                assert solve_graph(g, v, k) is expect, (g, v, k)


def test_shortcuts_do_not_change_answers():
    for g in isofree_graphs(6):
        lo = omega_line(g)
        for v in ALL_VARIANTS:
            for k in range(lo, 2 * max_degree(g)):
                plain = solve_graph(g, v, k, dead_edge_shortcut=False, safety_shortcut=False)
                assert solve_graph(g, v, k) is plain, (g, v, k)


def test_symmetry_reduction_does_not_change_answers():
    graphs = [cat.complete(4), cat.make_permitted(cat.DoubleGalaxy(2, 1, 1, 1)), cat.make_named("F3"),
              cat.make_permitted(cat.TetrahedronOfFlowers(2))]
    for g in graphs:
        for v in ALL_VARIANTS:
            for k in range(omega_line(g), 2 * max_degree(g)):
                s0 = (0,) * g.m
                with_sym = Solver.for_graph(g, k, v).winner(s0, v.first_mover)
                without = Solver.for_graph(g, k, v, symmetry=False).winner(s0, v.first_mover)
                assert with_sym is without, (g, v, k)


def test_precoloured_positions_match_naive():
    pc = cat.make_precoloured("F1_1")
    s = GameState.precoloured(pc.graph, pc.k, pc.colouring, ALICE)
    for v in (BA, AA, A_):
        naive = naive_alice_wins(pc.graph, v, pc.k, pc.colouring, True)
        assert (solve(s, v) is ALICE) == naive


def test_chromatic_index():
    assert chromatic_index(cat.cycle(5)) == 3
    assert chromatic_index(cat.complete(4)) == 3
    assert chromatic_index(cat.complete(5)) == 5
    # 7 edges on 5 vertices, matchings have at most 2 edges: overfull
    assert chromatic_index(cat.make_named("N2")) == 4
    assert chromatic_index(cat.make_named("F3")) == 4
    assert chromatic_index(empty_graph(2)) == 0


def test_index_chains_up_to_seven_edges():
    for g in isofree_graphs(7):
        idx = {v.code: game_chromatic_index(g, v, full_profile=False).index for v in ALL_VARIANTS}
        lo = [omega_line(g), chromatic_index(g)]
        for chain in (("AA", "A-", "AB", "BB"), ("AA", "BA", "B-", "BB")):
            seq = lo + [idx[c] for c in chain]
            assert seq == sorted(seq), (g, seq)


def test_transcript_round_trip():
    g = cat.make_permitted(cat.StarBook(1, 1, 1))
    rng = random.Random(7)
    s = GameState.initial(g, 3, BA)
    while terminal(s) is None:
        s = play_move(s, rng.choice(list(legal_moves(s, BA))), BA)
    buf = io.StringIO()
    write_transcript(buf, s, terminal(s))
    moves, winner, k = read_transcript(buf.getvalue().splitlines())
    assert winner is terminal(s) and k == 3
    again = replay(g, k, BA, moves)
    assert again.colouring == s.colouring and again.to_move is s.to_move


def test_replay_rejects_out_of_turn():
    g = cat.path(3)
    with pytest.raises(IllegalMoveError):
        replay(g, 2, AB, [(BOB, ColourMove(0, 1))])
