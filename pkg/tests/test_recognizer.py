import pytest
from reference import naive_alice_wins

from linegame import catalog as cat
from linegame.enumeration import graphs_up_to
from linegame.game import AA, ALICE, ALL_VARIANTS, A_, AB, BA, BB, B_, BudgetExceeded, solve_graph, solve_vertex_game
from linegame.graph import are_isomorphic, build_graph, components, delete_edge, disjoint_union, empty_graph, line_graph, omega_line
from linegame.recognizer import (
    NotConnectedError,
    allowed_kinds,
    check_forbidden,
    classify_component,
    is_edge_xy_perfect,
    is_edge_xy_perfect_definitional,
    is_line_perfect,
    is_line_xy_nice,
    is_line_xy_perfect_definitional,
    is_line_xy_perfect_structural,
    line_perfect_maffray,
    line_perfect_trotter,
    perfectness_verdict,
    structural_report,
)

NET = build_graph(6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (2, 5)])


def named(text):
    return cat.graph_from_name(text)


def test_forbidden_examples():
    v = check_forbidden(cat.path(5), BB)
    assert not v.perfect and v.witness.name == "P5"
    assert len(v.witness.edges()) == 4
    assert check_forbidden(named("Satellite(2,3)"), AA).perfect
    two = disjoint_union(named("Satellite(2,3)"), named("Satellite(2,3)"))
    v = check_forbidden(two, AA)
    assert not v.perfect and v.witness.name == "F1uF1"


def test_classify_examples():
    c = classify_component(named("StarBook(4,2,3)"), BA)
    assert c.params == cat.StarBook(4, 2, 3) and not c.special
    assert classify_component(cat.path(4), BB).params == cat.DoubleStar(1, 1)
    c = classify_component(named("FullTree(3,4,5)"), BA)
    assert not c.permitted and c.witness.name == "F1"
    assert str(c) == "NotPermitted(F1)"
    assert classify_component(named("VaseOfFlowers(5)"), BB).params == cat.VaseOfFlowers(5)
    assert classify_component(named("DoubleStar(4,3)"), BB).params == cat.DoubleStar(4, 3)
    c = classify_component(cat.path(5), BB)
    assert not c.permitted and c.witness.name == "P5"


def test_classify_normalises_parameters():
    assert classify_component(named("StarBook(4,3,2)"), BA).params == cat.StarBook(4, 2, 3)
    assert classify_component(named("FullTree(3,5,4)"), AA).params == cat.FullTree(3, 4, 5)
    assert classify_component(named("Satellite(3,2)"), AA).params == cat.Satellite(2, 3)
    assert classify_component(named("DoubleStar(2,5)"), BB).params == cat.DoubleStar(5, 2)


def test_classify_precedence():
    # P4 is also a double galaxy, C4 is a candy, the triangle is a vase
    assert classify_component(cat.path(4), AA).params.kind == "DoubleStar"
    assert classify_component(cat.cycle(4), AA).params == cat.Candy(2, 0, 0)
    assert classify_component(cat.complete(3), BA).params == cat.VaseOfFlowers(0)
    # a full tree with one leaf at w2 is a shooting star, not special
    c = classify_component(named("FullTree(2,2,1)"), AA)
    assert c.params.kind == "ShootingStar" and not c.special
    c = classify_component(named("FullTree(3,4,5)"), AA)
    assert c.params == cat.FullTree(3, 4, 5) and c.special


def test_classify_needs_connected_graph():
    with pytest.raises(NotConnectedError):
        classify_component(disjoint_union(cat.path(2), cat.path(2)), BB)
    with pytest.raises(NotConnectedError):
        classify_component(empty_graph(0), BB)


@pytest.mark.parametrize("p", cat.permitted_grid(8), ids=str)
def test_round_trip(p):
    g = cat.make_permitted(p)
    v = {"BB": BB, "B-": B_, "BA": BA, "AA": AA}[cat.HOME_GAME[p.kind]]
    c = classify_component(g, v)
    assert c.permitted
    assert c.params.kind in allowed_kinds(v)
    assert are_isomorphic(cat.make_permitted(c.params), g)


def test_structural_examples():
    two_vases = disjoint_union(named("VaseOfFlowers(2)"), named("VaseOfFlowers(3)"))
    assert is_line_xy_perfect_structural(two_vases, BB)
    rep = structural_report(disjoint_union(named("Candy(2,1,1)"), cat.path(2)), B_)
    assert not rep.perfect and rep.reason == "more than one nontrivial component"
    for v in ALL_VARIANTS:
        assert is_line_xy_perfect_structural(empty_graph(0), v)
        assert is_line_xy_perfect_structural(empty_graph(3), v)


def test_b_dash_rule_is_a_disjunction():
    # one exotic component plus isolated vertices is fine
    assert is_line_xy_perfect_structural(disjoint_union(named("Candy(2,1,1)"), empty_graph(2)), B_)
    # many double stars and vases are fine
    g = disjoint_union(named("DoubleStar(2,1)"), named("VaseOfFlowers(1)"), cat.path(2))
    assert is_line_xy_perfect_structural(g, B_)


def test_at_most_one_special_component():
    sat = named("Satellite(2,2)")
    tree = named("FullTree(2,2,2)")
    assert is_line_xy_perfect_structural(disjoint_union(sat, named("Candy(2,1,1)")), AA)
    rep = structural_report(disjoint_union(sat, tree), AA)
    assert not rep.perfect and rep.reason == "more than one special component"


def test_definitional_examples():
    assert not is_line_xy_perfect_definitional(cat.cycle(4), A_)
    assert is_line_xy_perfect_definitional(cat.cycle(4), AA)
    for v in ALL_VARIANTS:
        assert is_line_xy_perfect_definitional(cat.complete(3), v)
        assert is_line_xy_perfect_definitional(empty_graph(4), v)
    with pytest.raises(BudgetExceeded):
        is_line_xy_perfect_definitional(cat.complete(5), AA, budget=9)


def test_nice_examples():
    # niceness looks at the graph itself only
    assert is_line_xy_nice(cat.path(5), AA)
    assert not is_line_xy_nice(cat.make_named("F1"), BA)
    assert is_line_xy_nice(cat.make_named("F1"), AA)
    # F1 with one more leaf edge at the middle is [B,A]-nice, though not perfect
    g = build_graph(9, list(cat.make_named("F1").edges) + [(1, 8)])
    assert is_line_xy_nice(g, BA)
    assert not is_line_xy_perfect_definitional(g, BA)


def test_edge_perfect_examples():
    assert not is_edge_xy_perfect(named("VaseOfFlowers(2)"), BB)
    assert is_edge_xy_perfect(named("DoubleStar(3,2)"), BB)
    assert is_edge_xy_perfect(cat.cycle(4), AA)
    assert is_edge_xy_perfect_definitional(cat.cycle(4), AA)
    assert not is_edge_xy_perfect_definitional(cat.complete(3), BB)


def test_edge_perfect_matches_definition_on_small_graphs():
    for g in graphs_up_to(5):
        for v in ALL_VARIANTS:
            assert is_edge_xy_perfect(g, v) == is_edge_xy_perfect_definitional(g, v, budget=g.m), (g, v)


def test_line_perfect_examples():
    assert not is_line_perfect(cat.cycle(5))
    assert is_line_perfect(cat.complete(4))
    assert is_line_perfect(named("K1_1"))
    assert is_line_perfect(cat.complete_bipartite(3, 3))
    assert is_line_perfect(cat.triangular_book(3))
    assert not is_line_perfect(cat.cycle(7))
    assert not is_line_perfect(cat.complete(5))


def test_line_perfect_routes_agree():
    for g in graphs_up_to(6):
        assert line_perfect_trotter(g) == line_perfect_maffray(g), g


def test_three_deciders_agree_up_to_five_vertices():
    for g in graphs_up_to(5):
        for v in ALL_VARIANTS:
            d = is_line_xy_perfect_definitional(g, v, budget=g.m)
            assert d == check_forbidden(g, v).perfect == is_line_xy_perfect_structural(g, v), (g, v)


def test_games_bb_ab_a_dash_coincide():
    for g in graphs_up_to(5):
        verdicts = {is_line_xy_perfect_structural(g, v) for v in (BB, AB, A_)}
        assert len(verdicts) == 1, g


# --- the net ---------------------------------------------------------------------


def test_net_is_a_satellite():
    assert are_isomorphic(NET, named("Satellite(1,1)"))
    assert omega_line(NET) == 3


def test_net_contains_no_ba_forbidden_configuration():
    assert check_forbidden(NET, BA).perfect


def test_net_is_ba_perfect_by_exact_search():
    assert is_line_xy_perfect_definitional(NET, BA)
    assert solve_graph(NET, BA, 3) is ALICE
    assert solve_vertex_game(line_graph(NET)[0], BA, 3) is ALICE
    assert naive_alice_wins(NET, BA, 3)


def test_literal_ba_list_misses_the_net():
    c = classify_component(NET, BA)
    assert not c.permitted and c.witness is None
    assert not is_line_xy_perfect_structural(NET, BA)
    assert is_line_xy_perfect_structural(NET, BA, amended=True)
    assert classify_component(NET, BA, amended=True).params == cat.Satellite(1, 1)


def test_amendment_only_touches_ba_and_m_one_satellites():
    for v in ALL_VARIANTS:
        if v != BA:
            assert structural_report(NET, v, amended=True) == structural_report(NET, v)
    # satellites with both sides >= 2 contain F1 and stay excluded
    big = named("Satellite(2,2)")
    assert not check_forbidden(big, BA).perfect
    assert not is_line_xy_perfect_structural(big, BA, amended=True)


@pytest.mark.parametrize("m", [0, 2, 3])
def test_m_one_satellites_are_ba_perfect(m):
    g = named(f"Satellite({m},1)")
    assert check_forbidden(g, BA).perfect
    assert is_line_xy_perfect_definitional(g, BA)
    assert is_line_xy_perfect_structural(g, BA, amended=True)


def test_perfectness_verdict():
    pv = perfectness_verdict(cat.make_named("F1"))
    assert pv.line_xy == {"BB": False, "AB": False, "A-": False, "B-": False, "BA": False, "AA": True}
    assert pv.witnesses["BA"][0] == "F1"
    assert pv.chain_violations() == []
    assert pv.to_json()["line_perfect"] is True
    for g in graphs_up_to(5):
        assert perfectness_verdict(g).chain_violations() == [], g


def test_heredity_spot_check():
    g = named("DoubleGalaxy(1,1,1,1)")
    for e in range(g.m):
        for comp in components(delete_edge(g, e)):
            assert classify_component(comp.graph, BA).permitted
