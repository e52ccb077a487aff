import itertools

import pytest

from linegame import catalog as cat
from linegame.enumeration import isofree_graphs
from linegame.graph import are_isomorphic, build_graph, disjoint_union, edge_subgraph, line_graph
from linegame.subgraph import PatternError, contains_edge_induced, contains_vertex_induced, is_line_graph

PATTERNS = ["P5", "C4", "P5uP2", "C4uP2", "P6", "C5", "Bull", "Diamond", "F1", "F2", "F3", "K3"]


def _check_embedding(host, pattern, emb, induced):
    assert len(set(emb.vertex_map)) == pattern.n
    for pe, he in enumerate(emb.edge_map):
        a, b = pattern.edges[pe]
        assert set(host.edges[he]) == {emb.vertex_map[a], emb.vertex_map[b]}
    if induced:
        for a, b in itertools.combinations(range(pattern.n), 2):
            assert pattern.has_edge(a, b) == host.has_edge(emb.vertex_map[a], emb.vertex_map[b])


def brute_contains(host, pattern):
    for subset in itertools.combinations(range(host.m), pattern.m):
        if are_isomorphic(edge_subgraph(host, subset), pattern):
            return True
    return False


def test_edge_induced_examples():
    emb = contains_edge_induced(cat.path(6), cat.path(5))
    assert emb is not None
    _check_embedding(cat.path(6), cat.path(5), emb, False)
    dof = cat.make_permitted(cat.DiamondOfFlowers(3))
    assert contains_edge_induced(dof, cat.make_named("Diamond")) is not None
    assert contains_edge_induced(cat.cycle(4), cat.path(5)) is None


def test_edge_induced_rejects_isolated_pattern_vertices():
    with pytest.raises(PatternError):
        contains_edge_induced(cat.path(4), build_graph(3, [(0, 1)]))


def test_vertex_induced_examples():
    host = build_graph(5, [(0, 1), (0, 2), (0, 3), (3, 4)])
    assert contains_vertex_induced(host, cat.star(3)) is not None
    assert contains_vertex_induced(cat.complete(4), cat.cycle(4)) is None
    lf1 = line_graph(cat.make_named("F1"))[0]
    assert contains_vertex_induced(lf1, cat.star(3)) is None


def test_edge_induced_agrees_with_brute_force():
    patterns = [cat.make_named(p) for p in PATTERNS]
    for host in isofree_graphs(7):
        for p in patterns:
            if p.m > host.m:
                continue
            emb = contains_edge_induced(host, p)
            assert (emb is not None) == brute_contains(host, p), (host, p)
            if emb is not None:
                _check_embedding(host, p, emb, False)


def test_edge_induced_brute_force_at_eight_edges():
    patterns = [cat.make_named(p) for p in PATTERNS]
    hosts = [g for g in isofree_graphs(8) if g.m == 8][::9]
    for host in hosts:
        for p in patterns:
            assert (contains_edge_induced(host, p) is not None) == brute_contains(host, p)


def test_edge_induced_monotone():
    graphs = [g for g in isofree_graphs(6)][::4]
    p = cat.path(4)
    for g, h in itertools.product(graphs, repeat=2):
        if contains_edge_induced(h, p) and h.m <= g.m and contains_edge_induced(g, h):
            assert contains_edge_induced(g, p)


def test_vertex_induced_embedding_is_induced():
    host = cat.make_permitted(cat.StarBook(2, 1, 1))
    for pattern in (cat.path(3), cat.cycle(4), cat.complete(3), cat.star(3)):
        emb = contains_vertex_induced(host, pattern)
        if emb is not None:
            _check_embedding(host, pattern, emb, True)


def test_is_line_graph_examples():
    ok, witness = is_line_graph(cat.star(3))
    assert not ok and witness[0] == "N1"
    assert not is_line_graph(cat.wheel(5))[0]
    assert is_line_graph(cat.complete(5))[0]


def test_line_graphs_pass_beineke():
    for g in isofree_graphs(8):
        assert is_line_graph(line_graph(g)[0])[0], g


def test_beineke_graphs_fail_and_are_minimal():
    for name, n in cat.beineke_graphs().items():
        ok, witness = is_line_graph(n)
        assert not ok
        assert witness[0] == name or witness[1] is not None
        # deleting any vertex gives a line graph (minimality)
        for v in range(n.n):
            from linegame.graph import induced_subgraph

            assert is_line_graph(induced_subgraph(n, [w for w in range(n.n) if w != v]))[0], (name, v)


def test_beineke_graphs_pairwise_distinct():
    graphs = list(cat.beineke_graphs().values())
    for a, b in itertools.combinations(graphs, 2):
        assert not are_isomorphic(a, b)
    assert sorted(g.n for g in graphs) == [4, 5, 5, 6, 6, 6, 6, 6, 6]


def test_disjoint_union_of_line_graphs_is_line_graph():
    g = disjoint_union(line_graph(cat.make_named("F3"))[0], cat.complete(4))
    assert is_line_graph(g)[0]
