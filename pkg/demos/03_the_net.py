"""The net: a triangle with one pendant edge at each corner.

In the game where Bob starts and only Alice may pass, the net contains
none of the forbidden configurations, and exact search says every
edge-induced subgraph is won by Alice with omega(L) colours. Yet the net is
not on the list of permitted component shapes for that game. It is the
(1,1)-satellite, and all (m,1)-satellites behave the same way.
"""

from linegame import catalog as cat
from linegame.enumeration import graphs_up_to
from linegame.game import ALL_VARIANTS, BA, solve_graph, solve_vertex_game
from linegame.graph import line_graph, omega_line
from linegame.recognizer import (
    check_forbidden,
    classify_component,
    is_line_xy_perfect_definitional,
    is_line_xy_perfect_structural,
)

net = cat.make_permitted(cat.Satellite(1, 1))
print("net edges:", list(net.edges), " omega(L) =", omega_line(net))
print("forbidden configuration found:", check_forbidden(net, BA).witness)
print("edge game, 3 colours:", solve_graph(net, BA, 3).name)
print("vertex game on L(net), 3 colours:", solve_vertex_game(line_graph(net)[0], BA, 3).name)
print("every subgraph nice:", is_line_xy_perfect_definitional(net, BA))
print("component class, base list:   ", classify_component(net, BA))
print("component class, amended list:", classify_component(net, BA, amended=True))

for m in range(4):
    g = cat.make_permitted(cat.Satellite(m, 1))
    print(f"Satellite({m},1): {g.m} edges, perfect by search: {is_line_xy_perfect_definitional(g, BA)}")

# Sweep all graphs on at most 6 vertices and count where the deciders split.
for amended in (False, True):
    split = []
    for g in graphs_up_to(6):
        for v in ALL_VARIANTS:
            d = is_line_xy_perfect_definitional(g, v, budget=g.m)
            if not d == check_forbidden(g, v).perfect == is_line_xy_perfect_structural(g, v, amended):
                split.append((list(g.edges), v.code))
    print(f"amended={amended}: {len(split)} disagreement(s) {split}")
