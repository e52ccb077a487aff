"""Small graphs on which Bob wins with the fewest colours that could work.

For each graph we print omega(L), the clique number of its line graph, and
the game chromatic index of the game in which it is a minimal obstruction.
Since omega(L) colours are always needed, an index above omega(L) means
Bob can spoil the game at that palette size.
"""

from linegame import catalog as cat
from linegame.game import ALICE, AA, BA, GameState, GameVariant, game_chromatic_index, solve
from linegame.graph import max_degree, omega_line

CASES = [
    ("P5", "BB"), ("C4", "A-"), ("P6", "AA"), ("C5", "AA"), ("F1", "BA"),
    ("F2", "AA"), ("F3", "AA"), ("Bull", "B-"), ("Diamond", "B-"),
]

print(f"{'graph':8} {'game':5} {'w(L)':>4} {'Delta':>5} {'index':>5}  profile")
for name, code in CASES:
    g = cat.make_named(name)
    v = GameVariant.parse(code)
    res = game_chromatic_index(g, v)
    profile = " ".join(f"{k}:{w.value}" for k, w in res.profile.items())
    print(f"{name:8} {v.name:5} {omega_line(g):>4} {max_degree(g):>5} {res.index:>5}  {profile}")

# Two precoloured starts: a single coloured edge is already enough for Bob.
print()
for name, v in (("F1_1", BA), ("F3_1", AA)):
    pc = cat.make_precoloured(name)
    for k in (pc.k, pc.k + 1):
        s = GameState.precoloured(pc.graph, k, pc.colouring, ALICE)
        print(f"{name} with {k} colours, Alice to move: {solve(s, v).name} wins")
