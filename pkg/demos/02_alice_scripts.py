"""Alice's explicit strategies at work.

We let Alice follow her script on a few permitted shapes and let Bob play
random legal moves, printing each move with the reason Alice gives. Then we
check a script exhaustively against every Bob line, and show why the
double galaxy script had to be repaired.
"""

import random

from linegame import catalog as cat
from linegame import strategies as st
from linegame.game import ALICE, BA, ColourMove, GameState, legal_moves, play_move, terminal
from linegame.graph import omega_line
from linegame.strategies import StrategyKind, advise, validate_strategy


def show_game(p, v, seed):
    g = cat.make_permitted(p)
    k = omega_line(g)
    rng = random.Random(seed)
    s = GameState.initial(g, k, v)
    print(f"{p} in {v.name} with {k} colours")
    while terminal(s) is None:
        if s.to_move is ALICE:
            adv = advise(StrategyKind.EXPLICIT, s, v)
            m, why = adv.move, adv.rationale.value
        else:
            m, why = rng.choice(legal_moves(s, v)), "random"
        what = f"edge {g.edges[m.edge]} colour {m.colour}" if isinstance(m, ColourMove) else "pass"
        print(f"  {s.to_move.name:5} {what:26} {why}")
        s = play_move(s, m, v)
    print(f"  {terminal(s).name} wins\n")


show_game(cat.StarBook(2, 1, 1), BA, seed=1)
show_game(cat.DiamondOfFlowers(2), BA, seed=2)
show_game(cat.DoubleGalaxy(1, 1, 1, 1), BA, seed=3)

g = cat.make_permitted(cat.DoubleGalaxy(1, 1, 1, 1))
res = validate_strategy(g, BA, StrategyKind.EXPLICIT)
print(f"double galaxy script against every Bob line: valid={res.valid}, {res.positions} positions")

# The script as first written: Bob finds a line that leaves an edge without a colour.
st.SCRIPTS["DoubleGalaxy"] = st._script_double_galaxy_literal
res = validate_strategy(g, BA, StrategyKind.EXPLICIT)
print(f"first version of the script: valid={res.valid}")
for player, m in res.losing_line:
    what = f"edge {g.edges[m.edge]} colour {m.colour}" if isinstance(m, ColourMove) else "pass"
    print(f"  {player.name:5} {what}")
