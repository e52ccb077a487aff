"""Structural verdicts in all six games.

For a handful of graphs we print the structural verdict for each game,
the component shapes the recogniser found, and a forbidden witness when
there is one.
"""

from linegame import catalog as cat
from linegame.graph import disjoint_union
from linegame.recognizer import perfectness_verdict

GRAPHS = {
    "candy (4,2,3)": cat.graph_from_name("Candy(4,2,3)"),
    "two vases": disjoint_union(cat.graph_from_name("VaseOfFlowers(2)"), cat.graph_from_name("VaseOfFlowers(3)")),
    "full tree (3,4,5)": cat.graph_from_name("FullTree(3,4,5)"),
    "two satellites": disjoint_union(cat.graph_from_name("Satellite(2,2)"), cat.graph_from_name("Satellite(2,3)")),
    "P6": cat.path(6),
    "C5": cat.cycle(5),
    "K4": cat.complete(4),
}

for name, g in GRAPHS.items():
    pv = perfectness_verdict(g)
    print(f"{name}: line perfect {pv.line_perfect}")
    for code, ok in pv.line_xy.items():
        extra = f" witness {pv.witnesses[code][0]}" if code in pv.witnesses else ""
        print(f"  [{code[0]},{code[1]}] {'yes' if ok else 'no ':3}  {', '.join(pv.classes[code])}{extra}")
